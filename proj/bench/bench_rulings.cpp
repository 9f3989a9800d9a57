// Benchmark: OpenMP-parallel ruling kernels against the single-thread run.
// Both paths use the same deterministic merge order, so results must match
// bit for bit; the benchmark verifies that while timing.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef RULINGLAB_OPENMP
#include <omp.h>
#endif

#include "rulinglab/resolve.hpp"
#include "rulinglab/ruling.hpp"

using namespace rulinglab;
using Clock = std::chrono::steady_clock;

namespace {

FrontDiagram padded_half_twist(int b, int strands) {
  FrontDiagram d;
  d.left = d.right = strands;
  for (BraidGen g : half_twist(b)) d.events.push_back(Event::x(g.i));
  return d;
}

double seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F, class R>
void run(F&& f, R* out, double* sec) {
  auto t0 = Clock::now();
  *out = f();
  *sec = seconds(t0);
}

void set_threads(int n) {
#ifdef RULINGLAB_OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef RULINGLAB_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  int b = argc > 1 ? std::atoi(argv[1]) : 4;
  FrontDiagram delta = padded_half_twist(b, 2 * b);

  // a theta-like graph whose double exercises pair_ruling_polynomial
  FrontDiagram theta;
  theta.events = {Event::lc(1), Event::v(1, 0), Event::v(1, 1), Event::rc(1)};
  theta.vertices = {{1, 3, "a"}, {3, 1, "b"}};
  DoubleResult dd = double_diagram(theta);

  int hw = max_threads();
  std::printf("threads available: %d\n", hw);

  TransferMatrix tm1, tmN;
  HalfLaurent pr1, prN;
  double s_tm1, s_tmN, s_pr1, s_prN;

  set_threads(1);
  run([&] { return transfer_matrix(delta, 1); }, &tm1, &s_tm1);
  run([&] { return pair_ruling_polynomial(dd.pair, 1, dd.blocks); },
      &pr1, &s_pr1);
  set_threads(hw);
  run([&] { return transfer_matrix(delta, 1); }, &tmN, &s_tmN);
  run([&] { return pair_ruling_polynomial(dd.pair, 1, dd.blocks); },
      &prN, &s_prN);

  bool same = tm1 == tmN && pr1 == prN;
  std::printf("transfer_matrix  Delta_%d padded to %d strands (%zux%zu):\n", b, 2 * b,
              tm1.rows.size(), tm1.cols.size());
  std::printf("  1 thread  %.3fs\n  %d threads %.3fs  (x%.2f)\n", s_tm1, hw, s_tmN,
              s_tmN > 0 ? s_tm1 / s_tmN : 0.0);
  std::printf("pair_ruling_polynomial of the doubled theta graph:\n");
  std::printf("  1 thread  %.3fs\n  %d threads %.3fs  (x%.2f)\n", s_pr1, hw, s_prN,
              s_prN > 0 ? s_pr1 / s_prN : 0.0);
  std::printf("results identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
