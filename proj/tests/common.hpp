// shared test helpers: corpus loading and random front generation
#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rulinglab/front.hpp"

namespace rltest {

inline std::string corpus_path(const std::string& name) {
  return std::string(RL_CORPUS_DIR) + "/" + name;
}

inline rulinglab::FrontDiagram load(const std::string& name) {
  std::ifstream in(corpus_path(name));
  if (!in) throw std::runtime_error("cannot open corpus file " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return rulinglab::FrontDiagram::from_text(ss.str());
}

// random closed front with `nverts` vertices drawn from `shapes`, at most
// `max_x` crossings and at most 6 live strands; returns false when the walk
// fails to close up
inline bool random_front(std::mt19937& rng,
                         const std::vector<std::pair<int, int>>& shapes, int nverts,
                         int max_x, rulinglab::FrontDiagram* out) {
  using rulinglab::Event;
  rulinglab::FrontDiagram d;
  int n = 0, placed = 0, nx = 0;
  std::uniform_int_distribution<int> kind(0, 9);
  for (int step = 0; step < 18; ++step) {
    int k = kind(rng);
    if (placed < nverts && n >= 1 && k < 3) {
      auto [lv, rv] = shapes[rng() % shapes.size()];
      if (lv <= n) {
        int p = 1 + (int)(rng() % (n - lv + 1));
        d.events.push_back(Event::v(p, placed));
        d.vertices.push_back({lv, rv, "v" + std::to_string(placed)});
        placed++;
        n += rv - lv;
        continue;
      }
    }
    if (k < 5 && n + 2 <= 6) {
      d.events.push_back(Event::lc(1 + (int)(rng() % (n + 1))));
      n += 2;
    } else if (k < 7 && n >= 2 && nx < max_x) {
      d.events.push_back(Event::x(1 + (int)(rng() % (n - 1))));
      nx++;
    } else if (n >= 2) {
      d.events.push_back(Event::rc(1 + (int)(rng() % (n - 1))));
      n -= 2;
    }
    if (n == 0 && placed == nverts && step > 3) break;
  }
  while (n >= 2) {
    d.events.push_back(Event::rc(1));
    n -= 2;
  }
  if (n != 0 || placed != nverts || !d.ok()) return false;
  *out = d;
  return true;
}

}  // namespace rltest
