// ruling-lab: command-line front end for the bordered-front toolkit.
//
// Exit codes: 0 success / agreement, 1 computational disagreement,
// 2 input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#ifdef RULINGLAB_OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "rulinglab/dga.hpp"
#include "rulinglab/front.hpp"
#include "rulinglab/kauffman.hpp"
#include "rulinglab/maslov.hpp"
#include "rulinglab/resolve.hpp"
#include "rulinglab/ruling.hpp"

using nlohmann::json;
using namespace rulinglab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FrontDiagram load(const std::string& path) {
  std::string text = slurp(path);
  return FrontDiagram::from_text(text);
}

FrontDiagram load_valid(const std::string& path) {
  FrontDiagram d = load(path);
  auto errs = d.validate();
  if (!errs.empty()) throw std::runtime_error(path + ": " + errs.front());
  return d;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += "g" + std::to_string(w[i]);
  }
  return s;
}

json tm_json(const TransferMatrix& m) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& r : m.rows) rows.push_back(matching_str(r));
  for (const auto& c : m.cols) cols.push_back(matching_str(c));
  for (const auto& row : m.entry) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(e.str());
    entries.push_back(jr);
  }
  return json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

int cmd_corpus_verify(const std::string& dir, bool as_json) {
  json manifest = json::parse(slurp(dir + "/manifest.json"));
  bool all_ok = true;
  json report = json::array();
  for (const auto& entry : manifest.at("entries")) {
    std::string name = entry.at("name");
    std::string file = dir + "/" + entry.at("file").get<std::string>();
    json item{{"name", name}};
    std::vector<std::string> bad;
    FrontDiagram d;
    bool parsed = true;
    try {
      d = load(file);
    } catch (const std::exception& e) {
      parsed = false;
      bad.push_back(std::string("parse: ") + e.what());
    }
    bool expect_valid = entry.value("valid", true);
    if (parsed) {
      bool is_valid = d.ok();
      if (is_valid != expect_valid) bad.push_back("validity mismatch");
      if (is_valid) {
        if (entry.contains("ruling_rho1")) {
          HalfLaurent want = HalfLaurent::parse(entry["ruling_rho1"]);
          HalfLaurent got = ruling_polynomial(d, 1);
          if (got != want)
            bad.push_back("ruling_rho1: got " + got.str() + ", want " + want.str());
        }
        if (entry.contains("tb")) {
          int got = total_tb(d);
          if (got != entry["tb"].get<int>())
            bad.push_back("tb: got " + std::to_string(got));
        }
        if (entry.contains("kauffman_shifted")) {
          MultiLaurent f = kauffman_normalized(d) * MultiLaurent::z_half(-2);
          std::string got = ml_substitute_AB(f).str();
          if (got != entry["kauffman_shifted"].get<std::string>())
            bad.push_back("kauffman_shifted: got " + got);
        }
        if (entry.contains("equivalent_to")) {
          std::string partner = dir + "/" + entry["equivalent_to"].get<std::string>();
          FrontDiagram p = load_valid(partner);
          if (ruling_polynomial(d, 1) != ruling_polynomial(p, 1))
            bad.push_back("equivalence partner has different ruling polynomial");
        }
      }
    } else if (!expect_valid) {
      bad.clear();  // unparseable and expected-invalid counts as a pass
    }
    item["ok"] = bad.empty();
    item["problems"] = bad;
    report.push_back(item);
    if (!bad.empty()) all_ok = false;
    if (!as_json)
      std::cout << (bad.empty() ? "ok      " : "MISMATCH") << "  " << name
                << (bad.empty() ? "" : ": " + bad.front()) << "\n";
  }
  if (as_json) std::cout << json{{"entries", report}, {"ok", all_ok}}.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("RULING_LAB_THREADS")) {
#ifdef RULINGLAB_OPENMP
    int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
#else
    (void)t;
#endif
  }

  CLI::App app{"ruling-lab: ruling polynomials, Kauffman-Vogel polynomials, "
               "and Chekanov-Eliashberg DGAs for bordered Legendrian graph fronts"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string file, phi_s, psi_s, ring = "gf2", dir = "corpus";
  int rho = 1, dga_rho = 0, shuffle_n = 0;
  unsigned seed = 0;
  bool raw = false, normalized = false, substitute = false, list_moves = false;

  auto* c_validate = app.add_subcommand("validate", "check a diagram file");
  c_validate->add_option("file", file)->required();

  auto* c_rulings = app.add_subcommand("rulings", "ruling polynomial");
  c_rulings->add_option("file", file)->required();
  c_rulings->add_option("--rho", rho, "grading modulus (0 = Z)");
  c_rulings->add_option("--phi", phi_s, "left border matching, e.g. 1-2,3-4");
  c_rulings->add_option("--psi", psi_s, "right border matching");

  auto* c_matrix = app.add_subcommand("ruling-matrix", "full transfer matrix");
  c_matrix->add_option("file", file)->required();
  c_matrix->add_option("--rho", rho);

  auto* c_resolve = app.add_subcommand("resolve", "marked vertex resolutions");
  c_resolve->add_option("file", file)->required();
  c_resolve->add_option("--rho", rho);

  auto* c_close = app.add_subcommand("close", "glue border vertices");
  c_close->add_option("file", file)->required();

  auto* c_kauffman = app.add_subcommand("kauffman", "Kauffman polynomial");
  c_kauffman->add_option("file", file)->required();
  c_kauffman->add_flag("--raw", raw, "unnormalized [L]");
  c_kauffman->add_flag("--normalized", normalized, "a^{-w}[L] (default)");
  c_kauffman->add_flag("--substitute", substitute, "A <- z-1, B <- -1");

  auto* c_kv = app.add_subcommand("check-kv", "ruling coefficient check");
  c_kv->add_option("file", file)->required();

  auto* c_tb = app.add_subcommand("tb", "total Thurston-Bennequin number");
  c_tb->add_option("file", file)->required();

  auto* c_dga = app.add_subcommand("dga", "Chekanov-Eliashberg presentation");
  c_dga->add_option("file", file)->required();
  c_dga->add_option("--ring", ring, "gf2 (z unsupported)");
  c_dga->add_option("--rho", dga_rho);

  auto* c_aug = app.add_subcommand("aug", "find a rho-graded augmentation");
  c_aug->add_option("file", file)->required();
  c_aug->add_option("--rho", rho);

  auto* c_equiv = app.add_subcommand("check-equiv", "rulings vs augmentations");
  c_equiv->add_option("file", file)->required();
  c_equiv->add_option("--rho", rho);

  auto* c_moves = app.add_subcommand("moves", "enumerate or apply moves");
  c_moves->add_option("file", file)->required();
  c_moves->add_option("--shuffle", shuffle_n, "number of random moves");
  c_moves->add_option("--seed", seed, "random seed");
  c_moves->add_flag("--list", list_moves, "list applicable moves and exit");

  auto* c_corpus = app.add_subcommand("corpus-verify", "check stored expectations");
  c_corpus->add_option("dir", dir, "corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_validate) {
      FrontDiagram d = load(file);
      auto errs = d.validate();
      if (as_json) {
        std::cout << json{{"valid", errs.empty()}, {"violations", errs}}.dump(2)
                  << "\n";
      } else if (errs.empty()) {
        std::cout << "ok\n";
      } else {
        for (const auto& e : errs) std::cout << "violation: " << e << "\n";
      }
      return errs.empty() ? 0 : 2;
    }

    if (*c_rulings) {
      FrontDiagram d = load_valid(file);
      Matching phi = phi_s.empty() ? Matching{} : parse_matching(phi_s);
      Matching psi = psi_s.empty() ? Matching{} : parse_matching(psi_s);
      HalfLaurent r = ruling_polynomial(d, rho, phi, psi);
      if (as_json)
        std::cout << json{{"rho", rho}, {"ruling_polynomial", r.str()}}.dump(2) << "\n";
      else
        std::cout << r.str() << "\n";
      return 0;
    }

    if (*c_matrix) {
      FrontDiagram d = load_valid(file);
      TransferMatrix m = transfer_matrix(d, rho);
      if (as_json) {
        std::cout << tm_json(m).dump(2) << "\n";
      } else {
        for (size_t i = 0; i < m.rows.size(); ++i)
          for (size_t j = 0; j < m.cols.size(); ++j)
            std::cout << matching_str(m.rows[i]) << " | " << matching_str(m.cols[j])
                      << " : " << m.entry[i][j].str() << "\n";
      }
      return 0;
    }

    if (*c_resolve) {
      FrontDiagram d = load_valid(file);
      json out = json::array();
      for (const auto& res : full_resolutions(d, rho)) {
        std::string phis;
        for (size_t v = 0; v < res.phis.size(); ++v)
          phis += (v ? "; " : "") + matching_str(res.phis[v]);
        if (as_json)
          out.push_back({{"phis", phis}, {"diagram", res.diagram.to_text()}});
        else
          std::cout << "# " << phis << "\n" << res.diagram.to_text() << "\n";
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*c_close) {
      FrontDiagram d = load_valid(file);
      FrontDiagram c = close_diagram(d);
      if (as_json)
        std::cout << json{{"diagram", c.to_text()}}.dump(2) << "\n";
      else
        std::cout << c.to_text();
      return 0;
    }

    if (*c_kauffman) {
      if (raw && normalized)
        throw std::runtime_error("--raw and --normalized conflict");
      FrontDiagram d = load_valid(file);
      MultiLaurent v = raw ? kauffman_unnormalized(ng_resolution(d).pd)
                           : kauffman_normalized(d);
      if (substitute) v = ml_substitute_AB(v);
      if (as_json)
        std::cout << json{{"kauffman", v.str()}}.dump(2) << "\n";
      else
        std::cout << v.str() << "\n";
      return 0;
    }

    if (*c_kv) {
      FrontDiagram d = load_valid(file);
      KvReport r = check_ruling_coefficient(d);
      if (as_json)
        std::cout << json{{"ruling", r.lhs.str()},
                          {"coefficient", r.rhs.str()},
                          {"equal", r.equal}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "ruling      = " << r.lhs.str() << "\n"
                  << "coefficient = " << r.rhs.str() << "\n"
                  << (r.equal ? "equal" : "NOT EQUAL") << "\n";
      return r.equal ? 0 : 1;
    }

    if (*c_tb) {
      FrontDiagram d = load_valid(file);
      int w = total_tb(d);
      if (as_json)
        std::cout << json{{"tb", w}}.dump(2) << "\n";
      else
        std::cout << w << "\n";
      return 0;
    }

    if (*c_dga) {
      if (ring == "z")
        throw std::runtime_error("--ring z: signed differentials not implemented");
      if (ring != "gf2") throw std::runtime_error("unknown ring: " + ring);
      FrontDiagram d = load_valid(file);
      DgaPresentation p = ce_dga(d, dga_rho);
      if (as_json) {
        json gens = json::array();
        for (size_t g = 0; g < p.diff.size(); ++g) {
          json words = json::array();
          for (const Word& w : p.diff[g]) words.push_back(word_str(w));
          gens.push_back({{"generator", "g" + std::to_string(g)},
                          {"grading", p.gradings[g]},
                          {"differential", words}});
        }
        std::cout << json{{"rho", dga_rho}, {"generators", gens}}.dump(2) << "\n";
      } else {
        for (size_t g = 0; g < p.diff.size(); ++g) {
          std::cout << "g" << g << "  |.| = " << p.gradings[g] << "  d = ";
          if (p.diff[g].empty()) std::cout << "0";
          for (size_t i = 0; i < p.diff[g].size(); ++i)
            std::cout << (i ? " + " : "") << word_str(p.diff[g][i]);
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*c_aug) {
      FrontDiagram d = load_valid(file);
      DgaPresentation p = ce_dga(d, rho);
      auto aug = find_augmentation(p, rho);
      if (as_json) {
        json j{{"rho", rho}, {"exists", aug.has_value()}};
        if (aug) {
          json eps = json::array();
          for (char e : aug->eps) eps.push_back((int)e);
          j["epsilon"] = eps;
        }
        std::cout << j.dump(2) << "\n";
      } else if (aug) {
        std::cout << "epsilon =";
        for (size_t g = 0; g < aug->eps.size(); ++g)
          std::cout << " g" << g << "->" << (int)aug->eps[g];
        std::cout << "\n";
      } else {
        std::cout << "none\n";
      }
      return 0;
    }

    if (*c_equiv) {
      FrontDiagram d = load_valid(file);
      EquivReport r = check_equivalence(d, rho);
      if (as_json)
        std::cout << json{{"rho", rho},
                          {"ruling_exists", r.ruling_exists},
                          {"augmentation_exists", r.augmentation_exists},
                          {"agree", r.agree}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "ruling exists:       " << (r.ruling_exists ? "yes" : "no")
                  << "\naugmentation exists: "
                  << (r.augmentation_exists ? "yes" : "no") << "\n"
                  << (r.agree ? "agree" : "DISAGREE") << "\n";
      return r.agree ? 0 : 1;
    }

    if (*c_moves) {
      FrontDiagram d = load_valid(file);
      if (list_moves) {
        json out = json::array();
        for (const MoveSite& s : enumerate_moves(d)) {
          if (as_json)
            out.push_back({{"move", s.move},
                           {"slice", s.slice},
                           {"forward", s.forward}});
          else
            std::cout << s.move << " @ " << s.slice
                      << (s.forward ? " forward" : " backward") << "\n";
        }
        if (as_json) std::cout << out.dump(2) << "\n";
        return 0;
      }
      std::mt19937 rng(seed);
      for (int i = 0; i < shuffle_n; ++i) {
        auto sites = enumerate_moves(d);
        if (sites.empty()) continue;
        std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
        d = apply_move(d, sites[pick(rng)]);
      }
      if (as_json)
        std::cout << json{{"diagram", d.to_text()}}.dump(2) << "\n";
      else
        std::cout << d.to_text();
      return 0;
    }

    if (*c_corpus) return cmd_corpus_verify(dir, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
