// prank: exact invariants of restricted Lie algebras over small finite
// fields.  Algebra descriptions go in and out as JSON; see README.md.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "prank/report.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitHarness = 5;

prank::Budget budget_from_env() {
  prank::Budget b;
  if (const char* env = std::getenv("PRANK_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.max_points = v;
  }
  return b;
}

prank::AlgebraSpec load_or_exit(const std::string& path) {
  try {
    return prank::load_algebra_spec(path);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::exit(kExitParse);
  } catch (const prank::shape_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::exit(kExitParse);
  } catch (const prank::precondition_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::exit(kExitParse);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kExitParse);
  }
}

void require_valid(const prank::AlgebraSpec& spec) {
  if (!spec.alg.is_valid()) {
    std::cerr << "validation failed:\n"
              << prank::validation_json(spec.alg.validation()).dump(2) << "\n";
    std::exit(kExitValidation);
  }
}

void emit(const prank::ordered_json& doc, bool text) {
  if (text) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << doc.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of restricted Lie algebras over F_{p^k}"};
  app.require_subcommand(1);
  app.fallthrough();
  prank::Budget budget = budget_from_env();
  bool text = false;
  app.add_flag("--text", text, "pretty-print JSON output");

  std::string file;
  uint32_t ext = 1;
  size_t want_r = 0;

  auto* cmd_check = app.add_subcommand("check", "validate an algebra file against the axioms");
  cmd_check->add_option("file", file)->required();

  auto* cmd_report = app.add_subcommand("report", "full invariant report");
  cmd_report->add_option("file", file)->required();
  cmd_report->add_option("--ext", ext, "extension degree for enumerations");

  auto* cmd_rank = app.add_subcommand("rank", "elementary abelian rank and witnesses");
  cmd_rank->add_option("file", file)->required();
  cmd_rank->add_option("--r", want_r, "list witnesses of this dimension instead");
  cmd_rank->add_option("--ext", ext, "extension degree");

  std::string cat_name, emit_path;
  uint32_t cat_p = 5;
  size_t cat_param = 0;
  bool has_param = false;
  auto* cmd_catalog = app.add_subcommand("catalog", "emit a built-in algebra as a spec file");
  cmd_catalog->add_option("name", cat_name)->required();
  cmd_catalog->add_option("--p", cat_p, "characteristic")->required();
  cmd_catalog->add_option("--param", cat_param, "n or m where applicable")->each([&](const std::string&) {
    has_param = true;
  });
  cmd_catalog->add_option("--emit", emit_path, "write to this path instead of stdout");

  auto* cmd_cohomology = app.add_subcommand("cohomology", "H^1/H^2 dimensions and representatives");
  cmd_cohomology->add_option("file", file)->required();

  auto* cmd_classify = app.add_subcommand("classify", "rank-one classification verdict");
  cmd_classify->add_option("file", file)->required();

  uint64_t s_dim = 0, s_mu = 0, s_rk = 0, s_center = 0, s_p = 0;
  bool s_generic = false;
  auto* cmd_saturation = app.add_subcommand("saturation", "2-saturation dimension bound check");
  cmd_saturation->add_option("--dim", s_dim)->required();
  cmd_saturation->add_option("--mu", s_mu)->required();
  cmd_saturation->add_option("--rk", s_rk)->required();
  cmd_saturation->add_option("--center", s_center)->required();
  cmd_saturation->add_option("--p", s_p)->required();
  cmd_saturation->add_flag("--generic", s_generic, "the algebra is generically toral");

  std::string suite = "all";
  uint32_t harness_p = 5;
  auto* cmd_harness = app.add_subcommand("harness", "run a verification suite over the catalog");
  cmd_harness->add_option("--suite", suite, "cr4|cr10|cr11|cr6|lr1|cr1_2|cr3_2|al1|all");
  cmd_harness->add_option("--p", harness_p, "characteristic")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_check) {
      auto spec = load_or_exit(file);
      prank::ordered_json out = prank::validation_json(spec.alg.validation());
      emit(out, text);
      return spec.alg.is_valid() ? 0 : kExitValidation;
    }
    if (*cmd_report) {
      auto spec = load_or_exit(file);
      require_valid(spec);
      uint32_t use_ext = cmd_report->count("--ext") ? ext : spec.default_ext;
      emit(prank::build_report(spec.name, spec.alg, use_ext, budget), text);
      return 0;
    }
    if (*cmd_rank) {
      auto spec = load_or_exit(file);
      require_valid(spec);
      prank::ordered_json out;
      if (want_r > 0) {
        auto witnesses = prank::elementary_witnesses(spec.alg, want_r, ext, budget);
        out["r"] = want_r;
        out["ext"] = ext;
        out["count"] = witnesses.size();
        prank::ordered_json list = prank::ordered_json::array();
        for (const auto& w : witnesses) {
          prank::ordered_json rows = prank::ordered_json::array();
          for (size_t i = 0; i < w.dim(); ++i) {
            std::vector<uint32_t> row(w.ambient());
            for (size_t j = 0; j < w.ambient(); ++j) row[j] = w.basis_row(i)[j];
            rows.push_back(row);
          }
          list.push_back(rows);
        }
        out["witnesses"] = list;
      } else {
        prank::RankResult rank = prank::elementary_rank(spec.alg, ext, budget);
        out["value"] = rank.rank;
        out["ext"] = rank.ext;
        out["exhaustive"] = rank.exhaustive;
      }
      emit(out, text);
      return 0;
    }
    if (*cmd_catalog) {
      prank::Algebra alg = prank::catalog::build(
          cat_name, cat_p, has_param ? std::optional<size_t>(cat_param) : std::nullopt);
      prank::ordered_json doc = prank::serialize_algebra_spec(cat_name, alg);
      if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        out << doc.dump(2) << "\n";
      } else {
        emit(doc, text);
      }
      return 0;
    }
    if (*cmd_cohomology) {
      auto spec = load_or_exit(file);
      require_valid(spec);
      emit(prank::cohomology_json(prank::cohomology(spec.alg)), text);
      return 0;
    }
    if (*cmd_classify) {
      auto spec = load_or_exit(file);
      require_valid(spec);
      try {
        emit(prank::verdict_json(prank::classify_rank_one(spec.alg, budget)), text);
      } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
      }
      return 0;
    }
    if (*cmd_saturation) {
      if (!prank::is_prime(s_p) || s_p < 3) {
        std::cerr << "error: p must be a prime >= 3\n";
        return kExitParse;
      }
      bool ok = prank::saturation_bound(s_dim, s_mu, s_rk, s_center, s_p, s_generic);
      prank::ordered_json out;
      out["two_saturated_by_bound"] = ok;
      emit(out, text);
      return 0;
    }
    if (*cmd_harness) {
      prank::HarnessReport rep = prank::theorem_harness(suite, harness_p, budget);
      emit(prank::harness_json(rep), text);
      return rep.all_pass() ? 0 : kExitHarness;
    }
  } catch (const prank::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const prank::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const prank::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
