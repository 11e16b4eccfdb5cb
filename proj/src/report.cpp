#include "prank/report.hpp"

namespace prank {

namespace {

std::vector<uint32_t> vec_entries(const Vec& v) {
  std::vector<uint32_t> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

ordered_json subspace_rows(const Subspace& s) {
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < s.dim(); ++i) rows.push_back(vec_entries(s.basis_row(i)));
  return rows;
}

}  // namespace

ordered_json validation_json(const ValidationReport& rep) {
  ordered_json out;
  out["ok"] = rep.ok();
  ordered_json jf = ordered_json::array();
  for (const auto& t : rep.jacobi_failures) jf.push_back({t[0], t[1], t[2]});
  out["jacobi_failures"] = jf;
  out["restricted_failures"] = rep.restricted_failures;
  return out;
}

ordered_json profile_json(const InvariantProfile& prof) {
  ordered_json out;
  out["dim"] = prof.dim;
  out["p"] = prof.p;
  out["mu"] = prof.mu;
  out["rk"] = prof.rk;
  out["rk_lower_bound_only"] = prof.rk_lower_bound_only;
  out["rho"] = prof.rho;
  out["r_count"] = prof.r_count;
  out["r_t"] = prof.r_t;
  out["center_dim"] = prof.center_dim;
  out["toral_radical_dim"] = prof.toral_radical_dim;
  out["generically_toral"] = prof.generically_toral;
  out["solvable"] = prof.solvable;
  out["nilpotent"] = prof.nilpotent;
  out["perfect"] = prof.perfect;
  out["p_rank"] = prof.p_rank;
  out["p_rank_ext"] = prof.p_rank_ext;
  out["p_rank_exhaustive"] = prof.p_rank_exhaustive;
  out["tori_count"] = prof.tori_count;
  out["tori_exhaustive"] = prof.tori_exhaustive;
  return out;
}

ordered_json fingerprint_json(const Fingerprint& fp) {
  ordered_json out;
  out["dim"] = fp.dim;
  out["p"] = fp.p;
  out["center_dim"] = fp.center_dim;
  out["derived_dim"] = fp.derived_dim;
  out["toral_radical_dim"] = fp.toral_radical_dim;
  out["derived_series"] = fp.derived_series;
  out["lower_central_series"] = fp.lower_central_series;
  out["solvable"] = fp.solvable;
  out["nilpotent"] = fp.nilpotent;
  out["perfect"] = fp.perfect;
  out["nullcone_lines"] = fp.nullcone_lines;
  out["toral_nonzero"] = fp.toral_nonzero;
  return out;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json out;
  out["outcome"] = outcome_name(v.outcome);
  out["detail"] = v.detail;
  out["p_rank"] = v.p_rank;
  out["fingerprint"] = fingerprint_json(v.fp);
  if (v.iso) {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < v.iso->rows(); ++i) rows.push_back(vec_entries(v.iso->row(i)));
    out["iso"] = rows;
  } else {
    out["iso"] = nullptr;
  }
  return out;
}

ordered_json harness_json(const HarnessReport& rep) {
  ordered_json out;
  out["suite"] = rep.suite;
  out["p"] = rep.p;
  out["all_pass"] = rep.all_pass();
  ordered_json items = ordered_json::array();
  for (const auto& item : rep.items) {
    ordered_json j;
    j["check"] = item.check;
    j["algebra"] = item.algebra;
    j["pass"] = item.pass;
    j["detail"] = item.detail;
    items.push_back(j);
  }
  out["items"] = items;
  return out;
}

ordered_json cohomology_json(const CohomologyReport& rep) {
  ordered_json out;
  out["z1"] = rep.z1;
  out["z2"] = rep.z2;
  out["b2"] = rep.b2;
  out["h1"] = rep.h1;
  out["h2"] = rep.h2;
  ordered_json reps = ordered_json::array();
  for (const Vec& v : rep.h2_reps) reps.push_back(vec_entries(v));
  out["h2_representatives"] = reps;
  return out;
}

ordered_json build_report(const std::string& name, const Algebra& alg, uint32_t ext,
                          const Budget& budget) {
  Work work;
  ordered_json out;
  out["input"] = name;
  out["input_hash"] = canonical_hash(name, alg);
  out["validation"] = validation_json(alg.validation());

  ordered_json profile;
  try {
    profile = profile_json(invariant_profile(alg, ext, budget, &work));
  } catch (const capacity_error& e) {
    profile = ordered_json{{"skipped", "capacity"}, {"bound", e.bound}};
  }
  out["profile"] = profile;

  ordered_json nc_json;
  try {
    NullconePoints nc = nullcone(alg, ext, /*lines_only=*/true, budget, &work);
    nc_json["ext"] = nc.ext;
    nc_json["count"] = nc.count_with_zero();
    nc_json["lines"] = nc.points.size();
    nc_json["exhaustive"] = nc.exhaustive;
  } catch (const capacity_error& e) {
    nc_json = ordered_json{{"skipped", "capacity"}, {"bound", e.bound}};
  }
  out["nullcone"] = nc_json;

  ordered_json rank_json;
  try {
    RankResult rank = elementary_rank(alg, ext, budget, &work);
    rank_json["value"] = rank.rank;
    rank_json["ext"] = rank.ext;
    rank_json["exhaustive"] = rank.exhaustive;
    rank_json["witness"] = rank.witness ? subspace_rows(*rank.witness) : ordered_json(nullptr);
  } catch (const capacity_error& e) {
    rank_json = ordered_json{{"skipped", "capacity"}, {"bound", e.bound}};
  }
  out["rank"] = rank_json;

  ordered_json roots_json;
  try {
    MaximalToriResult mt = maximal_tori(alg, budget);
    roots_json["mu"] = mt.mu;
    roots_json["tori_count"] = mt.tori.size();
    roots_json["exhaustive"] = mt.exhaustive;
    ordered_json table = ordered_json::array();
    size_t listed = 0;
    for (const Torus& t : mt.tori) {
      if (listed++ >= 50) break;  // reports stay bounded; count above is exact
      RootDecomposition d = root_decomposition(alg, t);
      ordered_json row;
      row["torus"] = subspace_rows(t.span);
      row["cartan_dim"] = d.cartan.dim();
      ordered_json roots = ordered_json::array();
      for (const Root& r : d.roots) {
        ordered_json rj;
        rj["functional"] = vec_entries(r.functional);
        rj["space_dim"] = r.space.dim();
        roots.push_back(rj);
      }
      row["roots"] = roots;
      row["rho"] = d.rho();
      row["r"] = d.r_count();
      table.push_back(row);
    }
    roots_json["per_torus"] = table;
  } catch (const capacity_error& e) {
    roots_json = ordered_json{{"skipped", "capacity"}, {"bound", e.bound}};
  }
  out["roots"] = roots_json;

  ordered_json coh_json;
  try {
    coh_json = cohomology_json(cohomology(alg));
  } catch (const capacity_error& e) {
    coh_json = ordered_json{{"skipped", "capacity"}, {"bound", e.bound}};
  }
  out["cohomology"] = coh_json;

  ordered_json verdict_j;
  try {
    Verdict v = classify_rank_one(alg, budget);
    verdict_j = verdict_json(v);
  } catch (const std::domain_error&) {
    verdict_j = ordered_json{{"outcome", "Unclassified"},
                             {"detail", "p-rank exceeds 1; classification out of scope"},
                             {"iso", nullptr}};
  } catch (const capacity_error& e) {
    verdict_j = ordered_json{{"skipped", "capacity"}, {"bound", e.bound}};
  }
  out["verdict"] = verdict_j;

  // deterministic work counters in place of wall-clock readings keep two
  // runs on the same input byte-identical
  ordered_json timings;
  timings["pmap_evaluations"] = work.pmap_evaluations;
  timings["subspaces_built"] = work.subspaces_built;
  timings["unit"] = "work-counters";
  out["timings"] = timings;
  return out;
}

}  // namespace prank
