#pragma once

#include "prank/cohomology.hpp"
#include "prank/specfile.hpp"
#include "prank/tori.hpp"
#include "prank/verdict.hpp"

namespace prank {

/// The full invariant report for one algebra: profile, nullcone and rank
/// data with extension degrees and exhaustiveness flags, the per-torus root
/// table, cohomology dimensions, and the classification verdict.
///
/// Reports are canonical: fixed key order, canonically sorted arrays, and
/// deterministic work counters instead of wall-clock times, so two runs on
/// the same input are byte-identical.  Sections whose enumeration would
/// exceed the budget carry {"skipped": "capacity"} instead of data.
ordered_json build_report(const std::string& name, const Algebra& alg, uint32_t ext,
                          const Budget& budget = {});

ordered_json profile_json(const InvariantProfile& prof);
ordered_json fingerprint_json(const Fingerprint& fp);
ordered_json verdict_json(const Verdict& v);
ordered_json harness_json(const HarnessReport& rep);
ordered_json validation_json(const ValidationReport& rep);
ordered_json cohomology_json(const CohomologyReport& rep);

}  // namespace prank
