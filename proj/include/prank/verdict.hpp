#pragma once

#include <optional>
#include <string>

#include "prank/catalog.hpp"
#include "prank/tori.hpp"

namespace prank {

/// Isomorphism-invariant pre-filter data; equal algebras under basis
/// permutation produce identical fingerprints.
struct Fingerprint {
  size_t dim = 0;
  uint32_t p = 0;
  size_t center_dim = 0;
  size_t derived_dim = 0;
  size_t toral_radical_dim = 0;
  std::vector<size_t> derived_series;
  std::vector<size_t> lower_central_series;
  bool solvable = false, nilpotent = false, perfect = false;
  int64_t nullcone_lines = -1;   // F_p-lines in the nullcone; -1 past budget
  int64_t toral_nonzero = -1;    // nonzero F_p-toral elements; -1 past budget

  bool operator==(const Fingerprint& o) const;
};

Fingerprint fingerprint(const Algebra& A, const Budget& budget = {});

/// Backtracking search for an isomorphism of restricted Lie algebras,
/// returned as the matrix sending A-coordinates to B-coordinates.  Images
/// are chosen for a generating set only, with per-element invariant classes
/// as a pre-filter and incremental bracket/p-map consistency pruning.
/// Capacity-capped at dimension 6.
std::optional<Mat> is_isomorphic(const Algebra& A, const Algebra& B, const Budget& budget = {});

/// Definition-level recheck of a claimed isomorphism, independent of the
/// search: invertibility plus bracket and p-map preservation on all basis
/// pairs.
bool verify_isomorphism(const Algebra& A, const Algebra& B, const Mat& phi);

struct Verdict {
  enum class Outcome {
    Sl2,
    Borel,
    BorelMinus,
    TorusTimesSl2,
    TorusSemidirectNilCyclic,
    Torus,
    Unclassified
  };
  Outcome outcome = Outcome::Unclassified;
  Fingerprint fp;
  std::optional<Mat> iso;     // explicit witness where one backs the verdict
  std::string detail;
  uint32_t p_rank = 0;
};

std::string outcome_name(Verdict::Outcome o);

/// Classification of algebras of p-rank <= 1 (at the working extension):
/// direct recognition of sl(2) and the Borel, the split torus x sl(2) shape,
/// the torus-semidirect-nil-cyclic shape (nullcone a single line with a
/// cyclic complement), and the quotient-by-center types.  Raises a domain
/// error when the p-rank exceeds 1.
Verdict classify_rank_one(const Algebra& A, const Budget& budget = {});

struct HarnessItem {
  std::string check;
  std::string algebra;
  bool pass;
  std::string detail;
};

struct HarnessReport {
  std::string suite;
  uint32_t p;
  std::vector<HarnessItem> items;
  bool all_pass() const;
};

/// Bundled verification suites over the catalog at a given p.  Suites:
/// cr4, cr10, cr11, cr6, lr1, cr1_2, cr3_2, al1, or "all".
HarnessReport theorem_harness(const std::string& suite, uint32_t p, const Budget& budget = {});

}  // namespace prank
