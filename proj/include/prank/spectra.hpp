#pragma once

#include <optional>

#include "prank/algebra.hpp"

namespace prank {

/// Enumeration budget, counted in F_{p^k}-points of the ambient coordinate
/// space; enumerations refuse to start when p^(k*dim) exceeds it.
struct Budget {
  uint64_t max_points = 100'000'000ULL;
};

/// Deterministic work counters, reported in place of wall-clock times so
/// that reports stay byte-identical across runs.
struct Work {
  uint64_t pmap_evaluations = 0;
  uint64_t subspaces_built = 0;
};

/// F_{p^k}-rational points of the nullcone { x : x^[p] = 0 }.
struct NullconePoints {
  const Algebra* A;
  uint32_t ext;
  bool lines_only;
  /// Nonzero points (or one representative per line, first nonzero
  /// coordinate 1), sorted lexicographically by encoded coordinates.
  std::vector<Vec> points;
  bool exhaustive;
  /// Number of rational points including zero.
  uint64_t count_with_zero() const;
};

NullconePoints nullcone(const Algebra& A, uint32_t ext, bool lines_only = false,
                        const Budget& budget = {}, Work* work = nullptr);

/// An r-dimensional subspace with pairwise-commuting basis inside the
/// nullcone (hence elementary abelian as a subalgebra).
struct ElementaryWitness {
  Subspace space;
};

/// Definition-level recheck, independent of how the witness was found.
bool witness_is_valid(const Algebra& A, const Subspace& w);

/// All elementary abelian subspaces of dimension r over F_{p^ext},
/// deduplicated by canonical echelon form, in canonical order.
std::vector<Subspace> elementary_witnesses(const Algebra& A, size_t r, uint32_t ext,
                                           const Budget& budget = {}, Work* work = nullptr);

struct RankResult {
  uint32_t rank = 0;
  std::optional<Subspace> witness;  // canonical-first witness at the maximal r
  bool exhaustive = true;
  uint32_t ext = 1;
};

/// max { r : some r-dimensional elementary abelian subalgebra exists },
/// over F_{p^ext}-rational subspaces.
RankResult elementary_rank(const Algebra& A, uint32_t ext, const Budget& budget = {},
                           Work* work = nullptr);

struct SaturationResult {
  bool saturated;
  std::optional<Vec> counterexample;  // a nullcone point in no 2-dim witness
  uint32_t ext;
};

/// Does every nonzero nullcone point lie in a 2-dimensional elementary
/// abelian subalgebra (over F_{p^ext})?
SaturationResult is_two_saturated(const Algebra& A, uint32_t ext, const Budget& budget = {},
                                  Work* work = nullptr);

/// The two sufficient dimension bounds for 2-saturation, as pure integer
/// arithmetic: dim > p*(mu + rk), or, for generically toral algebras,
/// dim > p*(2*mu - 1 - dim C).
bool saturation_bound(uint64_t dim_g, uint64_t mu, uint64_t rk, uint64_t dim_center, uint64_t p,
                      bool generically_toral);

/// A nonzero commuting pair (u, v) in U x V over F_{p^k}, k <= max_ext,
/// if one exists at these extensions.  dim U must be 2.
std::optional<std::pair<Vec, Vec>> find_commuting_pair(const Algebra& A, const Subspace& U,
                                                       const Subspace& V, uint32_t max_ext,
                                                       const Budget& budget = {});

}  // namespace prank
