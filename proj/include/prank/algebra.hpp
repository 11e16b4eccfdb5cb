#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "prank/linalg.hpp"

namespace prank {

class Algebra;
struct AlgebraQuotient;
struct EmbeddedSubalgebra;

/// Axiom check outcome.  Empty report == valid restricted Lie algebra.
struct ValidationReport {
  std::vector<std::array<size_t, 3>> jacobi_failures;  // basis triples i<j<l
  std::vector<size_t> restricted_failures;             // basis indices with ad(b^[p]) != (ad b)^p
  bool ok() const { return jacobi_failures.empty() && restricted_failures.empty(); }
};

/// A finite-dimensional restricted Lie algebra over F_p, given by structure
/// constants on a fixed basis together with the p-map images of the basis.
///
/// The bracket table is stored for pairs i < j only, so antisymmetry and
/// [b_i, b_i] = 0 hold by shape.  The p-map on arbitrary elements is the
/// Jacobson extension of the basis values (see pmap()).
///
/// Instances are immutable; every operation below is const and safe for
/// concurrent use.  Elements may have coordinates over any extension of the
/// prime field: operations accept vectors over any FieldCtx with the same p
/// and lift the structure constants implicitly.
class Algebra {
 public:
  Algebra(const FieldCtx* Fp, std::vector<std::string> basis_names,
          std::vector<std::array<size_t, 2>> bracket_pairs, std::vector<Vec> bracket_values,
          std::vector<Vec> pmap_basis);

  const FieldCtx* field() const { return F_; }
  uint32_t p() const { return F_->p(); }
  size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }

  /// [b_i, b_j] as a coordinate vector over K (any order of i, j).
  Vec bracket_basis(size_t i, size_t j, const FieldCtx* K) const;
  const Vec& pmap_basis(size_t i) const { return pmap_[i]; }

  /// Validation against the three axiom families: antisymmetry (structural),
  /// the Jacobi identity on all basis triples, and restrictedness
  /// ad(b_i^[p]) = (ad b_i)^p on the basis.  Computed once at construction.
  const ValidationReport& validation() const { return report_; }
  bool is_valid() const { return report_.ok(); }

  /// [x, y]; bilinear, antisymmetric.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad(x) = [x, -] in the basis of the coordinate field of x.
  Mat ad(const Vec& x) const;

  /// x^[p] via Jacobson's formula: the basis values are combined pairwise in
  /// index order using (a+b)^[p] = a^[p] + b^[p] + sum_i s_i(a,b), where
  /// i*s_i(a,b) is the T^{i-1} coefficient of ad(Ta+b)^{p-1}(a), and
  /// (c*b_i)^[p] = c^p * b_i^[p].
  Vec pmap(const Vec& x) const;
  Vec pmap_iterate(const Vec& x, uint64_t times) const;
  bool is_p_nilpotent(const Vec& x) const;  // some p-map iterate vanishes

  // --- subalgebra operators (all over the prime field) -------------------

  Subspace center() const;
  Subspace centralizer(const Vec& x) const;
  Subspace centralizer_of_set(const Subspace& s) const;

  /// Smallest p-subalgebra containing x: span of x, x^[p], x^[p^2], ...
  Subspace p_closure(const Vec& x) const;

  /// The maximal toral ideal: the stabilized image of the p-map iterated on
  /// the center (on which the p-map is linear), i.e. the semisimple part of
  /// the center.  Always contained in the center.
  Subspace toral_radical() const;

  Subspace derived() const;
  std::vector<size_t> derived_series_dims() const;        // dims until stable
  std::vector<size_t> lower_central_series_dims() const;  // dims until stable
  bool is_solvable() const;
  bool is_nilpotent() const;
  bool is_perfect() const;
  bool is_abelian() const;
  /// Abelian with bijective p-map.
  bool is_torus() const;

  /// Span of pairwise brackets of basis rows of a and b.
  Subspace bracket_span(const Subspace& a, const Subspace& b) const;

  /// Closure of the span of the given elements under bracket (and under the
  /// p-map when with_pmap is set).
  Subspace subalgebra_generated(const std::vector<Vec>& gens, bool with_pmap = true) const;

  /// True when s is closed under bracket with the whole algebra (ideal) and
  /// under the p-map on its basis.
  bool is_p_ideal(const Subspace& s) const;
  bool is_p_subalgebra(const Subspace& s) const;

  /// Derived series of a bracket-closed subspace; solvable iff it reaches 0.
  bool subspace_solvable(const Subspace& s) const;

  /// Quotient by a p-ideal, on the canonical complement spanned by the
  /// non-pivot coordinates of the ideal's echelon basis.
  AlgebraQuotient quotient(const Subspace& ideal) const;

  /// A bracket- and p-closed subspace as an algebra in its own right.
  EmbeddedSubalgebra subalgebra_as_algebra(const Subspace& s) const;

  bool same_tables(const Algebra& o) const;
  /// Basis change b_i -> b_{perm[i]}; used for invariance tests.
  Algebra permuted(const std::vector<size_t>& perm) const;

 private:
  void ensure_valid() const;
  size_t tri(size_t i, size_t j) const { return i * dim_ + j; }  // i < j

  const FieldCtx* F_;
  size_t dim_;
  std::vector<std::string> names_;
  std::vector<Vec> table_;  // dense i<j table, tri-indexed; zero rows elided as empty
  std::vector<Vec> pmap_;
  ValidationReport report_;
};

struct AlgebraQuotient {
  Algebra alg;
  Mat projection;                  // quotient coordinates of ambient vectors
  std::vector<size_t> complement;  // ambient coordinates carried by the quotient basis
  Vec project(const Vec& x) const { return projection.lifted(x.field()).apply(x); }
};

struct EmbeddedSubalgebra {
  Algebra alg;
  Mat inclusion;  // rows: images of the sub-basis in ambient coordinates
};

}  // namespace prank
