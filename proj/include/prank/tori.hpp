#pragma once

#include <optional>

#include "prank/spectra.hpp"

namespace prank {

/// A split torus, spanned by pairwise-commuting toral elements (t^[p] = t).
struct Torus {
  Subspace span;  // over F_p; the echelon basis rows are themselves toral
};

struct Root {
  Vec functional;  // F_p-values on the toral basis rows of the torus
  Subspace space;
};

/// Simultaneous ad-eigenspace decomposition relative to a maximal torus.
struct RootDecomposition {
  Torus torus;
  Subspace cartan;  // zero-weight space C_g(t)
  std::vector<Root> roots;
  size_t rho() const;    // max root space dimension (0 when no roots)
  size_t r_count() const { return roots.size(); }
  size_t r_t() const;    // F_p-rank of the root functionals
};

/// All x with x^[p] = x over F_{p^ext}, zero included, in canonical order.
std::vector<Vec> toral_elements(const Algebra& A, uint32_t ext = 1, const Budget& budget = {});

struct MaximalToriResult {
  std::vector<Torus> tori;  // all tori of maximal dimension, canonical order
  size_t mu = 0;
  bool exhaustive = true;
};

/// Complete search over commuting sets of F_p-toral elements; tori are the
/// non-extendable commuting spans of maximal dimension.
MaximalToriResult maximal_tori(const Algebra& A, const Budget& budget = {}, size_t torus_cap = 10000);

RootDecomposition root_decomposition(const Algebra& A, const Torus& t);

/// (rho, r) computed per maximal torus; all values must agree, otherwise an
/// invariant_violation is raised (never silently resolved).
struct RhoRResult {
  size_t rho, r_count;
  std::vector<std::pair<size_t, size_t>> per_torus;
};
RhoRResult rho_r_invariance(const Algebra& A, const MaximalToriResult& mt);

struct GenericallyToralResult {
  bool generically_toral;
  std::optional<Torus> witness;  // first self-centralizing maximal torus
};
GenericallyToralResult is_generically_toral(const Algebra& A, const MaximalToriResult& mt);

/// Minimal centralizer dimension over the found maximal tori.  Exact for
/// generically toral algebras; otherwise only a bound (Cartan subalgebras
/// not of this form are not searched).
size_t rank_from_tori(const Algebra& A, const MaximalToriResult& mt);

/// ker(alpha) as a subspace of the ambient space (a subtorus of t).
Subspace root_kernel(const RootDecomposition& d, const Root& alpha);

/// Every F_p-point x of every root space satisfies x^[p] in ker(alpha)?
struct Gt2Result {
  bool holds;
  std::optional<Vec> witness;  // a root vector violating the inclusion
};
Gt2Result gt2_check(const Algebra& A, const RootDecomposition& d);

/// 1-section: cartan + sum of the root spaces of all F_p-multiples of alpha.
Subspace one_section(const Algebra& A, const RootDecomposition& d, const Root& alpha);
bool is_solvable_root(const Algebra& A, const RootDecomposition& d, const Root& alpha);

/// Certificate that the algebra is freely generated: a maximal torus t and a
/// root subset S with (a) [g_a, g_-a] != 0 for a in S, (b) t equal to the
/// direct sum of those bracket spans, and (c) the algebra generated, as a
/// Lie algebra, by the root spaces g_a and g_-a, a in S.
struct FreelyGeneratedCertificate {
  Torus torus;
  std::vector<Vec> root_subset;  // functionals
};
std::optional<FreelyGeneratedCertificate> freely_generated_certificate(const Algebra& A,
                                                                       const MaximalToriResult& mt);

/// The full invariant record of one algebra.
struct InvariantProfile {
  size_t dim = 0;
  uint32_t p = 0;
  size_t mu = 0;
  size_t rk = 0;
  bool rk_lower_bound_only = false;
  size_t rho = 0;
  size_t r_count = 0;
  size_t r_t = 0;
  size_t center_dim = 0;
  size_t toral_radical_dim = 0;
  bool generically_toral = false;
  bool solvable = false;
  bool nilpotent = false;
  bool perfect = false;
  uint32_t p_rank = 0;
  uint32_t p_rank_ext = 1;
  bool p_rank_exhaustive = true;
  size_t tori_count = 0;
  bool tori_exhaustive = true;
};

InvariantProfile invariant_profile(const Algebra& A, uint32_t rank_ext = 1,
                                   const Budget& budget = {}, Work* work = nullptr);

}  // namespace prank
