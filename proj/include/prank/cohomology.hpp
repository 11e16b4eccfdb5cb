#pragma once

#include <array>
#include <optional>

#include "prank/algebra.hpp"

namespace prank {

/// Alternating n-form with trivial coefficients, n in {1,2,3}, stored on
/// ordered basis tuples i < j (< l).
struct Cochain {
  const Algebra* A;
  int degree;
  Vec comps;  // length dim, C(dim,2) or C(dim,3) over F_p

  uint32_t at1(size_t i) const { return comps[i]; }
  uint32_t at2(size_t i, size_t j) const;           // sign-adjusted for any order
  uint32_t at3(size_t i, size_t j, size_t l) const; // requires i<j<l
};

size_t pair_index(size_t dim, size_t i, size_t j);                   // i < j
size_t triple_index(size_t dim, size_t i, size_t j, size_t l);       // i < j < l
size_t pair_count(size_t dim);
size_t triple_count(size_t dim);

Cochain make_cochain1(const Algebra& A, const Vec& comps);
Cochain make_cochain2(const Algebra& A, const Vec& comps);
/// From an antisymmetric matrix with zero diagonal.
Cochain cochain2_from_matrix(const Algebra& A, const Mat& m);

/// Chevalley-Eilenberg differential with trivial coefficients:
///   (df)(x,y)    = -f([x,y])
///   (dl)(x,y,z)  = -l([x,y],z) + l([x,z],y) - l([y,z],x)
/// Satisfies d(d(f)) = 0.
Cochain differential(const Cochain& c);

/// Matrix of d_1 : C^1 -> C^2, shape C(dim,2) x dim.
Mat d1_matrix(const Algebra& A);
/// Matrix of d_2 : C^2 -> C^3, shape C(dim,3) x C(dim,2).
Mat d2_matrix(const Algebra& A);

struct CohomologyReport {
  size_t z1, z2;  // cocycle dims in degrees 1, 2
  size_t b2;      // coboundary dim in degree 2
  size_t h1, h2;
  std::vector<Vec> h2_reps;  // canonical representative basis of H^2
};

/// Degree-limit guard: Lambda^3 must stay dense-friendly.
constexpr size_t kCohomologyDimCap = 32;

CohomologyReport cohomology(const Algebra& A);

/// dl == 0?  On failure returns the first witnessing basis triple.
std::pair<bool, std::array<size_t, 3>> is_cocycle(const Cochain& l);
/// l not in the image of d_1?
bool class_is_nonzero(const Cochain& l);

/// Solution space of the Leibniz system D[x,y] = [Dx,y] + [x,Dy], as a
/// subspace of dim^2-dimensional matrix space (row-major vectorization).
Subspace derivations(const Algebra& A);
/// Span of the ad-matrices.
Subspace inner_derivations(const Algebra& A);
size_t outer_derivation_dim(const Algebra& A);
bool matrix_is_derivation(const Algebra& A, const Mat& d);

Vec vectorize(const Mat& m);
Mat unvectorize(const Vec& v, size_t rows, size_t cols);

}  // namespace prank
