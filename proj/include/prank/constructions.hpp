#pragma once

#include "prank/algebra.hpp"
#include "prank/cohomology.hpp"

namespace prank {

/// p-semilinear map h -> c prescribed on the basis of h; extended by
/// f(sum c_i b_i) = sum c_i^p f(b_i).
struct SemilinearTwist {
  std::vector<Vec> values;  // one vector in the coordinates of c per basis element of h
  static SemilinearTwist zero(size_t h_dim, const FieldCtx* F, size_t c_dim);
};

/// Derivation data for a semidirect sum kd + h with d^[p] = s*d.
struct RestrictedDerivation {
  Mat matrix;             // action on h
  uint32_t p_image_scalar;  // s in d^[p] = s*d
};

/// Data of a one-dimensional central extension of `base` by a line kz:
/// bracket [(u,az),(v,bz)] = ([u,v], lambda(u,v) z), with prescribed basis
/// p-map values (b_i,0)^[p] = (b_i^[p], twist_i z) and z^[p] = c*z.
struct CocycleData {
  const Algebra* base;
  Mat lambda;                // antisymmetric, zero diagonal, over F_p
  Vec twist;                 // length dim(base): z-coefficients of basis p-images
  uint32_t central_pmap_scalar;
};

/// Product h x c with componentwise bracket, [h, c] = 0, and p-map
/// (x, c)^[p] = (x^[p], c^[p] + f(x)).  c must be a torus.
Algebra direct_product_twisted(const Algebra& h, const Algebra& c, const SemilinearTwist& f);

/// Semidirect sum kd + h for a restricted derivation d; the new basis
/// element comes first.  Validates the Leibniz rule on basis pairs, the
/// compatibility d(b^[p]) = (ad b)^{p-1}(d(b)) on the basis, and d^p = s*d.
Algebra semidirect(const Algebra& h, const RestrictedDerivation& d, const std::string& name = "d");

/// One-dimensional central extension; requires lambda to be a 2-cocycle.
/// Only basis p-map values are prescribed; values on mixed elements follow
/// from the Jacobson extension.
Algebra central_extension(const CocycleData& data, const std::string& z_name = "z");

}  // namespace prank
