#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prank/errors.hpp"

namespace prank {

/// Arithmetic context for F_{p^k}, p an odd prime, k >= 1.
///
/// Elements are encoded as integers in [0, q), q = p^k, whose base-p digits
/// are the coefficients of the residue polynomial, little-endian in the root
/// of the modulus.  The constant polynomials are encoded by the values
/// 0..p-1, so the encoding of F_p is literally a subset of the encoding of
/// every extension of F_p; lifting along F_p -> F_{p^k} is the identity on
/// encodings.
///
/// Contexts are interned: get() returns a stable pointer, and two values
/// belong to the same field iff their context pointers are equal.
class FieldCtx {
 public:
  /// Context with the default modulus: the monic irreducible of degree k
  /// over F_p whose coefficient vector (c_0,...,c_{k-1}) encodes, base p,
  /// to the smallest integer.
  static const FieldCtx* get(uint32_t p, uint32_t k);

  /// Context with an explicit monic modulus; coeffs = (c_0,...,c_k),
  /// little-endian, c_k = 1, irreducible over F_p.
  static const FieldCtx* get(uint32_t p, const std::vector<uint32_t>& modulus);

  uint32_t p() const { return p_; }
  uint32_t degree() const { return k_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    return tab_ ? add_[size_t(a) * q_ + b] : add_slow(a, b);
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return tab_ ? mul_[size_t(a) * q_ + b] : mul_slow(a, b);
  }
  uint32_t neg(uint32_t a) const { return neg_[a]; }

  /// Multiplicative inverse; inv(0) is a domain error.
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("FieldCtx::inv: zero has no inverse");
    return inv_[a];
  }

  /// a^p, the Frobenius endomorphism.  Bijective; its k-fold iterate is the
  /// identity.
  uint32_t frobenius(uint32_t a) const { return frob_[a]; }

  uint32_t pow(uint32_t a, uint64_t e) const;

  /// Digit i of the encoding, i.e. coefficient of the i-th power of the
  /// modulus root.
  uint32_t coeff(uint32_t a, uint32_t i) const;
  uint32_t encode(const std::vector<uint32_t>& coeffs) const;

  /// True when `sub` is the prime field of this context.
  bool extends(const FieldCtx& sub) const { return sub.p_ == p_ && sub.k_ == 1; }

  std::string element_str(uint32_t a) const;

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx(uint32_t p, std::vector<uint32_t> modulus);

  uint32_t add_slow(uint32_t a, uint32_t b) const;
  uint32_t mul_slow(uint32_t a, uint32_t b) const;

  uint32_t p_, k_, q_;
  std::vector<uint32_t> modulus_;
  bool tab_;
  std::vector<uint32_t> add_, mul_;          // q*q tables when tab_
  std::vector<uint32_t> neg_, inv_, frob_;   // q tables, always
};

/// One element of F_{p^k}; a convenience wrapper pairing an encoding with
/// its context.  All operations require matching contexts.
class FieldElement {
 public:
  FieldElement(const FieldCtx* F, uint32_t encoded) : F_(F), v_(encoded) {
    if (encoded >= F->q()) throw std::domain_error("FieldElement: encoding out of range");
  }

  const FieldCtx* field() const { return F_; }
  uint32_t encoded() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return ctx(o), FieldElement(F_, F_->add(v_, o.v_)); }
  FieldElement operator-(const FieldElement& o) const { return ctx(o), FieldElement(F_, F_->sub(v_, o.v_)); }
  FieldElement operator*(const FieldElement& o) const { return ctx(o), FieldElement(F_, F_->mul(v_, o.v_)); }
  FieldElement operator/(const FieldElement& o) const { return ctx(o), FieldElement(F_, F_->mul(v_, F_->inv(o.v_))); }
  FieldElement operator-() const { return FieldElement(F_, F_->neg(v_)); }
  FieldElement inverse() const { return FieldElement(F_, F_->inv(v_)); }
  FieldElement frobenius() const { return FieldElement(F_, F_->frobenius(v_)); }
  bool operator==(const FieldElement& o) const { return F_ == o.F_ && v_ == o.v_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void ctx(const FieldElement& o) const {
    if (F_ != o.F_) throw context_error("FieldElement: mixed field contexts");
  }
  const FieldCtx* F_;
  uint32_t v_;
};

bool is_prime(uint64_t n);

/// p^e if it does not exceed `limit`, otherwise nothing.
bool fits_budget(uint64_t base, uint64_t exp, uint64_t limit, uint64_t* out = nullptr);

}  // namespace prank
