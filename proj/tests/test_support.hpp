#pragma once

// Shared helpers for the test suites: deterministic generators and the
// independent oracles the expected values are frozen against.

#include <optional>
#include <random>

#include "prank/algebra.hpp"

namespace prank::testsupport {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline uint32_t rand_scalar(std::mt19937_64& g, const FieldCtx* F) {
  return uint32_t(g() % F->q());
}

inline Vec rand_vec(std::mt19937_64& g, const FieldCtx* F, size_t n) {
  Vec v(F, n);
  for (size_t i = 0; i < n; ++i) v.set(i, rand_scalar(g, F));
  return v;
}

inline Mat rand_mat(std::mt19937_64& g, const FieldCtx* F, size_t rows, size_t cols) {
  Mat m(F, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.set(i, j, rand_scalar(g, F));
  return m;
}

// ---- oracle 1: Jacobson's formula via explicit polynomial matrices -------
//
// Independent of Algebra::pmap: represents ad(T a + b) as a matrix of
// polynomials in T, exponentiates it by repeated polynomial-matrix
// multiplication, and reads the s_i off the coefficient vectors.  Summands
// are folded in reverse index order, the opposite of the implementation.

namespace detail {

// entry (i,j) of a polynomial matrix: coefficient vector in T, length cap
struct PolyMat {
  const FieldCtx* F;
  size_t n, cap;
  std::vector<uint32_t> a;  // [i][j][d]
  PolyMat(const FieldCtx* f, size_t n_, size_t cap_) : F(f), n(n_), cap(cap_), a(n_ * n_ * cap_, 0) {}
  uint32_t& at(size_t i, size_t j, size_t d) { return a[(i * n + j) * cap + d]; }
  uint32_t get(size_t i, size_t j, size_t d) const { return a[(i * n + j) * cap + d]; }
};

inline PolyMat polymat_mul(const PolyMat& x, const PolyMat& y) {
  PolyMat r(x.F, x.n, x.cap);
  for (size_t i = 0; i < x.n; ++i)
    for (size_t k = 0; k < x.n; ++k)
      for (size_t j = 0; j < x.n; ++j)
        for (size_t d1 = 0; d1 < x.cap; ++d1) {
          uint32_t v1 = x.get(i, k, d1);
          if (!v1) continue;
          for (size_t d2 = 0; d1 + d2 < x.cap; ++d2) {
            uint32_t v2 = y.get(k, j, d2);
            if (!v2) continue;
            uint32_t& dst = r.at(i, j, d1 + d2);
            dst = x.F->add(dst, x.F->mul(v1, v2));
          }
        }
  return r;
}

}  // namespace detail

inline Vec pmap_oracle(const Algebra& A, const Vec& x) {
  const FieldCtx* K = x.field();
  const uint32_t p = A.p();
  std::vector<size_t> support;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) support.push_back(i);
  if (support.empty()) return Vec(K, A.dim());

  // reverse fold: acc starts at the largest support index
  size_t last = support.back();
  Vec acc = Vec::unit(K, A.dim(), last).scaled(x[last]);
  Vec accp = A.pmap_basis(last).lifted(K).scaled(K->pow(x[last], p));
  for (size_t t = support.size() - 1; t-- > 0;) {
    size_t idx = support[t];
    Vec b = Vec::unit(K, A.dim(), idx).scaled(x[idx]);
    Vec bp = A.pmap_basis(idx).lifted(K).scaled(K->pow(x[idx], p));

    detail::PolyMat m(K, A.dim(), p);
    Mat ada = A.ad(acc), adb = A.ad(b);
    for (size_t i = 0; i < A.dim(); ++i)
      for (size_t j = 0; j < A.dim(); ++j) {
        m.at(i, j, 1) = ada.at(i, j);
        m.at(i, j, 0) = adb.at(i, j);
      }
    detail::PolyMat pw = m;
    for (uint32_t e = 1; e < p - 1; ++e) pw = detail::polymat_mul(pw, m);
    // w(T) = pw * acc; s_i = coeff of T^{i-1} divided by i
    Vec corr(K, A.dim());
    for (uint32_t i = 1; i <= p - 1; ++i) {
      Vec wi(K, A.dim());
      for (size_t r = 0; r < A.dim(); ++r) {
        uint32_t v = 0;
        for (size_t c = 0; c < A.dim(); ++c)
          v = K->add(v, K->mul(pw.get(r, c, i - 1), acc[c]));
        wi.set(r, v);
      }
      corr.add_scaled(wi, K->inv(i % p));
    }
    accp.add_scaled(bp, 1);
    accp.add_scaled(corr, 1);
    acc.add_scaled(b, 1);
  }
  return accp;
}

// ---- oracle 2: centerless p-map via ad-solve ------------------------------
//
// In a centerless algebra, y = x^[p] is the unique solution of
// ad(y) = ad(x)^p; solve the linear system directly.

inline std::optional<Vec> pmap_adsolve_oracle(const Algebra& A, const Vec& x) {
  const FieldCtx* K = x.field();
  size_t n = A.dim();
  Mat target = A.ad(x).power(A.p());
  Mat sys(K, n * n, n);
  for (size_t j = 0; j < n; ++j) {
    Mat adj = A.ad(Vec::unit(K, n, j));
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) sys.set(r * n + c, j, adj.at(r, c));
  }
  Vec rhs(K, n * n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) rhs.set(r * n + c, target.at(r, c));
  return solve(sys, rhs);
}

inline std::vector<size_t> random_permutation(std::mt19937_64& g, size_t n) {
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  for (size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[g() % i]);
  return perm;
}

}  // namespace prank::testsupport
