#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prank/field.hpp"

namespace prank {

/// Dense coordinate vector over a FieldCtx.  Entries are field encodings.
class Vec {
 public:
  Vec() : F_(nullptr) {}
  Vec(const FieldCtx* F, size_t n) : F_(F), c_(n, 0) {}
  Vec(const FieldCtx* F, std::vector<uint32_t> data);
  Vec(const FieldCtx* F, std::initializer_list<uint32_t> data)
      : Vec(F, std::vector<uint32_t>(data)) {}
  static Vec unit(const FieldCtx* F, size_t n, size_t i);

  const FieldCtx* field() const { return F_; }
  size_t size() const { return c_.size(); }
  uint32_t operator[](size_t i) const { return c_[i]; }
  void set(size_t i, uint32_t v) { c_[i] = v; }

  bool is_zero() const;
  size_t first_nonzero() const;  // size() when zero

  Vec& add_scaled(const Vec& other, uint32_t s);  // *this += s * other
  Vec& negate();
  Vec scaled(uint32_t s) const;
  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;

  bool operator==(const Vec& o) const { return F_ == o.F_ && c_ == o.c_; }
  bool operator!=(const Vec& o) const { return !(*this == o); }
  bool operator<(const Vec& o) const;  // lexicographic on encodings

  /// Reinterpret a prime-field vector in an extension of the same prime
  /// field (encodings of F_p are valid in every extension).
  Vec lifted(const FieldCtx* K) const;

  std::string str() const;

 private:
  const FieldCtx* F_;
  std::vector<uint32_t> c_;
};

/// Dense row-major matrix over a FieldCtx.
class Mat {
 public:
  Mat() : F_(nullptr), rows_(0), cols_(0) {}
  Mat(const FieldCtx* F, size_t rows, size_t cols) : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static Mat identity(const FieldCtx* F, size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, const FieldCtx* F, size_t cols);

  const FieldCtx* field() const { return F_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void set(size_t i, size_t j, uint32_t v) { a_[i * cols_ + j] = v; }

  Vec row(size_t i) const;
  void set_row(size_t i, const Vec& v);

  Mat mul(const Mat& o) const;
  Vec apply(const Vec& x) const;  // M * x
  Mat power(uint64_t e) const;
  Mat transpose() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(uint32_t s) const;
  /// M - w * I
  Mat shifted(uint32_t w) const;
  static Mat vstack(const Mat& top, const Mat& bottom);

  bool is_zero() const;
  bool operator==(const Mat& o) const { return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const;

  Mat lifted(const FieldCtx* K) const;
  std::string str() const;

 private:
  const FieldCtx* F_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

struct EchelonForm {
  Mat mat;                     // reduced row-echelon form, zero rows kept
  std::vector<size_t> pivots;  // pivot column per nonzero row
  size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination; exact and canonical.
EchelonForm rref(const Mat& m);

/// Canonical subspace of a coordinate space: the unique reduced row-echelon
/// basis.  Two subspaces are equal iff their representations are identical.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const FieldCtx* F, size_t ambient);  // zero subspace
  static Subspace span_of(const Mat& rows);
  static Subspace span_of(const std::vector<Vec>& rows, const FieldCtx* F, size_t ambient);
  static Subspace full(const FieldCtx* F, size_t n);

  const FieldCtx* field() const { return basis_.field(); }
  size_t dim() const { return pivots_.size(); }
  size_t ambient() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }  // dim() rows, RREF
  const std::vector<size_t>& pivots() const { return pivots_; }
  Vec basis_row(size_t i) const { return basis_.row(i); }

  /// Canonical coset representative: v minus its projection onto the pivot
  /// coordinates.  reduce(v) == 0 iff v lies in the subspace.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the echelon basis, when v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

 private:
  Mat basis_;  // dim x ambient, RREF, no zero rows
  std::vector<size_t> pivots_;
};

/// Basis of the right kernel {x : M x = 0}, as a canonical subspace.
Subspace kernel(const Mat& m);

/// One solution of M x = v, if any (deterministic: free coordinates zero).
std::optional<Vec> solve(const Mat& m, const Vec& v);

/// Iterate all vectors of F^n in encoding order, 0 first.  Return false from
/// the callback to stop early.
void for_each_point(const FieldCtx* F, size_t n, const std::function<bool(const Vec&)>& fn);

/// Iterate one representative per line of F^n \ {0}: the representative has
/// its first nonzero coordinate equal to 1.  Canonical order.
void for_each_line(const FieldCtx* F, size_t n, const std::function<bool(const Vec&)>& fn);

/// (q^n - 1)/(q - 1), the number of lines; throws capacity_error past limit.
uint64_t line_count(const FieldCtx* F, size_t n, uint64_t limit);

}  // namespace prank
