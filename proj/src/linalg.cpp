#include "prank/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace prank {

namespace {
void check_ctx(const FieldCtx* a, const FieldCtx* b, const char* where) {
  if (a != b) throw context_error(std::string(where) + ": mixed field contexts");
}
}  // namespace

Vec::Vec(const FieldCtx* F, std::vector<uint32_t> data) : F_(F), c_(std::move(data)) {
  for (uint32_t v : c_)
    if (v >= F->q()) throw std::domain_error("Vec: encoding out of range");
}

Vec Vec::unit(const FieldCtx* F, size_t n, size_t i) {
  Vec v(F, n);
  v.c_[i] = 1;
  return v;
}

bool Vec::is_zero() const {
  for (uint32_t v : c_)
    if (v) return false;
  return true;
}

size_t Vec::first_nonzero() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) return i;
  return c_.size();
}

Vec& Vec::add_scaled(const Vec& other, uint32_t s) {
  check_ctx(F_, other.F_, "Vec::add_scaled");
  if (c_.size() != other.c_.size()) throw shape_error("Vec::add_scaled: length mismatch");
  if (s == 0) return *this;
  for (size_t i = 0; i < c_.size(); ++i)
    c_[i] = F_->add(c_[i], F_->mul(s, other.c_[i]));
  return *this;
}

Vec& Vec::negate() {
  for (auto& v : c_) v = F_->neg(v);
  return *this;
}

Vec Vec::scaled(uint32_t s) const {
  Vec r(F_, c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->mul(c_[i], s);
  return r;
}

Vec Vec::operator+(const Vec& o) const {
  Vec r = *this;
  r.add_scaled(o, 1);
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  Vec r = *this;
  r.add_scaled(o, F_->neg(1));
  return r;
}

bool Vec::operator<(const Vec& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return c_ < o.c_;
}

Vec Vec::lifted(const FieldCtx* K) const {
  if (F_ == K) return *this;
  if (!K->extends(*F_)) throw context_error("Vec::lifted: not an extension of the prime field");
  Vec r(K, c_.size());
  r.c_ = c_;  // encodings < p are valid in the extension
  return r;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << " ";
    os << F_->element_str(c_[i]);
  }
  os << "]";
  return os.str();
}

Mat Mat::identity(const FieldCtx* F, size_t n) {
  Mat m(F, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, const FieldCtx* F, size_t cols) {
  Mat m(F, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Mat::row(size_t i) const {
  Vec v(F_, cols_);
  for (size_t j = 0; j < cols_; ++j) v.set(j, at(i, j));
  return v;
}

void Mat::set_row(size_t i, const Vec& v) {
  check_ctx(F_, v.field(), "Mat::set_row");
  if (v.size() != cols_) throw shape_error("Mat::set_row: length mismatch");
  for (size_t j = 0; j < cols_; ++j) set(i, j, v[j]);
}

Mat Mat::mul(const Mat& o) const {
  check_ctx(F_, o.F_, "Mat::mul");
  if (cols_ != o.rows_) throw shape_error("Mat::mul: dimension mismatch");
  Mat r(F_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t l = 0; l < cols_; ++l) {
      uint32_t v = at(i, l);
      if (!v) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.set(i, j, F_->add(r.at(i, j), F_->mul(v, o.at(l, j))));
    }
  return r;
}

Vec Mat::apply(const Vec& x) const {
  check_ctx(F_, x.field(), "Mat::apply");
  if (x.size() != cols_) throw shape_error("Mat::apply: dimension mismatch");
  Vec r(F_, rows_);
  for (size_t i = 0; i < rows_; ++i) {
    uint32_t acc = 0;
    for (size_t j = 0; j < cols_; ++j) acc = F_->add(acc, F_->mul(at(i, j), x[j]));
    r.set(i, acc);
  }
  return r;
}

Mat Mat::power(uint64_t e) const {
  if (rows_ != cols_) throw shape_error("Mat::power: not square");
  Mat r = identity(F_, rows_), base = *this;
  while (e) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(F_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  check_ctx(F_, o.F_, "Mat::+");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("Mat::+: shape mismatch");
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_ctx(F_, o.F_, "Mat::-");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("Mat::-: shape mismatch");
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::scaled(uint32_t s) const {
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], s);
  return r;
}

Mat Mat::shifted(uint32_t w) const {
  if (rows_ != cols_) throw shape_error("Mat::shifted: not square");
  Mat r = *this;
  for (size_t i = 0; i < rows_; ++i) r.set(i, i, F_->sub(r.at(i, i), w));
  return r;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
  check_ctx(top.F_, bottom.F_, "Mat::vstack");
  if (top.cols_ != bottom.cols_) throw shape_error("Mat::vstack: column mismatch");
  Mat r(top.F_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.a_.begin(), top.a_.end(), r.a_.begin());
  std::copy(bottom.a_.begin(), bottom.a_.end(), r.a_.begin() + top.a_.size());
  return r;
}

bool Mat::is_zero() const {
  for (uint32_t v : a_)
    if (v) return false;
  return true;
}

bool Mat::operator<(const Mat& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return a_ < o.a_;
}

Mat Mat::lifted(const FieldCtx* K) const {
  if (F_ == K) return *this;
  if (!K->extends(*F_)) throw context_error("Mat::lifted: not an extension of the prime field");
  Mat r(K, rows_, cols_);
  r.a_ = a_;
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) os << row(i).str() << "\n";
  return os.str();
}

EchelonForm rref(const Mat& m) {
  EchelonForm e;
  e.mat = m;
  const FieldCtx* F = m.field();
  size_t r = 0;
  for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    size_t piv = r;
    while (piv < m.rows() && e.mat.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols(); ++j) {
        uint32_t t = e.mat.at(r, j);
        e.mat.set(r, j, e.mat.at(piv, j));
        e.mat.set(piv, j, t);
      }
    uint32_t s = F->inv(e.mat.at(r, col));
    for (size_t j = col; j < m.cols(); ++j) e.mat.set(r, j, F->mul(e.mat.at(r, j), s));
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      uint32_t f = e.mat.at(i, col);
      if (!f) continue;
      for (size_t j = col; j < m.cols(); ++j)
        e.mat.set(i, j, F->sub(e.mat.at(i, j), F->mul(f, e.mat.at(r, j))));
    }
    e.pivots.push_back(col);
    ++r;
  }
  return e;
}

Subspace::Subspace(const FieldCtx* F, size_t ambient) { basis_ = Mat(F, 0, ambient); }

Subspace Subspace::span_of(const Mat& rows) {
  EchelonForm e = rref(rows);
  Subspace s;
  s.basis_ = Mat(rows.field(), e.rank(), rows.cols());
  for (size_t i = 0; i < e.rank(); ++i) s.basis_.set_row(i, e.mat.row(i));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::span_of(const std::vector<Vec>& rows, const FieldCtx* F, size_t ambient) {
  return span_of(Mat::from_rows(rows, F, ambient));
}

Subspace Subspace::full(const FieldCtx* F, size_t n) { return span_of(Mat::identity(F, n)); }

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient()) throw shape_error("Subspace::reduce: dimension mismatch");
  check_ctx(v.field(), field(), "Subspace::reduce");
  const FieldCtx* F = field();
  for (size_t i = 0; i < dim(); ++i) {
    uint32_t c = v[pivots_[i]];
    if (c) v.add_scaled(basis_.row(i), F->neg(c));
  }
  return v;
}

bool Subspace::contains(const Subspace& other) const {
  for (size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(field(), dim());
  for (size_t i = 0; i < dim(); ++i) c.set(i, v[pivots_[i]]);
  return c;
}

bool Subspace::operator<(const Subspace& o) const { return basis_ < o.basis_; }

Subspace sum(const Subspace& a, const Subspace& b) {
  check_ctx(a.field(), b.field(), "sum(Subspace)");
  if (a.ambient() != b.ambient()) throw shape_error("sum(Subspace): ambient mismatch");
  return Subspace::span_of(Mat::vstack(a.basis_, b.basis_));
}

// Zassenhaus: rref of [A|A ; B|0]; rows with vanishing left half carry an
// intersection basis in the right half.
Subspace intersect(const Subspace& a, const Subspace& b) {
  check_ctx(a.field(), b.field(), "intersect(Subspace)");
  if (a.ambient() != b.ambient()) throw shape_error("intersect(Subspace): ambient mismatch");
  const FieldCtx* F = a.field();
  size_t n = a.ambient();
  Mat z(F, a.dim() + b.dim(), 2 * n);
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < n; ++j) {
      z.set(i, j, a.basis_.at(i, j));
      z.set(i, n + j, a.basis_.at(i, j));
    }
  for (size_t i = 0; i < b.dim(); ++i)
    for (size_t j = 0; j < n; ++j) z.set(a.dim() + i, j, b.basis_.at(i, j));
  EchelonForm e = rref(z);
  std::vector<Vec> rows;
  for (size_t i = 0; i < e.rank(); ++i) {
    bool left_zero = true;
    for (size_t j = 0; j < n && left_zero; ++j)
      if (e.mat.at(i, j)) left_zero = false;
    if (!left_zero) continue;
    Vec v(F, n);
    for (size_t j = 0; j < n; ++j) v.set(j, e.mat.at(i, n + j));
    rows.push_back(v);
  }
  return Subspace::span_of(rows, F, n);
}

Subspace kernel(const Mat& m) {
  EchelonForm e = rref(m);
  const FieldCtx* F = m.field();
  size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(F, n);
    v.set(j, 1);
    for (size_t i = 0; i < e.rank(); ++i) v.set(e.pivots[i], F->neg(e.mat.at(i, j)));
    rows.push_back(v);
  }
  return Subspace::span_of(rows, F, n);
}

std::optional<Vec> solve(const Mat& m, const Vec& v) {
  check_ctx(m.field(), v.field(), "solve");
  if (v.size() != m.rows()) throw shape_error("solve: dimension mismatch");
  const FieldCtx* F = m.field();
  Mat aug(F, m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), v[i]);
  }
  EchelonForm e = rref(aug);
  Vec x(F, m.cols());
  for (size_t i = 0; i < e.rank(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;  // inconsistent
    x.set(e.pivots[i], e.mat.at(i, m.cols()));
  }
  return x;
}

void for_each_point(const FieldCtx* F, size_t n, const std::function<bool(const Vec&)>& fn) {
  Vec v(F, n);
  const uint32_t q = F->q();
  while (true) {
    if (!fn(v)) return;
    size_t i = 0;
    while (i < n) {
      uint32_t d = v[i] + 1;
      if (d < q) {
        v.set(i, d);
        break;
      }
      v.set(i, 0);
      ++i;
    }
    if (i == n) return;
  }
}

void for_each_line(const FieldCtx* F, size_t n, const std::function<bool(const Vec&)>& fn) {
  for (size_t lead = 0; lead < n; ++lead) {
    // coordinates before `lead` are zero, coordinate `lead` is 1
    size_t free = n - lead - 1;
    Vec v(F, n);
    v.set(lead, 1);
    bool stop = false;
    std::function<bool(const Vec&)> inner = [&](const Vec& tail) {
      Vec full(F, n);
      full.set(lead, 1);
      for (size_t j = 0; j < free; ++j) full.set(lead + 1 + j, tail[j]);
      if (!fn(full)) {
        stop = true;
        return false;
      }
      return true;
    };
    for_each_point(F, free, inner);
    if (stop) return;
  }
}

uint64_t line_count(const FieldCtx* F, size_t n, uint64_t limit) {
  uint64_t total;
  if (!fits_budget(F->q(), n, limit, &total))
    throw capacity_error("line_count: q^n exceeds the enumeration budget", limit);
  return (total - 1) / (F->q() - 1);
}

}  // namespace prank
