#include "prank/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace prank {

Algebra::Algebra(const FieldCtx* Fp, std::vector<std::string> basis_names,
                 std::vector<std::array<size_t, 2>> bracket_pairs, std::vector<Vec> bracket_values,
                 std::vector<Vec> pmap_basis)
    : F_(Fp), dim_(basis_names.size()), names_(std::move(basis_names)) {
  if (Fp->degree() != 1) throw precondition_error("Algebra: structure constants live over the prime field");
  if (bracket_pairs.size() != bracket_values.size())
    throw shape_error("Algebra: bracket pair/value count mismatch");
  if (pmap_basis.size() != dim_) throw shape_error("Algebra: pmap row count mismatch");

  table_.assign(dim_ * dim_, Vec());
  for (size_t t = 0; t < bracket_pairs.size(); ++t) {
    auto [i, j] = bracket_pairs[t];
    if (i >= j || j >= dim_) throw shape_error("Algebra: bracket pair must have i < j < dim");
    const Vec& v = bracket_values[t];
    if (v.size() != dim_ || v.field() != F_) throw shape_error("Algebra: bracket value malformed");
    table_[tri(i, j)] = v;
  }
  for (auto& v : pmap_basis)
    if (v.size() != dim_ || v.field() != F_) throw shape_error("Algebra: pmap row malformed");
  pmap_ = std::move(pmap_basis);

  // Axioms, once, eagerly.  Jacobi on all triples i < j < l:
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = i + 1; j < dim_; ++j)
      for (size_t l = j + 1; l < dim_; ++l) {
        Vec s = bracket(bracket_basis(i, j, F_), Vec::unit(F_, dim_, l));
        s.add_scaled(bracket(bracket_basis(j, l, F_), Vec::unit(F_, dim_, i)), 1);
        s.add_scaled(bracket(bracket_basis(l, i, F_), Vec::unit(F_, dim_, j)), 1);
        if (!s.is_zero()) report_.jacobi_failures.push_back({i, j, l});
      }
  for (size_t i = 0; i < dim_; ++i) {
    Mat lhs = ad(pmap_[i]);
    Mat rhs = ad(Vec::unit(F_, dim_, i)).power(F_->p());
    if (lhs != rhs) report_.restricted_failures.push_back(i);
  }
}

void Algebra::ensure_valid() const {
  if (!report_.ok()) throw validation_error("Algebra: operation on an algebra that failed validation");
}

Vec Algebra::bracket_basis(size_t i, size_t j, const FieldCtx* K) const {
  if (i == j) return Vec(K, dim_);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  const Vec& v = table_[tri(i, j)];
  if (v.size() == 0) return Vec(K, dim_);
  Vec r = v.lifted(K);
  if (flip) r.negate();
  return r;
}

Vec Algebra::bracket(const Vec& x, const Vec& y) const {
  const FieldCtx* K = x.field();
  if (y.field() != K) throw context_error("Algebra::bracket: mixed coordinate fields");
  if (K->p() != p()) throw context_error("Algebra::bracket: wrong characteristic");
  if (x.size() != dim_ || y.size() != dim_) throw shape_error("Algebra::bracket: wrong length");
  Vec r(K, dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (!x[i] && !y[i]) continue;
    for (size_t j = i + 1; j < dim_; ++j) {
      const Vec& t = table_[tri(i, j)];
      if (t.size() == 0) continue;
      uint32_t c = K->sub(K->mul(x[i], y[j]), K->mul(x[j], y[i]));
      if (c) r.add_scaled(t.lifted(K), c);
    }
  }
  return r;
}

Mat Algebra::ad(const Vec& x) const {
  const FieldCtx* K = x.field();
  Mat m(K, dim_, dim_);
  for (size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(x, Vec::unit(K, dim_, j));
    for (size_t i = 0; i < dim_; ++i) m.set(i, j, col[i]);
  }
  return m;
}

Vec Algebra::pmap(const Vec& x) const {
  ensure_valid();
  const FieldCtx* K = x.field();
  if (K->p() != p()) throw context_error("Algebra::pmap: wrong characteristic");
  const uint32_t pr = p();

  std::vector<size_t> support;
  for (size_t i = 0; i < dim_; ++i)
    if (x[i]) support.push_back(i);
  if (support.empty()) return Vec(K, dim_);

  // acc = partial sum of the summands handled so far, accp = acc^[p]
  size_t i0 = support[0];
  Vec acc = Vec::unit(K, dim_, i0).scaled(x[i0]);
  Vec accp = pmap_[i0].lifted(K).scaled(K->pow(x[i0], pr));

  for (size_t t = 1; t < support.size(); ++t) {
    size_t j = support[t];
    Vec b = Vec::unit(K, dim_, j).scaled(x[j]);
    Vec bp = pmap_[j].lifted(K).scaled(K->pow(x[j], pr));

    // w(T) = ad(T*acc + b)^{p-1}(acc), coefficients w[0..p-1]
    std::vector<Vec> w(pr, Vec(K, dim_));
    w[0] = acc;
    for (uint32_t step = 0; step < pr - 1; ++step) {
      std::vector<Vec> nw(pr, Vec(K, dim_));
      for (uint32_t d = 0; d < pr; ++d) {
        if (w[d].is_zero()) continue;
        if (d + 1 < pr) nw[d + 1].add_scaled(bracket(acc, w[d]), 1);
        nw[d].add_scaled(bracket(b, w[d]), 1);
      }
      w = std::move(nw);
    }
    Vec corr(K, dim_);
    for (uint32_t i = 1; i <= pr - 1; ++i)
      corr.add_scaled(w[i - 1], K->inv(i % pr));
    accp.add_scaled(bp, 1);
    accp.add_scaled(corr, 1);
    acc.add_scaled(b, 1);
  }
  return accp;
}

Vec Algebra::pmap_iterate(const Vec& x, uint64_t times) const {
  Vec v = x;
  for (uint64_t i = 0; i < times; ++i) v = pmap(v);
  return v;
}

bool Algebra::is_p_nilpotent(const Vec& x) const {
  Vec v = x;
  for (size_t i = 0; i <= dim_; ++i) {
    if (v.is_zero()) return true;
    v = pmap(v);
  }
  return v.is_zero();
}

Subspace Algebra::center() const {
  Mat stacked(F_, dim_ * dim_, dim_);
  for (size_t i = 0; i < dim_; ++i) {
    Mat a = ad(Vec::unit(F_, dim_, i));
    for (size_t r = 0; r < dim_; ++r)
      for (size_t c = 0; c < dim_; ++c) stacked.set(i * dim_ + r, c, a.at(r, c));
  }
  return kernel(stacked);
}

Subspace Algebra::centralizer(const Vec& x) const { return kernel(ad(x)); }

Subspace Algebra::centralizer_of_set(const Subspace& s) const {
  if (s.dim() == 0) return Subspace::full(s.field(), dim_);
  Mat stacked(s.field(), s.dim() * dim_, dim_);
  for (size_t i = 0; i < s.dim(); ++i) {
    Mat a = ad(s.basis_row(i));
    for (size_t r = 0; r < dim_; ++r)
      for (size_t c = 0; c < dim_; ++c) stacked.set(i * dim_ + r, c, a.at(r, c));
  }
  return kernel(stacked);
}

Subspace Algebra::p_closure(const Vec& x) const {
  ensure_valid();
  Subspace s = Subspace::span_of({x}, x.field(), dim_);
  Vec v = x;
  for (size_t i = 0; i <= dim_; ++i) {
    v = pmap(v);
    if (s.contains(v)) return s;
    s = sum(s, Subspace::span_of({v}, v.field(), dim_));
  }
  return s;
}

Subspace Algebra::toral_radical() const {
  ensure_valid();
  Subspace s = center();
  // On the center the p-map is additive (no bracket corrections) and, over
  // F_p, linear; iterate the image until it stabilizes.
  while (s.dim() > 0) {
    std::vector<Vec> imgs;
    for (size_t i = 0; i < s.dim(); ++i) imgs.push_back(pmap(s.basis_row(i)));
    Subspace next = Subspace::span_of(imgs, F_, dim_);
    if (next == s) break;
    s = next;
  }
  return s;
}

Subspace Algebra::bracket_span(const Subspace& a, const Subspace& b) const {
  std::vector<Vec> rows;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < b.dim(); ++j) rows.push_back(bracket(a.basis_row(i), b.basis_row(j)));
  return Subspace::span_of(rows, a.field(), dim_);
}

Subspace Algebra::derived() const {
  Subspace g = Subspace::full(F_, dim_);
  return bracket_span(g, g);
}

std::vector<size_t> Algebra::derived_series_dims() const {
  std::vector<size_t> dims;
  Subspace s = Subspace::full(F_, dim_);
  dims.push_back(s.dim());
  while (true) {
    Subspace next = bracket_span(s, s);
    if (next.dim() == s.dim()) break;
    s = next;
    dims.push_back(s.dim());
  }
  return dims;
}

std::vector<size_t> Algebra::lower_central_series_dims() const {
  std::vector<size_t> dims;
  Subspace g = Subspace::full(F_, dim_);
  Subspace s = g;
  dims.push_back(s.dim());
  while (true) {
    Subspace next = bracket_span(g, s);
    if (next.dim() == s.dim()) break;
    s = next;
    dims.push_back(s.dim());
  }
  return dims;
}

bool Algebra::is_solvable() const { return derived_series_dims().back() == 0; }
bool Algebra::is_nilpotent() const { return lower_central_series_dims().back() == 0; }
bool Algebra::is_perfect() const { return derived().dim() == dim_; }
bool Algebra::is_abelian() const { return derived().dim() == 0; }

bool Algebra::is_torus() const {
  if (!is_abelian()) return false;
  Mat pm(F_, dim_, dim_);
  for (size_t i = 0; i < dim_; ++i) pm.set_row(i, pmap_[i]);  // rows: images of basis
  return rref(pm).rank() == dim_;
}

Subspace Algebra::subalgebra_generated(const std::vector<Vec>& gens, bool with_pmap) const {
  ensure_valid();
  const FieldCtx* K = gens.empty() ? F_ : gens[0].field();
  Subspace s = Subspace::span_of(gens, K, dim_);
  while (true) {
    std::vector<Vec> add;
    for (size_t i = 0; i < s.dim(); ++i) {
      for (size_t j = i + 1; j < s.dim(); ++j) {
        Vec v = bracket(s.basis_row(i), s.basis_row(j));
        if (!s.contains(v)) add.push_back(v);
      }
      if (with_pmap) {
        Vec v = pmap(s.basis_row(i));
        if (!s.contains(v)) add.push_back(v);
      }
    }
    if (add.empty()) return s;
    for (auto& v : add) s = sum(s, Subspace::span_of({v}, K, dim_));
  }
}

bool Algebra::is_p_ideal(const Subspace& s) const {
  Subspace g = Subspace::full(s.field(), dim_);
  if (!s.contains(bracket_span(g, s))) return false;
  for (size_t i = 0; i < s.dim(); ++i)
    if (!s.contains(pmap(s.basis_row(i)))) return false;
  return true;
}

bool Algebra::is_p_subalgebra(const Subspace& s) const {
  if (!s.contains(bracket_span(s, s))) return false;
  for (size_t i = 0; i < s.dim(); ++i)
    if (!s.contains(pmap(s.basis_row(i)))) return false;
  return true;
}

bool Algebra::subspace_solvable(const Subspace& s) const {
  Subspace d = s;
  while (d.dim() > 0) {
    Subspace next = bracket_span(d, d);
    if (next.dim() == d.dim()) return false;
    d = next;
  }
  return true;
}

AlgebraQuotient Algebra::quotient(const Subspace& ideal) const {
  ensure_valid();
  if (ideal.field() != F_) throw context_error("Algebra::quotient: ideal over wrong field");
  if (!is_p_ideal(ideal)) throw precondition_error("Algebra::quotient: not a p-ideal");

  std::vector<bool> is_pivot(dim_, false);
  for (size_t c : ideal.pivots()) is_pivot[c] = true;
  std::vector<size_t> comp;
  for (size_t c = 0; c < dim_; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  size_t qd = comp.size();

  // reduce mod the ideal, then read off the complement coordinates
  auto project = [&](const Vec& v) {
    Vec r = ideal.reduce(v);
    Vec out(F_, qd);
    for (size_t t = 0; t < qd; ++t) out.set(t, r[comp[t]]);
    return out;
  };

  std::vector<std::string> names;
  for (size_t c : comp) names.push_back(names_[c]);
  std::vector<std::array<size_t, 2>> pairs;
  std::vector<Vec> values;
  for (size_t a = 0; a < qd; ++a)
    for (size_t b = a + 1; b < qd; ++b) {
      Vec v = project(bracket_basis(comp[a], comp[b], F_));
      if (!v.is_zero()) {
        pairs.push_back({a, b});
        values.push_back(v);
      }
    }
  std::vector<Vec> pm;
  for (size_t a = 0; a < qd; ++a) pm.push_back(project(pmap_[comp[a]]));

  AlgebraQuotient out{Algebra(F_, std::move(names), std::move(pairs), std::move(values), std::move(pm)),
               Mat(F_, qd, dim_), comp};
  // projection matrix: column c holds the quotient coordinates of e_c
  for (size_t c = 0; c < dim_; ++c) {
    Vec img = project(Vec::unit(F_, dim_, c));
    for (size_t r = 0; r < qd; ++r) out.projection.set(r, c, img[r]);
  }
  if (!out.alg.is_valid())
    throw invariant_violation("Algebra::quotient: quotient by a p-ideal failed validation");
  return out;
}

EmbeddedSubalgebra Algebra::subalgebra_as_algebra(const Subspace& s) const {
  ensure_valid();
  if (!is_p_subalgebra(s)) throw precondition_error("subalgebra_as_algebra: not a p-subalgebra");
  size_t n = s.dim();
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  std::vector<std::array<size_t, 2>> pairs;
  std::vector<Vec> values;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      Vec v = *s.coordinates(bracket(s.basis_row(a), s.basis_row(b)));
      if (!v.is_zero()) {
        pairs.push_back({a, b});
        values.push_back(v);
      }
    }
  std::vector<Vec> pm;
  for (size_t a = 0; a < n; ++a) pm.push_back(*s.coordinates(pmap(s.basis_row(a))));
  EmbeddedSubalgebra out{Algebra(F_, std::move(names), std::move(pairs), std::move(values), std::move(pm)),
               s.basis()};
  return out;
}

bool Algebra::same_tables(const Algebra& o) const {
  if (dim_ != o.dim_ || F_ != o.F_) return false;
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = i + 1; j < dim_; ++j)
      if (bracket_basis(i, j, F_) != o.bracket_basis(i, j, F_)) return false;
  for (size_t i = 0; i < dim_; ++i)
    if (pmap_[i] != o.pmap_[i]) return false;
  return true;
}

Algebra Algebra::permuted(const std::vector<size_t>& perm) const {
  if (perm.size() != dim_) throw shape_error("Algebra::permuted: wrong permutation size");
  // new basis c_i := b_{perm[i]}
  auto relabel = [&](const Vec& v) {
    Vec r(F_, dim_);
    for (size_t i = 0; i < dim_; ++i) r.set(i, v[perm[i]]);
    return r;
  };
  std::vector<std::string> names(dim_);
  for (size_t i = 0; i < dim_; ++i) names[i] = names_[perm[i]];
  std::vector<std::array<size_t, 2>> pairs;
  std::vector<Vec> values;
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = i + 1; j < dim_; ++j) {
      Vec v = relabel(bracket_basis(perm[i], perm[j], F_));
      if (!v.is_zero()) {
        pairs.push_back({i, j});
        values.push_back(v);
      }
    }
  std::vector<Vec> pm;
  for (size_t i = 0; i < dim_; ++i) pm.push_back(relabel(pmap_[perm[i]]));
  return Algebra(F_, std::move(names), std::move(pairs), std::move(values), std::move(pm));
}

}  // namespace prank
