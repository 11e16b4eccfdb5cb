#include "prank/catalog.hpp"

#include "prank/constructions.hpp"

namespace prank::catalog {

namespace {

const FieldCtx* prime_field(uint32_t p) { return FieldCtx::get(p, 1); }

Vec coords(const FieldCtx* F, std::vector<uint32_t> c) { return Vec(F, std::move(c)); }

}  // namespace

Algebra sl2(uint32_t p) {
  const FieldCtx* F = prime_field(p);
  // [e,h] = -2e, [e,f] = h, [h,f] = -2f
  return Algebra(F, {"e", "h", "f"},
                 {{0, 1}, {0, 2}, {1, 2}},
                 {coords(F, {p - 2, 0, 0}), coords(F, {0, 1, 0}), coords(F, {0, 0, p - 2})},
                 {coords(F, {0, 0, 0}), coords(F, {0, 1, 0}), coords(F, {0, 0, 0})});
}

Algebra borel(uint32_t p) {
  const FieldCtx* F = prime_field(p);
  return Algebra(F, {"t", "x"}, {{0, 1}}, {coords(F, {0, 1})},
                 {coords(F, {1, 0}), coords(F, {0, 0})});
}

Algebra borel_minus(uint32_t p) {
  const FieldCtx* F = prime_field(p);
  return Algebra(F, {"t", "x", "y"},
                 {{0, 1}, {0, 2}},
                 {coords(F, {0, 1, 0}), coords(F, {0, 0, p - 1})},
                 {coords(F, {1, 0, 0}), coords(F, {0, 0, 0}), coords(F, {0, 0, 0})});
}

Algebra heisenberg_toral(uint32_t p) {
  const FieldCtx* F = prime_field(p);
  return Algebra(F, {"x", "y", "z"}, {{0, 1}}, {coords(F, {0, 0, 1})},
                 {coords(F, {0, 0, 0}), coords(F, {0, 0, 0}), coords(F, {0, 0, 1})});
}

Algebra g_lambda(uint32_t p) {
  Algebra base = borel_minus(p);
  const FieldCtx* F = base.field();
  Mat lambda(F, 3, 3);
  lambda.set(1, 2, 1);          // lambda(x, y) = 1
  lambda.set(2, 1, F->neg(1));
  CocycleData data{&base, lambda, Vec(F, 3), 1};
  return central_extension(data);
}

Algebra lr1_remark(uint32_t p, size_t m) {
  if (m < 2) throw precondition_error("lr1_remark: m >= 2 required");
  const FieldCtx* F = prime_field(p);
  size_t dim = m + 1;
  std::vector<std::string> names{"t"};
  for (size_t i = 0; i < m; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Vec> pm;
  {
    Vec v(F, dim);
    v.set(0, 1);
    pm.push_back(v);  // t^[p] = t
  }
  for (size_t i = 0; i < m; ++i) {
    Vec v(F, dim);
    if (i + 1 < m) v.set(1 + i + 1, 1);  // x_i^[p] = x_{i+1}
    pm.push_back(v);
  }
  Vec x0(F, dim);
  x0.set(1, 1);
  return Algebra(F, std::move(names), {{0, 1}}, {x0}, std::move(pm));
}

Algebra p3_h() {
  const FieldCtx* F = prime_field(3);
  // order: t1, t2, x1, x2, y
  return Algebra(F, {"t1", "t2", "x1", "x2", "y"},
                 {{2, 3}, {2, 4}, {3, 4}},
                 {coords(F, {0, 0, 0, 0, 1}),   // [x1,x2] = y
                  coords(F, {1, 0, 0, 0, 0}),   // [x1,y]  = t1
                  coords(F, {0, 1, 0, 0, 0})},  // [x2,y]  = t2
                 {coords(F, {1, 0, 0, 0, 0}), coords(F, {0, 1, 0, 0, 0}),
                  coords(F, {0, 0, 0, 0, 0}), coords(F, {0, 0, 0, 0, 0}),
                  coords(F, {0, 0, 0, 0, 0})});
}

Algebra p3_g() {
  Algebra h = p3_h();
  const FieldCtx* F = h.field();
  Mat D(F, 5, 5);
  // grading derivation: 0 on the t-plane, +1 on x1, x2, -1 on y
  D.set(2, 2, 1);
  D.set(3, 3, 1);
  D.set(4, 4, F->neg(1));
  return semidirect(h, RestrictedDerivation{D, 1});
}

Algebra witt(size_t n, uint32_t p) {
  if (n < 1) throw precondition_error("witt: n >= 1 required");
  uint64_t dim;
  if (!fits_budget(p, n, 64, &dim) || n * dim > 64)
    throw capacity_error("witt: n * p^n exceeds the builder cap of 64", 64);
  const FieldCtx* F = prime_field(p);
  const uint64_t pn = dim;  // p^n monomials
  dim = n * pn;

  // monomial exponent vectors encoded base p; basis index (j, mono)
  auto mono_exp = [&](uint64_t m, size_t i) {
    for (size_t t = 0; t < i; ++t) m /= p;
    return uint32_t(m % p);
  };
  auto basis_index = [&](size_t j, uint64_t mono) { return j * pn + mono; };
  auto name_of = [&](size_t j, uint64_t mono) {
    if (n == 1) return std::string("e_") + std::to_string(int64_t(mono) - 1);
    std::string s = "x(";
    for (size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(mono_exp(mono, i));
    return s + ")d" + std::to_string(j + 1);
  };

  // [x^a d_i, x^b d_j] = b_i x^{a+b-e_i} d_j - a_j x^{a+b-e_j} d_i
  auto term = [&](uint64_t a, uint64_t b, size_t i) -> std::pair<uint32_t, uint64_t> {
    // coefficient b_i and monomial a + b - e_i; zero when b_i = 0 or any
    // resulting exponent leaves [0, p)
    uint32_t bi = mono_exp(b, i);
    if (bi == 0) return {0, 0};
    uint64_t mono = 0, mul = 1;
    for (size_t t = 0; t < n; ++t) {
      uint32_t e = mono_exp(a, t) + mono_exp(b, t) - (t == i ? 1 : 0);
      if (e >= p) return {0, 0};
      mono += uint64_t(e) * mul;
      mul *= p;
    }
    return {bi % p, mono};
  };

  std::vector<std::array<size_t, 2>> pairs;
  std::vector<Vec> values;
  for (size_t u = 0; u < dim; ++u)
    for (size_t v = u + 1; v < dim; ++v) {
      size_t i = u / pn, j = v / pn;
      uint64_t a = u % pn, b = v % pn;
      Vec val(F, dim);
      auto [c1, m1] = term(a, b, i);
      if (c1) val.set(basis_index(j, m1), F->add(val[basis_index(j, m1)], c1));
      auto [c2, m2] = term(b, a, j);
      if (c2) val.set(basis_index(i, m2), F->sub(val[basis_index(i, m2)], c2));
      if (!val.is_zero()) {
        pairs.push_back({u, v});
        values.push_back(val);
      }
    }

  // p-map: operator p-th power in the defining representation on the
  // truncated polynomial ring, re-expressed through the images of the
  // generators x_t.
  auto action_matrix = [&](size_t j, uint64_t a) {
    Mat M(F, pn, pn);  // action on monomials x^b -> b_j x^{a+b-e_j}
    for (uint64_t b = 0; b < pn; ++b) {
      auto [c, m] = term(a, b, j);
      if (c) M.set(m, b, F->add(M.at(m, b), c));
    }
    return M;
  };
  std::vector<Vec> pm;
  for (size_t u = 0; u < dim; ++u) {
    size_t j = u / pn;
    uint64_t a = u % pn;
    Mat P = action_matrix(j, a).power(p);
    Vec val(F, dim);
    for (size_t t = 0; t < n; ++t) {
      uint64_t gen = 1;  // monomial x_t
      for (size_t s = 0; s < t; ++s) gen *= p;
      Vec img(F, pn);
      img = P.apply(Vec::unit(F, pn, gen));
      // img = sum_m c_m x^m, contributing c_m * x^m d_t
      for (uint64_t m = 0; m < pn; ++m)
        if (img[m]) val.set(basis_index(t, m), img[m]);
    }
    pm.push_back(val);
  }

  std::vector<std::string> names;
  for (size_t u = 0; u < dim; ++u) names.push_back(name_of(u / pn, u % pn));
  return Algebra(F, std::move(names), std::move(pairs), std::move(values), std::move(pm));
}

Algebra torus(size_t n, uint32_t p) {
  const FieldCtx* F = prime_field(p);
  std::vector<std::string> names;
  std::vector<Vec> pm;
  for (size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    pm.push_back(Vec::unit(F, n, i));
  }
  return Algebra(F, std::move(names), {}, {}, std::move(pm));
}

Algebra tn_cyclic(uint32_t p, size_t m) {
  Algebra h = lr1_remark(p, m);
  Algebra c = torus(1, p);
  return direct_product_twisted(h, c, SemilinearTwist::zero(h.dim(), h.field(), 1));
}

Algebra torus_times_sl2(uint32_t p, bool twisted) {
  Algebra s = sl2(p);
  Algebra c = torus(1, p);
  SemilinearTwist f = SemilinearTwist::zero(3, s.field(), 1);
  if (twisted) f.values[0] = Vec(s.field(), {1});  // e^[p] picks up the central toral line
  return direct_product_twisted(s, c, f);
}

Algebra build(const std::string& name, uint32_t p, std::optional<size_t> param) {
  if (name == "sl2") return sl2(p);
  if (name == "borel") return borel(p);
  if (name == "borel_minus") return borel_minus(p);
  if (name == "heisenberg_toral") return heisenberg_toral(p);
  if (name == "g_lambda") return g_lambda(p);
  if (name == "lr1_remark") return lr1_remark(p, param.value_or(2));
  if (name == "p3_h") {
    if (p != 3) throw precondition_error("p3_h: defined at p = 3 only");
    return p3_h();
  }
  if (name == "p3_g") {
    if (p != 3) throw precondition_error("p3_g: defined at p = 3 only");
    return p3_g();
  }
  if (name == "witt") return witt(param.value_or(1), p);
  if (name == "torus") return torus(param.value_or(1), p);
  if (name == "tn_cyclic") return tn_cyclic(p, param.value_or(2));
  if (name == "torus_times_sl2") return torus_times_sl2(p);
  throw precondition_error("catalog: unknown algebra name '" + name + "'");
}

std::vector<Entry> entries(uint32_t p) {
  std::vector<Entry> out;
  out.push_back({"sl2", sl2(p)});
  out.push_back({"borel", borel(p)});
  out.push_back({"borel_minus", borel_minus(p)});
  out.push_back({"heisenberg_toral", heisenberg_toral(p)});
  out.push_back({"g_lambda", g_lambda(p)});
  out.push_back({"lr1_remark", lr1_remark(p, 2)});
  out.push_back({"witt_1", witt(1, p)});
  out.push_back({"torus_3", torus(3, p)});
  out.push_back({"tn_cyclic", tn_cyclic(p, 2)});
  out.push_back({"torus_times_sl2", torus_times_sl2(p)});
  if (p == 3) {
    out.push_back({"p3_h", p3_h()});
    out.push_back({"p3_g", p3_g()});
  }
  return out;
}

std::vector<BoundRow> cartan_type_bound_rows() {
  std::vector<BoundRow> rows;
  auto pw = [](uint64_t b, uint64_t e) {
    uint64_t v = 1;
    while (e--) v *= b;
    return v;
  };
  for (uint64_t n : {2, 3})
    for (uint64_t p : {3, 5})
      rows.push_back({"W", n, p, n * pw(p, n), n, n, 0, true});
  for (uint64_t n : {3, 4})
    for (uint64_t p : {5, 7}) {
      uint64_t rk = (n - 1) * (p - 1);
      rows.push_back({"S", n, p, (n - 1) * (pw(p, n) - 1), rk, rk, 0, false});
    }
  for (uint64_t r : {1, 2})
    for (uint64_t p : {5, 7}) {
      uint64_t rk = pw(p, r) - 2;
      uint64_t mu = (r == 1) ? 1 : rk;  // mu(H(2)) = 1; otherwise bound by rk
      rows.push_back({"H", r, p, pw(p, 2 * r) - 2, mu, rk, 0, false});
    }
  for (uint64_t r : {1, 2})
    for (uint64_t p : {3, 5, 7}) {
      // rk is p^r or p^r - 1; dim is at least p^{2r+1} - 2.  The larger rk
      // and the smaller dim make the hardest instance, so one row per rk.
      for (uint64_t rk : {pw(p, r), pw(p, r) - 1})
        rows.push_back({"K", r, p, pw(p, 2 * r + 1) - 2, r + 1, rk, 0, false});
    }
  return rows;
}

}  // namespace prank::catalog
