#include "prank/constructions.hpp"

#include <sstream>

namespace prank {

SemilinearTwist SemilinearTwist::zero(size_t h_dim, const FieldCtx* F, size_t c_dim) {
  SemilinearTwist t;
  for (size_t i = 0; i < h_dim; ++i) t.values.emplace_back(F, c_dim);
  return t;
}

Algebra direct_product_twisted(const Algebra& h, const Algebra& c, const SemilinearTwist& f) {
  const FieldCtx* F = h.field();
  if (c.field() != F) throw context_error("direct_product_twisted: mixed prime fields");
  if (!c.is_torus()) throw precondition_error("direct_product_twisted: second factor is not a torus");
  if (f.values.size() != h.dim()) throw precondition_error("direct_product_twisted: twist size mismatch");
  for (const Vec& v : f.values)
    if (v.size() != c.dim() || v.field() != F)
      throw precondition_error("direct_product_twisted: twist value malformed");

  size_t n = h.dim(), m = c.dim(), d = n + m;
  auto embed_h = [&](const Vec& v) {
    Vec r(F, d);
    for (size_t i = 0; i < n; ++i) r.set(i, v[i]);
    return r;
  };
  std::vector<std::string> names = h.names();
  for (const auto& nm : c.names()) names.push_back(nm);

  std::vector<std::array<size_t, 2>> pairs;
  std::vector<Vec> values;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec v = embed_h(h.bracket_basis(i, j, F));
      if (!v.is_zero()) {
        pairs.push_back({i, j});
        values.push_back(v);
      }
    }
  std::vector<Vec> pm;
  for (size_t i = 0; i < n; ++i) {
    Vec v = embed_h(h.pmap_basis(i));
    for (size_t t = 0; t < m; ++t) v.set(n + t, f.values[i][t]);
    pm.push_back(v);
  }
  for (size_t t = 0; t < m; ++t) {
    Vec v(F, d);
    const Vec& cp = c.pmap_basis(t);
    for (size_t u = 0; u < m; ++u) v.set(n + u, cp[u]);
    pm.push_back(v);
  }
  Algebra out(F, std::move(names), std::move(pairs), std::move(values), std::move(pm));
  if (!out.is_valid()) throw invariant_violation("direct_product_twisted: output failed validation");
  return out;
}

Algebra semidirect(const Algebra& h, const RestrictedDerivation& d, const std::string& name) {
  const FieldCtx* F = h.field();
  const Mat& D = d.matrix;
  size_t n = h.dim();
  if (D.rows() != n || D.cols() != n || D.field() != F)
    throw precondition_error("semidirect: derivation matrix malformed");
  const uint32_t p = F->p();

  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec lhs = D.apply(h.bracket_basis(i, j, F));
      Vec rhs = h.bracket(D.apply(Vec::unit(F, n, i)), Vec::unit(F, n, j));
      rhs.add_scaled(h.bracket(Vec::unit(F, n, i), D.apply(Vec::unit(F, n, j))), 1);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "semidirect: Leibniz rule fails on basis pair (" << i << "," << j << ")";
        throw precondition_error(os.str());
      }
    }
  for (size_t i = 0; i < n; ++i) {
    Vec lhs = D.apply(h.pmap_basis(i));
    Vec rhs = h.ad(Vec::unit(F, n, i)).power(p - 1).apply(D.apply(Vec::unit(F, n, i)));
    if (lhs != rhs) {
      std::ostringstream os;
      os << "semidirect: p-map compatibility fails at basis index " << i;
      throw precondition_error(os.str());
    }
  }
  if (D.power(p) != D.scaled(d.p_image_scalar))
    throw precondition_error("semidirect: D^p != s*D");

  size_t dim = n + 1;
  std::vector<std::string> names{name};
  for (const auto& nm : h.names()) names.push_back(nm);
  std::vector<std::array<size_t, 2>> pairs;
  std::vector<Vec> values;
  // [d, b_i] = D(b_i)
  for (size_t i = 0; i < n; ++i) {
    Vec img = D.apply(Vec::unit(F, n, i));
    if (img.is_zero()) continue;
    Vec v(F, dim);
    for (size_t r = 0; r < n; ++r) v.set(1 + r, img[r]);
    pairs.push_back({0, 1 + i});
    values.push_back(v);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec b = h.bracket_basis(i, j, F);
      if (b.is_zero()) continue;
      Vec v(F, dim);
      for (size_t r = 0; r < n; ++r) v.set(1 + r, b[r]);
      pairs.push_back({1 + i, 1 + j});
      values.push_back(v);
    }
  std::vector<Vec> pm;
  {
    Vec v(F, dim);
    v.set(0, d.p_image_scalar);
    pm.push_back(v);
  }
  for (size_t i = 0; i < n; ++i) {
    Vec v(F, dim);
    const Vec& hp = h.pmap_basis(i);
    for (size_t r = 0; r < n; ++r) v.set(1 + r, hp[r]);
    pm.push_back(v);
  }
  Algebra out(F, std::move(names), std::move(pairs), std::move(values), std::move(pm));
  if (!out.is_valid()) throw invariant_violation("semidirect: output failed validation");
  return out;
}

Algebra central_extension(const CocycleData& data, const std::string& z_name) {
  const Algebra& h = *data.base;
  const FieldCtx* F = h.field();
  size_t n = h.dim(), dim = n + 1;

  Cochain l = cochain2_from_matrix(h, data.lambda);
  auto [closed, witness] = is_cocycle(l);
  if (!closed) {
    std::ostringstream os;
    os << "central_extension: lambda is not a cocycle; d(lambda) != 0 on basis triple ("
       << witness[0] << "," << witness[1] << "," << witness[2] << ")";
    throw precondition_error(os.str());
  }
  if (data.twist.size() != n || data.twist.field() != F)
    throw precondition_error("central_extension: twist malformed");

  std::vector<std::string> names = h.names();
  names.push_back(z_name);
  std::vector<std::array<size_t, 2>> pairs;
  std::vector<Vec> values;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec b = h.bracket_basis(i, j, F);
      uint32_t zc = data.lambda.at(i, j);
      if (b.is_zero() && zc == 0) continue;
      Vec v(F, dim);
      for (size_t r = 0; r < n; ++r) v.set(r, b[r]);
      v.set(n, zc);
      pairs.push_back({i, j});
      values.push_back(v);
    }
  std::vector<Vec> pm;
  for (size_t i = 0; i < n; ++i) {
    Vec v(F, dim);
    const Vec& hp = h.pmap_basis(i);
    for (size_t r = 0; r < n; ++r) v.set(r, hp[r]);
    v.set(n, data.twist[i]);
    pm.push_back(v);
  }
  {
    Vec v(F, dim);
    v.set(n, data.central_pmap_scalar);
    pm.push_back(v);
  }
  Algebra out(F, std::move(names), std::move(pairs), std::move(values), std::move(pm));
  if (!out.is_valid()) throw invariant_violation("central_extension: output failed validation");
  return out;
}

}  // namespace prank
