#include "prank/tori.hpp"

#include <algorithm>
#include <set>

namespace prank {

size_t RootDecomposition::rho() const {
  size_t m = 0;
  for (const Root& r : roots) m = std::max(m, r.space.dim());
  return m;
}

size_t RootDecomposition::r_t() const {
  if (roots.empty()) return 0;
  std::vector<Vec> rows;
  for (const Root& r : roots) rows.push_back(r.functional);
  return Subspace::span_of(rows, roots[0].functional.field(), torus.span.dim()).dim();
}

std::vector<Vec> toral_elements(const Algebra& A, uint32_t ext, const Budget& budget) {
  if (!fits_budget(A.p(), uint64_t(ext) * A.dim(), budget.max_points))
    throw capacity_error("toral_elements: p^(k*dim) exceeds the budget of " +
                             std::to_string(budget.max_points) + " points",
                         budget.max_points);
  const FieldCtx* K = ext == 1 ? A.field() : FieldCtx::get(A.p(), ext);
  std::vector<Vec> out;
  for_each_point(K, A.dim(), [&](const Vec& x) {
    if (A.pmap(x) == x) out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

MaximalToriResult maximal_tori(const Algebra& A, const Budget& budget, size_t torus_cap) {
  std::vector<Vec> torals = toral_elements(A, 1, budget);
  // drop zero
  std::vector<Vec> ts;
  for (const Vec& t : torals)
    if (!t.is_zero()) ts.push_back(t);

  MaximalToriResult res;
  std::set<Subspace> visited;
  std::set<Subspace> maximal;
  bool capped = false;

  // DFS over commuting-toral spans; a span with no admissible extension is a
  // maximal commuting toral subspace.
  std::function<void(const Subspace&, const std::vector<size_t>&)> dfs =
      [&](const Subspace& span, const std::vector<size_t>& cands) {
        if (capped) return;
        if (!visited.insert(span).second) return;
        std::vector<size_t> usable;
        for (size_t idx : cands)
          if (!span.contains(ts[idx])) usable.push_back(idx);
        if (usable.empty()) {
          if (span.dim() > 0) {
            maximal.insert(span);
            if (maximal.size() > torus_cap) capped = true;
          }
          return;
        }
        for (size_t idx : usable) {
          Subspace grown = sum(span, Subspace::span_of({ts[idx]}, A.field(), A.dim()));
          std::vector<size_t> next;
          for (size_t idx2 : usable)
            if (A.bracket(ts[idx2], ts[idx]).is_zero()) next.push_back(idx2);
          dfs(grown, next);
          if (capped) return;
        }
      };

  std::vector<size_t> all(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) all[i] = i;
  dfs(Subspace(A.field(), A.dim()), all);

  res.exhaustive = !capped;
  for (const Subspace& s : maximal) res.mu = std::max(res.mu, s.dim());
  for (const Subspace& s : maximal)
    if (s.dim() == res.mu) res.tori.push_back(Torus{s});
  return res;
}

RootDecomposition root_decomposition(const Algebra& A, const Torus& t) {
  const FieldCtx* F = A.field();
  size_t m = t.span.dim();
  std::vector<Mat> ads;
  for (size_t i = 0; i < m; ++i) {
    Vec row = t.span.basis_row(i);
    if (A.pmap(row) != row)
      throw precondition_error("root_decomposition: torus basis row is not toral");
    ads.push_back(A.ad(row));
  }
  RootDecomposition d;
  d.torus = t;
  size_t covered = 0;
  for_each_point(F, m, [&](const Vec& w) {
    Subspace space = Subspace::full(F, A.dim());
    for (size_t i = 0; i < m; ++i) space = intersect(space, kernel(ads[i].shifted(w[i])));
    if (w.is_zero()) {
      d.cartan = space;
      covered += space.dim();
    } else if (space.dim() > 0) {
      d.roots.push_back(Root{w, space});
      covered += space.dim();
    }
    return true;
  });
  if (covered != A.dim())
    throw invariant_violation("root_decomposition: weight spaces do not exhaust the algebra");
  return d;
}

RhoRResult rho_r_invariance(const Algebra& A, const MaximalToriResult& mt) {
  RhoRResult res{0, 0, {}};
  bool first = true;
  for (const Torus& t : mt.tori) {
    RootDecomposition d = root_decomposition(A, t);
    res.per_torus.emplace_back(d.rho(), d.r_count());
    if (first) {
      res.rho = d.rho();
      res.r_count = d.r_count();
      first = false;
    } else if (res.rho != d.rho() || res.r_count != d.r_count()) {
      throw invariant_violation(
          "rho_r_invariance: (rho, r) differ between maximal tori of equal dimension");
    }
  }
  return res;
}

GenericallyToralResult is_generically_toral(const Algebra& A, const MaximalToriResult& mt) {
  for (const Torus& t : mt.tori) {
    Subspace cent = A.centralizer_of_set(t.span);
    if (cent.dim() == t.span.dim()) return {true, t};
  }
  return {false, std::nullopt};
}

size_t rank_from_tori(const Algebra& A, const MaximalToriResult& mt) {
  size_t rk = A.dim();
  for (const Torus& t : mt.tori)
    rk = std::min(rk, A.centralizer_of_set(t.span).dim());
  return rk;
}

Subspace root_kernel(const RootDecomposition& d, const Root& alpha) {
  const FieldCtx* F = alpha.functional.field();
  size_t m = d.torus.span.dim();
  Mat f(F, 1, m);
  for (size_t i = 0; i < m; ++i) f.set(0, i, alpha.functional[i]);
  Subspace coeff = kernel(f);  // coefficient vectors over the toral basis
  std::vector<Vec> rows;
  for (size_t i = 0; i < coeff.dim(); ++i) {
    Vec v(F, d.torus.span.ambient());
    for (size_t j = 0; j < m; ++j) v.add_scaled(d.torus.span.basis_row(j), coeff.basis_row(i)[j]);
    rows.push_back(v);
  }
  return Subspace::span_of(rows, F, d.torus.span.ambient());
}

Gt2Result gt2_check(const Algebra& A, const RootDecomposition& d) {
  const FieldCtx* F = A.field();
  for (const Root& alpha : d.roots) {
    Subspace ker = root_kernel(d, alpha);
    Gt2Result bad{false, std::nullopt};
    bool ok = true;
    for_each_line(F, alpha.space.dim(), [&](const Vec& coeff) {
      Vec x(F, A.dim());
      for (size_t i = 0; i < alpha.space.dim(); ++i) x.add_scaled(alpha.space.basis_row(i), coeff[i]);
      if (!ker.contains(A.pmap(x))) {
        bad = {false, x};
        ok = false;
        return false;
      }
      return true;
    });
    if (!ok) return bad;
  }
  return {true, std::nullopt};
}

Subspace one_section(const Algebra& A, const RootDecomposition& d, const Root& alpha) {
  const FieldCtx* F = A.field();
  bool found = false;
  for (const Root& r : d.roots)
    if (r.functional == alpha.functional) found = true;
  if (!found) throw std::domain_error("one_section: not a root of this decomposition");

  Subspace s = d.cartan;
  for (uint32_t i = 1; i < F->p(); ++i) {
    Vec target = alpha.functional.scaled(i);
    for (const Root& r : d.roots)
      if (r.functional == target) s = sum(s, r.space);
  }
  return s;
}

bool is_solvable_root(const Algebra& A, const RootDecomposition& d, const Root& alpha) {
  return A.subspace_solvable(one_section(A, d, alpha));
}

std::optional<FreelyGeneratedCertificate> freely_generated_certificate(
    const Algebra& A, const MaximalToriResult& mt) {
  const FieldCtx* F = A.field();
  for (const Torus& t : mt.tori) {
    RootDecomposition d = root_decomposition(A, t);
    size_t r = d.roots.size();
    if (r == 0 || r > 20) continue;
    auto space_of = [&](const Vec& f) -> const Subspace* {
      for (const Root& root : d.roots)
        if (root.functional == f) return &root.space;
      return nullptr;
    };
    // subsets in canonical order: by size, then lexicographically
    for (size_t size = 1; size <= r; ++size) {
      std::vector<size_t> idx(size);
      std::function<bool(size_t, size_t)> pick = [&](size_t pos, size_t start) -> bool {
        if (pos == size) {
          Subspace span_sum(F, A.dim());
          size_t dim_total = 0;
          std::vector<Vec> gens;
          for (size_t u : idx) {
            const Root& a = d.roots[u];
            const Subspace* neg = space_of(a.functional.scaled(F->neg(1)));
            Subspace br = neg ? A.bracket_span(a.space, *neg) : Subspace(F, A.dim());
            if (br.dim() == 0) return false;  // (a)
            dim_total += br.dim();
            span_sum = sum(span_sum, br);
            for (size_t i = 0; i < a.space.dim(); ++i) gens.push_back(a.space.basis_row(i));
            if (neg)
              for (size_t i = 0; i < neg->dim(); ++i) gens.push_back(neg->basis_row(i));
          }
          if (dim_total != span_sum.dim() || span_sum != t.span) return false;  // (b)
          if (A.subalgebra_generated(gens, /*with_pmap=*/false).dim() != A.dim())
            return false;  // (c)
          return true;
        }
        for (size_t u = start; u + (size - pos - 1) < r; ++u) {
          idx[pos] = u;
          if (pick(pos + 1, u + 1)) return true;
        }
        return false;
      };
      if (pick(0, 0)) {
        FreelyGeneratedCertificate cert;
        cert.torus = t;
        for (size_t u : idx) cert.root_subset.push_back(d.roots[u].functional);
        return cert;
      }
    }
  }
  return std::nullopt;
}

InvariantProfile invariant_profile(const Algebra& A, uint32_t rank_ext, const Budget& budget,
                                   Work* work) {
  InvariantProfile prof;
  prof.dim = A.dim();
  prof.p = A.p();
  prof.center_dim = A.center().dim();
  prof.toral_radical_dim = A.toral_radical().dim();
  prof.solvable = A.is_solvable();
  prof.nilpotent = A.is_nilpotent();
  prof.perfect = A.is_perfect();

  MaximalToriResult mt = maximal_tori(A, budget);
  prof.mu = mt.mu;
  prof.tori_count = mt.tori.size();
  prof.tori_exhaustive = mt.exhaustive;
  RhoRResult rr = rho_r_invariance(A, mt);
  prof.rho = rr.rho;
  prof.r_count = rr.r_count;
  if (!mt.tori.empty()) {
    RootDecomposition d = root_decomposition(A, mt.tori.front());
    prof.r_t = d.r_t();
  }
  GenericallyToralResult gt = is_generically_toral(A, mt);
  prof.generically_toral = gt.generically_toral;
  prof.rk = rank_from_tori(A, mt);
  prof.rk_lower_bound_only = !gt.generically_toral;

  RankResult rank = elementary_rank(A, rank_ext, budget, work);
  prof.p_rank = rank.rank;
  prof.p_rank_ext = rank.ext;
  prof.p_rank_exhaustive = rank.exhaustive;
  return prof;
}

}  // namespace prank
