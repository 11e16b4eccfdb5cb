#include "prank/spectra.hpp"

#include <algorithm>
#include <set>

namespace prank {

namespace {

const FieldCtx* ext_ctx(const Algebra& A, uint32_t ext) {
  return ext == 1 ? A.field() : FieldCtx::get(A.p(), ext);
}

void check_enumerable(const Algebra& A, uint32_t ext, const Budget& budget) {
  if (!fits_budget(A.p(), uint64_t(ext) * A.dim(), budget.max_points))
    throw capacity_error("enumeration: p^(k*dim) exceeds the budget of " +
                             std::to_string(budget.max_points) + " points",
                         budget.max_points);
}

}  // namespace

uint64_t NullconePoints::count_with_zero() const {
  if (!lines_only) return points.size() + 1;
  const FieldCtx* K = points.empty() ? nullptr : points[0].field();
  return points.size() * (K ? (K->q() - 1) : 0) + 1;
}

NullconePoints nullcone(const Algebra& A, uint32_t ext, bool lines_only, const Budget& budget,
                        Work* work) {
  check_enumerable(A, ext, budget);
  const FieldCtx* K = ext_ctx(A, ext);
  NullconePoints out{&A, ext, lines_only, {}, true, };
  // the nullcone is closed under scaling, so one p-map evaluation per line
  for_each_line(K, A.dim(), [&](const Vec& rep) {
    if (work) ++work->pmap_evaluations;
    if (A.pmap(rep).is_zero()) {
      if (lines_only) {
        out.points.push_back(rep);
      } else {
        for (uint32_t s = 1; s < K->q(); ++s) out.points.push_back(rep.scaled(s));
      }
    }
    return true;
  });
  std::sort(out.points.begin(), out.points.end());
  return out;
}

bool witness_is_valid(const Algebra& A, const Subspace& w) {
  if (w.ambient() != A.dim()) return false;
  for (size_t i = 0; i < w.dim(); ++i) {
    if (!A.pmap(w.basis_row(i)).is_zero()) return false;
    for (size_t j = i + 1; j < w.dim(); ++j)
      if (!A.bracket(w.basis_row(i), w.basis_row(j)).is_zero()) return false;
  }
  return true;
}

namespace {

// Witness sets level by level: level 1 = nullcone lines; level r+1 extends a
// level-r witness by a nullcone line inside the centralizer of its basis.
// Candidates come from whichever is smaller: the nullcone line list or the
// line set of the centralizer itself (looked up in the sorted nullcone).
std::vector<std::set<Subspace>> witness_levels(const Algebra& A, size_t max_r, uint32_t ext,
                                               const Budget& budget, Work* work) {
  const FieldCtx* K = ext_ctx(A, ext);
  NullconePoints nc = nullcone(A, ext, /*lines_only=*/true, budget, work);

  std::vector<std::set<Subspace>> levels;  // levels[r-1] = E(r) witnesses
  std::set<Subspace> cur;
  for (const Vec& rep : nc.points) cur.insert(Subspace::span_of({rep}, K, A.dim()));
  levels.push_back(cur);

  auto null_lines_in = [&](const Subspace& cent) {
    std::vector<Vec> out;
    uint64_t cent_lines = 0;
    bool small = fits_budget(K->q(), cent.dim(), 4 * nc.points.size() + 16, &cent_lines);
    if (small) {
      for_each_line(K, cent.dim(), [&](const Vec& coeff) {
        Vec v(K, A.dim());
        for (size_t i = 0; i < cent.dim(); ++i) v.add_scaled(cent.basis_row(i), coeff[i]);
        Vec rep = v.scaled(K->inv(v[v.first_nonzero()]));
        if (std::binary_search(nc.points.begin(), nc.points.end(), rep)) out.push_back(rep);
        return true;
      });
      std::sort(out.begin(), out.end());
    } else {
      for (const Vec& rep : nc.points)
        if (cent.contains(rep)) out.push_back(rep);
    }
    return out;
  };

  while (levels.size() < max_r && !levels.back().empty()) {
    std::set<Subspace> next;
    for (const Subspace& w : levels.back()) {
      for (const Vec& rep : null_lines_in(A.centralizer_of_set(w))) {
        if (w.contains(rep)) continue;
        Subspace grown = sum(w, Subspace::span_of({rep}, K, A.dim()));
        if (work) ++work->subspaces_built;
        next.insert(grown);
      }
    }
    levels.push_back(next);
  }
  return levels;
}

}  // namespace

std::vector<Subspace> elementary_witnesses(const Algebra& A, size_t r, uint32_t ext,
                                           const Budget& budget, Work* work) {
  if (r == 0) return {};
  auto levels = witness_levels(A, r, ext, budget, work);
  if (levels.size() < r) return {};
  return {levels[r - 1].begin(), levels[r - 1].end()};
}

RankResult elementary_rank(const Algebra& A, uint32_t ext, const Budget& budget, Work* work) {
  auto levels = witness_levels(A, A.dim(), ext, budget, work);
  RankResult res;
  res.ext = ext;
  res.exhaustive = true;
  for (size_t r = levels.size(); r > 0; --r) {
    if (!levels[r - 1].empty()) {
      res.rank = uint32_t(r);
      res.witness = *levels[r - 1].begin();
      break;
    }
  }
  return res;
}

SaturationResult is_two_saturated(const Algebra& A, uint32_t ext, const Budget& budget,
                                  Work* work) {
  NullconePoints nc = nullcone(A, ext, /*lines_only=*/true, budget, work);
  for (const Vec& x : nc.points) {
    Subspace cent = A.centralizer(x);
    bool partnered = false;
    for (const Vec& y : nc.points) {
      if (y == x) continue;
      if (!cent.contains(y)) continue;
      // y is a nullcone line in C(x); independence from x is automatic for
      // distinct line representatives
      partnered = true;
      break;
    }
    if (!partnered) return {false, x, ext};
  }
  return {true, std::nullopt, ext};
}

bool saturation_bound(uint64_t dim_g, uint64_t mu, uint64_t rk, uint64_t dim_center, uint64_t p,
                      bool generically_toral) {
  if (dim_g > p * (mu + rk)) return true;
  if (generically_toral && 2 * mu >= 1 + dim_center && dim_g > p * (2 * mu - 1 - dim_center))
    return true;
  return false;
}

std::optional<std::pair<Vec, Vec>> find_commuting_pair(const Algebra& A, const Subspace& U,
                                                       const Subspace& V, uint32_t max_ext,
                                                       const Budget& budget) {
  if (U.dim() != 2) throw precondition_error("find_commuting_pair: dim U must be 2");
  for (uint32_t k = 1; k <= max_ext; ++k) {
    const FieldCtx* K = ext_ctx(A, k);
    if (!fits_budget(K->q(), U.dim(), budget.max_points) ||
        !fits_budget(K->q(), V.dim(), budget.max_points))
      throw capacity_error("find_commuting_pair: coefficient enumeration exceeds budget",
                           budget.max_points);
    Mat ub = U.basis().lifted(K), vb = V.basis().lifted(K);
    std::optional<std::pair<Vec, Vec>> found;
    for_each_line(K, U.dim(), [&](const Vec& cu) {
      Vec u(K, A.dim());
      for (size_t i = 0; i < U.dim(); ++i) u.add_scaled(ub.row(i), cu[i]);
      bool cont = true;
      for_each_line(K, V.dim(), [&](const Vec& cv) {
        Vec v(K, A.dim());
        for (size_t i = 0; i < V.dim(); ++i) v.add_scaled(vb.row(i), cv[i]);
        if (A.bracket(u, v).is_zero()) {
          found = std::make_pair(u, v);
          cont = false;
          return false;
        }
        return true;
      });
      return cont;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace prank
