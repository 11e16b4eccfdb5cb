#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prank/catalog.hpp"
#include "prank/spectra.hpp"
#include "prank/tori.hpp"
#include "test_support.hpp"

using namespace prank;
namespace ts = prank::testsupport;

namespace {

std::vector<catalog::Entry> small_entries() {
  auto e5 = catalog::entries(5);
  auto e3 = catalog::entries(3);
  e5.insert(e5.end(), std::make_move_iterator(e3.begin()), std::make_move_iterator(e3.end()));
  return e5;
}

}  // namespace

TEST_CASE("toral element enumeration") {
  // a 1-dim torus carries exactly the prime-field multiples of its generator
  auto t1 = toral_elements(catalog::torus(1, 5));
  CHECK(t1.size() == 5);  // zero included

  // in the Heisenberg algebra only the central line is toral
  Algebra h = catalog::heisenberg_toral(5);
  auto th = toral_elements(h);
  CHECK(th.size() == 5);
  for (const Vec& v : th) {
    CHECK(v[0] == 0);
    CHECK(v[1] == 0);
  }

  // nilpotent p-map: only zero
  const FieldCtx* F = FieldCtx::get(5, 1);
  Algebra line(F, {"x"}, {}, {}, {Vec(F, 1)});
  CHECK(toral_elements(line).size() == 1);
}

TEST_CASE("maximal tori and mu") {
  MaximalToriResult sl2t = maximal_tori(catalog::sl2(5));
  CHECK(sl2t.mu == 1);
  CHECK(sl2t.tori.size() == 15);
  CHECK(sl2t.exhaustive);

  CHECK(maximal_tori(catalog::g_lambda(5)).mu == 2);
  MaximalToriResult lr = maximal_tori(catalog::lr1_remark(5, 2));
  CHECK(lr.mu == 1);
  CHECK(lr.tori.size() == 5);
  CHECK(maximal_tori(catalog::torus(3, 5)).tori.size() == 1);
}

TEST_CASE("root decomposition of sl2 at the diagonal torus") {
  Algebra s = catalog::sl2(5);
  Vec h = Vec::unit(s.field(), 3, 1);
  RootDecomposition d =
      root_decomposition(s, Torus{Subspace::span_of({h}, s.field(), 3)});
  CHECK(d.cartan.dim() == 1);
  REQUIRE(d.roots.size() == 2);
  CHECK(d.roots[0].functional[0] == 2);
  CHECK(d.roots[1].functional[0] == 3);
  // eigen-oracle: each root space is an actual ad-eigenspace
  for (const Root& r : d.roots)
    for (size_t i = 0; i < r.space.dim(); ++i) {
      Vec x = r.space.basis_row(i);
      CHECK(s.bracket(h, x) == x.scaled(r.functional[0]));
    }
  CHECK(d.rho() == 1);
  CHECK(d.r_t() == 1);
}

TEST_CASE("root decomposition of the Witt algebra at k e_0") {
  Algebra w = catalog::witt(1, 5);
  Vec e0 = Vec::unit(w.field(), 5, 1);
  RootDecomposition d = root_decomposition(w, Torus{Subspace::span_of({e0}, w.field(), 5)});
  CHECK(d.cartan.dim() == 1);
  REQUIRE(d.roots.size() == 4);
  for (uint32_t i = 0; i < 4; ++i) {
    CHECK(d.roots[i].functional[0] == i + 1);
    CHECK(d.roots[i].space.dim() == 1);
  }
}

TEST_CASE("rho and r agree across all maximal tori") {
  MaximalToriResult mt = maximal_tori(catalog::sl2(5));
  RhoRResult rr = rho_r_invariance(catalog::sl2(5), mt);
  CHECK(rr.rho == 1);
  CHECK(rr.r_count == 2);
  CHECK(rr.per_torus.size() == 15);

  Algebra t3 = catalog::torus(3, 5);
  RhoRResult rt = rho_r_invariance(t3, maximal_tori(t3));
  CHECK(rt.rho == 0);
  CHECK(rt.r_count == 0);

  Algebra h = catalog::heisenberg_toral(5);
  RhoRResult rh = rho_r_invariance(h, maximal_tori(h));
  CHECK(rh.rho == 0);
  CHECK(rh.r_count == 0);
}

TEST_CASE("generic torality") {
  Algebra bm = catalog::borel_minus(5);
  MaximalToriResult mt = maximal_tori(bm);
  GenericallyToralResult gt = is_generically_toral(bm, mt);
  CHECK(gt.generically_toral);
  CHECK(rank_from_tori(bm, mt) == 1);

  Algebra lr = catalog::lr1_remark(5, 2);
  CHECK_FALSE(is_generically_toral(lr, maximal_tori(lr)).generically_toral);

  Algebra t = catalog::torus(2, 5);
  CHECK(is_generically_toral(t, maximal_tori(t)).generically_toral);
}

TEST_CASE("root-space p-images land in the root kernel") {
  for (Algebra A : {catalog::witt(1, 5), catalog::g_lambda(5)}) {
    MaximalToriResult mt = maximal_tori(A);
    GenericallyToralResult gt = is_generically_toral(A, mt);
    REQUIRE(gt.generically_toral);
    for (const Torus& t : mt.tori) {
      Gt2Result res = gt2_check(A, root_decomposition(A, t));
      CHECK(res.holds);
    }
  }
}

TEST_CASE("one-sections and solvable roots") {
  // sl2: the 1-section of either root is the whole algebra, not solvable
  Algebra s = catalog::sl2(5);
  RootDecomposition d =
      root_decomposition(s, Torus{Subspace::span_of({Vec::unit(s.field(), 3, 1)}, s.field(), 3)});
  Subspace sec = one_section(s, d, d.roots[0]);
  CHECK(sec.dim() == 3);
  CHECK_FALSE(is_solvable_root(s, d, d.roots[0]));

  // abelian-enlarged Borel: the whole algebra again, but solvable
  Algebra bm = catalog::borel_minus(5);
  MaximalToriResult mt = maximal_tori(bm);
  RootDecomposition db = root_decomposition(bm, mt.tori.front());
  CHECK(one_section(bm, db, db.roots[0]).dim() == 3);
  CHECK(is_solvable_root(bm, db, db.roots[0]));

  // W(1): all nonzero weights are multiples of any fixed root, so the
  // 1-section is everything and is not solvable
  Algebra w = catalog::witt(1, 5);
  RootDecomposition dw =
      root_decomposition(w, Torus{Subspace::span_of({Vec::unit(w.field(), 5, 1)}, w.field(), 5)});
  CHECK(one_section(w, dw, dw.roots[0]).dim() == 5);
  CHECK_FALSE(is_solvable_root(w, dw, dw.roots[0]));

  Root fake{Vec(w.field(), 1), Subspace(w.field(), 5)};
  CHECK_THROWS_AS(one_section(w, dw, fake), std::domain_error);
}

TEST_CASE("freely generated certificates") {
  Algebra s = catalog::sl2(5);
  auto cert = freely_generated_certificate(s, maximal_tori(s));
  REQUIRE(cert.has_value());
  CHECK(cert->root_subset.size() == 1);

  Algebra bm = catalog::borel_minus(5);
  CHECK_FALSE(freely_generated_certificate(bm, maximal_tori(bm)).has_value());

  Algebra t = catalog::torus(2, 5);
  CHECK_FALSE(freely_generated_certificate(t, maximal_tori(t)).has_value());

  // condition (a) fails for the Witt algebra: the only opposite pair with a
  // nonzero bracket spans the torus, but generation stops at the sl2 triple
  Algebra w = catalog::witt(1, 5);
  CHECK_FALSE(freely_generated_certificate(w, maximal_tori(w)).has_value());
}

TEST_CASE("toral basis rows act semisimply with rational eigenvalues") {
  for (const auto& e : small_entries()) {
    MaximalToriResult mt = maximal_tori(e.alg);
    for (const Torus& t : mt.tori)
      for (size_t i = 0; i < t.span.dim(); ++i) {
        Mat ad = e.alg.ad(t.span.basis_row(i));
        CHECK(ad.power(e.alg.p()) == ad);  // minimal polynomial divides X^p - X
      }
  }
}

TEST_CASE("profiles are internally consistent across the catalog") {
  for (const auto& e : small_entries()) {
    InvariantProfile prof = invariant_profile(e.alg);
    // rho/r invariance ran without an invariant_violation inside
    if (prof.generically_toral) {
      CHECK(prof.r_t == prof.mu - prof.center_dim);
      CHECK_FALSE(prof.rk_lower_bound_only);
      CHECK(prof.rk == prof.mu);  // self-centralizing maximal tori
    }
    CHECK(prof.toral_radical_dim <= prof.center_dim);
    CHECK((prof.p_rank == 0) == e.alg.is_torus());
  }
}

TEST_CASE("decomposition dimensions always sum to dim") {
  for (const auto& e : small_entries()) {
    MaximalToriResult mt = maximal_tori(e.alg);
    for (const Torus& t : mt.tori) {
      RootDecomposition d = root_decomposition(e.alg, t);  // throws if incomplete
      size_t total = d.cartan.dim();
      for (const Root& r : d.roots) total += r.space.dim();
      CHECK(total == e.alg.dim());
    }
  }
}

TEST_CASE("a maximal root space beside a fat root yields a commuting pair") {
  // the p=3 graded example is the one catalog entry with rho = 2; its fat
  // root space must contain a commuting pair with every non-opposite root
  // space of dimension >= 2 (here: itself)
  Algebra g3 = catalog::p3_g();
  MaximalToriResult mt = maximal_tori(g3);
  RootDecomposition d = root_decomposition(g3, mt.tori.front());
  CHECK(d.rho() == 2);
  const Root* fat = nullptr;
  for (const Root& r : d.roots)
    if (r.space.dim() == 2) fat = &r;
  REQUIRE(fat != nullptr);
  auto pair = find_commuting_pair(g3, fat->space, fat->space, 3);
  REQUIRE(pair.has_value());
  CHECK(g3.bracket(pair->first, pair->second).is_zero());
}
