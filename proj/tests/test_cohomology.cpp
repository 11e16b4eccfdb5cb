#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prank/catalog.hpp"
#include "prank/cohomology.hpp"
#include "prank/constructions.hpp"
#include "prank/spectra.hpp"
#include "prank/tori.hpp"
#include "test_support.hpp"

using namespace prank;
namespace ts = prank::testsupport;

namespace {

Cochain pair_form(const Algebra& A, size_t i, size_t j) {
  Mat m(A.field(), A.dim(), A.dim());
  m.set(i, j, 1);
  m.set(j, i, A.field()->neg(1));
  return cochain2_from_matrix(A, m);
}

}  // namespace

TEST_CASE("the Koszul differential of the defining cocycle vanishes") {
  Algebra bm = catalog::borel_minus(5);
  Cochain lam = pair_form(bm, 1, 2);  // lambda(x, y) = 1, lambda(t, -) = 0
  Cochain dl = differential(lam);
  CHECK(dl.at3(0, 1, 2) == 0);
  auto [closed, witness] = is_cocycle(lam);
  CHECK(closed);
  CHECK(class_is_nonzero(lam));  // the extension does not split
}

TEST_CASE("differentials vanish identically on abelian algebras") {
  Algebra t = catalog::torus(3, 5);
  CHECK(d1_matrix(t).is_zero());
  CHECK(d2_matrix(t).is_zero());
}

TEST_CASE("the e-f form on sl2 is a coboundary") {
  // evaluating the differential term by term: d(lambda)(h,e,f)
  //   = -lambda([h,e],f) + lambda([h,f],e) - lambda([e,f],h)
  //   = -2 lambda(e,f) - 2 lambda(f,e) - 0 = 0,
  // and lambda = d(f) for the functional with f(h) = -1
  Algebra s = catalog::sl2(5);
  Cochain lam = pair_form(s, 0, 2);
  auto [closed, witness] = is_cocycle(lam);
  CHECK(closed);
  CHECK_FALSE(class_is_nonzero(lam));
  Vec fh(s.field(), {0, 4, 0});
  Cochain df = differential(make_cochain1(s, fh));
  CHECK(df.comps == lam.comps);
}

TEST_CASE("non-cocycles carry a witnessing triple") {
  Algebra w = catalog::witt(1, 5);
  Cochain lam = pair_form(w, 0, 3);  // pairs e_{-1} with e_2
  auto [closed, witness] = is_cocycle(lam);
  REQUIRE_FALSE(closed);
  CHECK(witness == std::array<size_t, 3>{0, 1, 3});
  // re-evaluate the differential at the witness
  CHECK(differential(lam).at3(witness[0], witness[1], witness[2]) != 0);
}

TEST_CASE("d2 after d1 is the zero map") {
  for (uint32_t p : {5u, 3u})
    for (const auto& e : catalog::entries(p))
      if (e.alg.dim() <= kCohomologyDimCap)
        CHECK(d2_matrix(e.alg).mul(d1_matrix(e.alg)).is_zero());
}

TEST_CASE("second cohomology dimensions of the named algebras") {
  CHECK(cohomology(catalog::sl2(5)).h2 == 0);
  CHECK(cohomology(catalog::borel(5)).h2 == 0);
  CHECK(cohomology(catalog::witt(1, 5)).h2 == 1);
  CHECK(cohomology(catalog::witt(1, 7)).h2 == 1);
}

TEST_CASE("report dimensions match an independent rank computation") {
  for (Algebra A : {catalog::witt(1, 5), catalog::g_lambda(5), catalog::p3_g()}) {
    CohomologyReport rep = cohomology(A);
    size_t rank_d1 = rref(d1_matrix(A)).rank();
    size_t rank_d2 = rref(d2_matrix(A)).rank();
    CHECK(rep.b2 == rank_d1);
    CHECK(rep.z2 == pair_count(A.dim()) - rank_d2);
    CHECK(rep.h2 == rep.z2 - rep.b2);
    CHECK(rep.h2_reps.size() == rep.h2);
    CHECK(rep.h1 == A.dim() - A.derived().dim());
  }
}

TEST_CASE("coboundaries are cocycles with zero class") {
  Algebra bm = catalog::borel_minus(5);
  auto g = ts::rng(4);
  for (int i = 0; i < 20; ++i) {
    Cochain f = make_cochain1(bm, ts::rand_vec(g, bm.field(), 3));
    Cochain df = differential(f);
    auto [closed, witness] = is_cocycle(df);
    CHECK(closed);
    CHECK_FALSE(class_is_nonzero(df));
  }
}

TEST_CASE("derivation spaces") {
  // all derivations of sl2 are inner
  CHECK(outer_derivation_dim(catalog::sl2(5)) == 0);

  // an abelian plane with zero p-map: every matrix is a derivation
  const FieldCtx* F = FieldCtx::get(5, 1);
  Algebra plane(F, {"a", "b"}, {}, {}, {Vec(F, 2), Vec(F, 2)});
  CHECK(derivations(plane).dim() == 4);
  CHECK(outer_derivation_dim(plane) == 4);

  // the grading derivation of the p=3 example is a derivation and not inner
  Algebra h = catalog::p3_h();
  Mat D(h.field(), 5, 5);
  D.set(2, 2, 1);
  D.set(3, 3, 1);
  D.set(4, 4, h.field()->neg(1));
  CHECK(matrix_is_derivation(h, D));
  CHECK_FALSE(inner_derivations(h).contains(vectorize(D)));
}

TEST_CASE("cocycles feed extensions; zero classes split up to witnesses") {
  Algebra bm = catalog::borel_minus(5);
  // a nonzero coboundary: extension counts match the split product
  Vec f(bm.field(), {1, 0, 0});
  Cochain df = differential(make_cochain1(bm, f));
  Mat lam(bm.field(), 3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) {
      lam.set(i, j, df.at2(i, j));
      lam.set(j, i, bm.field()->neg(df.at2(i, j)));
    }
  Algebra ext = central_extension(CocycleData{&bm, lam, Vec(bm.field(), 3), 1});
  Algebra split = central_extension(CocycleData{&bm, Mat(bm.field(), 3, 3), Vec(bm.field(), 3), 1});
  CHECK(elementary_witnesses(ext, 2, 1).size() == elementary_witnesses(split, 2, 1).size());
}

TEST_CASE("freely generated algebras with thin root spaces have trivial H2") {
  for (uint32_t p : {5u, 3u})
    for (const auto& e : catalog::entries(p)) {
      if (e.alg.dim() > kCohomologyDimCap) continue;
      MaximalToriResult mt = maximal_tori(e.alg);
      auto cert = freely_generated_certificate(e.alg, mt);
      if (!cert) continue;
      RhoRResult rr = rho_r_invariance(e.alg, mt);
      if (rr.rho != 1) continue;
      CHECK(cohomology(e.alg).h2 == 0);
    }
}

TEST_CASE("dimension cap raises a capacity error") {
  Algebra big = catalog::torus(33, 5);
  CHECK_THROWS_AS(cohomology(big), capacity_error);
}
