#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prank/catalog.hpp"
#include "prank/spectra.hpp"
#include "test_support.hpp"

using namespace prank;

TEST_CASE("every builder validates and is deterministic") {
  std::vector<std::pair<std::string, std::function<Algebra()>>> builders{
      {"sl2(5)", [] { return catalog::sl2(5); }},
      {"sl2(3)", [] { return catalog::sl2(3); }},
      {"borel(5)", [] { return catalog::borel(5); }},
      {"borel_minus(5)", [] { return catalog::borel_minus(5); }},
      {"heisenberg_toral(5)", [] { return catalog::heisenberg_toral(5); }},
      {"g_lambda(5)", [] { return catalog::g_lambda(5); }},
      {"lr1_remark(5,2)", [] { return catalog::lr1_remark(5, 2); }},
      {"lr1_remark(5,3)", [] { return catalog::lr1_remark(5, 3); }},
      {"p3_h", [] { return catalog::p3_h(); }},
      {"p3_g", [] { return catalog::p3_g(); }},
      {"witt(1,5)", [] { return catalog::witt(1, 5); }},
      {"witt(1,7)", [] { return catalog::witt(1, 7); }},
      {"witt(2,3)", [] { return catalog::witt(2, 3); }},
      {"torus(3,5)", [] { return catalog::torus(3, 5); }},
      {"tn_cyclic(5,2)", [] { return catalog::tn_cyclic(5, 2); }},
      {"torus_times_sl2(5)", [] { return catalog::torus_times_sl2(5); }},
  };
  for (auto& [name, make] : builders) {
    INFO(name);
    Algebra a = make();
    CHECK(a.is_valid());
    CHECK(a.same_tables(make()));
  }
}

TEST_CASE("witt structure constants follow the degree rule") {
  Algebra w = catalog::witt(1, 5);
  REQUIRE(w.dim() == 5);
  const FieldCtx* F = w.field();
  // basis order e_{-1}, e_0, ..., e_3; [e_i, e_j] = (j - i) e_{i+j}
  auto idx = [&](int i) { return size_t(i + 1); };
  for (int i = -1; i <= 3; ++i)
    for (int j = -1; j <= 3; ++j) {
      Vec br = w.bracket(Vec::unit(F, 5, idx(i)), Vec::unit(F, 5, idx(j)));
      Vec expect(F, 5);
      int target = i + j;
      if (-1 <= target && target <= 3) {
        uint32_t c = uint32_t(((j - i) % 5 + 5) % 5);
        expect = Vec::unit(F, 5, idx(target)).scaled(c);
      }
      CHECK(br == expect);
    }
}

TEST_CASE("witt p-map from the operator power") {
  Algebra w = catalog::witt(1, 5);
  const FieldCtx* F = w.field();
  CHECK(w.pmap_basis(0).is_zero());                    // e_{-1}^[5] = 0
  CHECK(w.pmap_basis(1) == Vec::unit(F, 5, 1));        // e_0 toral
  for (size_t i = 2; i < 5; ++i) CHECK(w.pmap_basis(i).is_zero());
  Algebra w7 = catalog::witt(1, 7);
  CHECK(w7.dim() == 7);
  CHECK(w7.pmap_basis(1) == Vec::unit(w7.field(), 7, 1));
}

TEST_CASE("dimensions of the named algebras") {
  CHECK(catalog::p3_h().dim() == 5);
  CHECK(catalog::p3_g().dim() == 6);
  CHECK(catalog::witt(2, 3).dim() == 18);
  CHECK(catalog::g_lambda(5).dim() == 4);
  CHECK(catalog::tn_cyclic(5, 3).dim() == 5);
}

TEST_CASE("tori have rank zero") {
  CHECK(elementary_rank(catalog::torus(3, 5), 1).rank == 0);
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(catalog::witt(3, 3), capacity_error);  // 81 > 64
  CHECK_THROWS_AS(catalog::sl2(4), precondition_error);
  CHECK_THROWS_AS(catalog::sl2(2), precondition_error);
  CHECK_THROWS_AS(catalog::build("p3_h", 5, std::nullopt), precondition_error);
  CHECK_THROWS_AS(catalog::build("nope", 5, std::nullopt), precondition_error);
  CHECK_THROWS_AS(catalog::lr1_remark(5, 1), precondition_error);
}

TEST_CASE("build dispatch covers the catalog") {
  CHECK(catalog::build("sl2", 5, std::nullopt).same_tables(catalog::sl2(5)));
  CHECK(catalog::build("witt", 5, 1).same_tables(catalog::witt(1, 5)));
  CHECK(catalog::build("lr1_remark", 5, 2).same_tables(catalog::lr1_remark(5, 2)));
  CHECK(catalog::build("torus", 7, 2).same_tables(catalog::torus(2, 7)));
}

TEST_CASE("tabulated dimension rows all satisfy the saturation bound") {
  auto rows = catalog::cartan_type_bound_rows();
  CHECK(rows.size() >= 20);
  for (const auto& r : rows) {
    INFO(r.family << " param=" << r.param << " p=" << r.p);
    CHECK(saturation_bound(r.dim, r.mu, r.rk, r.center_dim, r.p, r.generically_toral));
  }
}
