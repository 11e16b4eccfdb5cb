#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prank/field.hpp"
#include "test_support.hpp"

using namespace prank;
namespace ts = prank::testsupport;

TEST_CASE("prime field arithmetic") {
  const FieldCtx* F5 = FieldCtx::get(5, 1);
  CHECK(F5->inv(2) == 3);  // 2*3 = 6 = 1
  CHECK(F5->mul(4, 4) == 1);
  CHECK(F5->add(3, 4) == 2);
  CHECK(F5->neg(2) == 3);
  CHECK(F5->frobenius(2) == 2);  // Frobenius fixes the prime field
  CHECK_THROWS_AS(F5->inv(0), std::domain_error);
}

TEST_CASE("default moduli are the smallest irreducibles") {
  const FieldCtx* F9 = FieldCtx::get(3, 2);
  CHECK(F9->modulus() == std::vector<uint32_t>{1, 0, 1});  // T^2 + 1
  const FieldCtx* F25 = FieldCtx::get(5, 2);
  CHECK(F25->modulus() == std::vector<uint32_t>{2, 0, 1});  // T^2 + 2
  // interning: same parameters, same context
  CHECK(F9 == FieldCtx::get(3, 2));
  CHECK(F9 != FieldCtx::get(3, std::vector<uint32_t>{2, 2, 1}));
}

TEST_CASE("extension arithmetic in F_9") {
  const FieldCtx* F9 = FieldCtx::get(3, 2);
  FieldElement t(F9, F9->encode({0, 1}));
  CHECK((t * t).encoded() == 2);  // T^2 = -1 = 2 forced by the modulus
  // T^3 = -T
  FieldElement minus_t = -t;
  CHECK(t.frobenius() == minus_t);
}

TEST_CASE("frobenius against square-and-multiply") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{3, 2}, {5, 2}, {3, 3}}) {
    const FieldCtx* F = FieldCtx::get(p, k);
    for (uint32_t a = 0; a < F->q(); ++a) {
      // independent route: binary exponentiation on top of mul only
      uint32_t r = 1, base = a, e = p;
      while (e) {
        if (e & 1) r = F->mul(r, base);
        base = F->mul(base, base);
        e >>= 1;
      }
      CHECK(F->frobenius(a) == r);
    }
  }
}

TEST_CASE("frobenius order divides the extension degree") {
  const FieldCtx* F25 = FieldCtx::get(5, 2);
  for (uint32_t a = 0; a < F25->q(); ++a)
    CHECK(F25->frobenius(F25->frobenius(a)) == a);
}

TEST_CASE("frobenius is a field homomorphism") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {3, 2}}) {
    const FieldCtx* F = FieldCtx::get(p, k);
    auto g = ts::rng(42 + p + k);
    for (int i = 0; i < 1000; ++i) {
      uint32_t a = ts::rand_scalar(g, F), b = ts::rand_scalar(g, F);
      CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
      CHECK(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
    }
  }
}

TEST_CASE("field axioms on random triples") {
  const FieldCtx* F = FieldCtx::get(5, 3);
  auto g = ts::rng(7);
  for (int i = 0; i < 500; ++i) {
    uint32_t a = ts::rand_scalar(g, F), b = ts::rand_scalar(g, F), c = ts::rand_scalar(g, F);
    CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
    if (a) CHECK(F->mul(a, F->inv(a)) == 1);
  }
}

TEST_CASE("context preconditions") {
  CHECK_THROWS_AS(FieldCtx::get(4, 1), precondition_error);  // composite
  CHECK_THROWS_AS(FieldCtx::get(2, 1), precondition_error);  // p >= 3
  // T^2 + 1 is reducible over F_5 (2^2 = -1)
  CHECK_THROWS_AS(FieldCtx::get(5, std::vector<uint32_t>{1, 0, 1}), precondition_error);
  const FieldCtx* F5 = FieldCtx::get(5, 1);
  const FieldCtx* F9 = FieldCtx::get(3, 2);
  FieldElement a(F5, 2), b(F9, 2);
  CHECK_THROWS_AS(a + b, context_error);
}
