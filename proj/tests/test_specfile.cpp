#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prank/report.hpp"
#include "prank/specfile.hpp"

using namespace prank;

TEST_CASE("serialize and parse round-trip") {
  Algebra s = catalog::sl2(5);
  ordered_json doc = serialize_algebra_spec("sl2", s);
  AlgebraSpec back = parse_algebra_spec(doc);
  CHECK(back.name == "sl2");
  CHECK(back.alg.same_tables(s));
  CHECK(back.alg.names() == s.names());
  // serialization is canonical
  CHECK(serialize_algebra_spec("sl2", back.alg).dump() == doc.dump());
}

TEST_CASE("round-trip across the catalog") {
  for (uint32_t p : {5u, 3u})
    for (const auto& e : catalog::entries(p)) {
      AlgebraSpec back = parse_algebra_spec(serialize_algebra_spec(e.name, e.alg));
      CHECK(back.alg.same_tables(e.alg));
    }
}

TEST_CASE("parse rejects malformed documents") {
  ordered_json doc = serialize_algebra_spec("sl2", catalog::sl2(5));

  ordered_json bad = doc;
  bad["bracket"][0]["value"][0] = 7;  // residue out of [0, p)
  CHECK_THROWS_AS(parse_algebra_spec(bad), precondition_error);

  bad = doc;
  bad["bracket"][0]["left"] = 2;
  bad["bracket"][0]["right"] = 1;  // needs left < right
  CHECK_THROWS_AS(parse_algebra_spec(bad), precondition_error);

  bad = doc;
  bad["p"] = 4;
  CHECK_THROWS_AS(parse_algebra_spec(bad), precondition_error);

  bad = doc;
  bad.erase("pmap");
  CHECK_THROWS_AS(parse_algebra_spec(bad), nlohmann::json::exception);

  bad = doc;
  bad["pmap"].erase(2);
  CHECK_THROWS_AS(parse_algebra_spec(bad), shape_error);
}

TEST_CASE("optional enumeration defaults") {
  ordered_json doc = serialize_algebra_spec("sl2", catalog::sl2(5));
  doc["ext_degree"] = 2;
  doc["modulus"] = std::vector<uint32_t>{2, 0, 1};
  AlgebraSpec spec = parse_algebra_spec(doc);
  CHECK(spec.default_ext == 2);
  CHECK(spec.modulus == std::vector<uint32_t>{2, 0, 1});
}

TEST_CASE("canonical hashes distinguish inputs and ignore nothing") {
  std::string h1 = canonical_hash("sl2", catalog::sl2(5));
  CHECK(h1 == canonical_hash("sl2", catalog::sl2(5)));
  CHECK(h1 != canonical_hash("borel", catalog::borel(5)));
  CHECK(h1 != canonical_hash("sl2(3)", catalog::sl2(3)));
  CHECK(h1.substr(0, 8) == "fnv1a64:");
}

TEST_CASE("reports are byte-identical across runs") {
  for (const std::string name : {"sl2", "g_lambda", "lr1_remark"}) {
    Algebra a = catalog::build(name, 5, std::nullopt);
    std::string r1 = build_report(name, a, 1).dump(2);
    std::string r2 = build_report(name, a, 1).dump(2);
    CHECK(r1 == r2);
  }
}

TEST_CASE("reports degrade to capacity markers, deterministically") {
  Algebra w23 = catalog::witt(2, 3);
  ordered_json rep = build_report("witt_2_3", w23, 1);
  CHECK(rep["profile"].contains("skipped"));
  CHECK(rep["nullcone"]["skipped"] == "capacity");
  CHECK(!rep["cohomology"].contains("skipped"));  // dim 18 fits the dense cap
  CHECK(build_report("witt_2_3", w23, 1).dump() == rep.dump());
}
