#include "prank/specfile.hpp"

#include <fstream>

namespace prank {

AlgebraSpec parse_algebra_spec(const ordered_json& doc) {
  std::string name = doc.at("name").get<std::string>();
  uint32_t p = doc.at("p").get<uint32_t>();
  size_t dim = doc.at("dim").get<size_t>();
  if (!is_prime(p) || p < 3) throw precondition_error("algebra spec: p must be a prime >= 3");
  const FieldCtx* F = FieldCtx::get(p, 1);

  std::vector<std::string> names = doc.at("basis").get<std::vector<std::string>>();
  if (names.size() != dim) throw shape_error("algebra spec: basis label count != dim");

  auto read_vec = [&](const ordered_json& arr) {
    std::vector<uint32_t> c = arr.get<std::vector<uint32_t>>();
    if (c.size() != dim) throw shape_error("algebra spec: coordinate vector length != dim");
    for (uint32_t v : c)
      if (v >= p) throw precondition_error("algebra spec: residue out of [0, p)");
    return Vec(F, c);
  };

  std::vector<std::array<size_t, 2>> pairs;
  std::vector<Vec> values;
  if (doc.contains("bracket")) {
    for (const auto& entry : doc.at("bracket")) {
      size_t left = entry.at("left").get<size_t>();
      size_t right = entry.at("right").get<size_t>();
      if (left >= right || right >= dim)
        throw precondition_error("algebra spec: bracket entry needs left < right < dim");
      pairs.push_back({left, right});
      values.push_back(read_vec(entry.at("value")));
    }
  }

  std::vector<Vec> pm;
  for (const auto& row : doc.at("pmap")) pm.push_back(read_vec(row));
  if (pm.size() != dim) throw shape_error("algebra spec: pmap row count != dim");

  AlgebraSpec spec{name,
                   Algebra(F, std::move(names), std::move(pairs), std::move(values), std::move(pm)),
                   1,
                   {}};
  if (doc.contains("ext_degree")) spec.default_ext = doc.at("ext_degree").get<uint32_t>();
  if (doc.contains("modulus")) spec.modulus = doc.at("modulus").get<std::vector<uint32_t>>();
  return spec;
}

AlgebraSpec load_algebra_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  ordered_json doc = ordered_json::parse(in);
  return parse_algebra_spec(doc);
}

ordered_json serialize_algebra_spec(const std::string& name, const Algebra& alg) {
  ordered_json doc;
  doc["name"] = name;
  doc["p"] = alg.p();
  doc["dim"] = alg.dim();
  doc["basis"] = alg.names();
  ordered_json brackets = ordered_json::array();
  for (size_t i = 0; i < alg.dim(); ++i)
    for (size_t j = i + 1; j < alg.dim(); ++j) {
      Vec v = alg.bracket_basis(i, j, alg.field());
      if (v.is_zero()) continue;
      ordered_json entry;
      entry["left"] = i;
      entry["right"] = j;
      std::vector<uint32_t> c(alg.dim());
      for (size_t t = 0; t < alg.dim(); ++t) c[t] = v[t];
      entry["value"] = c;
      brackets.push_back(entry);
    }
  doc["bracket"] = brackets;
  ordered_json pm = ordered_json::array();
  for (size_t i = 0; i < alg.dim(); ++i) {
    std::vector<uint32_t> c(alg.dim());
    for (size_t t = 0; t < alg.dim(); ++t) c[t] = alg.pmap_basis(i)[t];
    pm.push_back(c);
  }
  doc["pmap"] = pm;
  return doc;
}

std::string canonical_hash(const std::string& name, const Algebra& alg) {
  std::string s = serialize_algebra_spec(name, alg).dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace prank
