#pragma once

#include <string>

#include <json.hpp>

#include "prank/algebra.hpp"

namespace prank {

using ordered_json = nlohmann::ordered_json;

/// On-disk algebra description:
///   { "name": str, "p": int, "dim": int, "basis": [str],
///     "bracket": [ {"left": i, "right": j, "value": [int; dim]} ],  // i < j, omitted pairs zero
///     "pmap": [[int; dim]; dim],
///     "ext_degree": int?, "modulus": [int]? }                        // enumeration defaults
struct AlgebraSpec {
  std::string name;
  Algebra alg;
  uint32_t default_ext = 1;
  std::vector<uint32_t> modulus;  // little-endian monic, empty = default
};

AlgebraSpec parse_algebra_spec(const ordered_json& doc);
AlgebraSpec load_algebra_spec(const std::string& path);
ordered_json serialize_algebra_spec(const std::string& name, const Algebra& alg);

/// FNV-1a 64-bit over the canonical serialization; stable input identifier
/// for reports.
std::string canonical_hash(const std::string& name, const Algebra& alg);

}  // namespace prank
