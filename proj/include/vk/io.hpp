#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "vk/complex.hpp"
#include "vk/deleted_product.hpp"
#include "vk/obstruction.hpp"
#include "vk/pachner.hpp"

namespace vk::io {

using Json = nlohmann::ordered_json;

struct NamedComplex {
  std::string name;
  Complex complex;
};

Json to_json(const Simplex& s);
Simplex simplex_from_json(const Json& j);

/// {"name":...,"facets":[[...],...]}, facets sorted lexicographically.
Json complex_to_json(const Complex& c, const std::string& name);
NamedComplex complex_from_json(const Json& j);

/// One facet per line, space-separated; lines starting with '#' are comments.
std::string complex_to_text(const Complex& c, const std::string& name);
NamedComplex complex_from_text(const std::string& text);

/// Accepts either format; JSON is recognised by a leading '{' or '['.
NamedComplex parse_complex(const std::string& text);

Json trace_to_json(const std::vector<MoveDescriptor>& trace);
/// Also accepts an object with a "trace" field (the output of a walk).
std::vector<MoveDescriptor> trace_from_json(const Json& j);

/// [[[σ...],[τ...]], ...] in canonical cell order.
Json pair_chain_to_json(const PairChain& w);
PairChain pair_chain_from_json(const Json& j, int dim);

Json report_to_json(const ObstructionReport& r);
/// [{"pair":[[...],[...]],"value":0|1}, ...] sorted by cell.
Json cochain_to_json(const IntersectionCochain& phi);

std::string read_file(const std::string& path);
/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace vk::io
