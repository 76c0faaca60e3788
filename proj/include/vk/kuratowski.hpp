#pragma once

#include <string>

#include "vk/complex.hpp"

namespace vk {

/// Exhaustive search for a subdivided K5 or K3,3 in the 1-skeleton of `graph`.
/// Returns "K5", "K33" or "" (planar). Meant for graphs on at most a dozen
/// vertices; it is an independent check on the obstruction, nothing more.
std::string kuratowski_subgraph(const Complex& graph);

inline bool is_planar(const Complex& graph) { return kuratowski_subgraph(graph).empty(); }

}  // namespace vk
