#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vk/complex.hpp"

namespace vk {

/// Bistellar move of type (p, q): the star σ ∗ ∂τ is replaced by ∂σ ∗ τ.
/// For p = D the "missing simplex" τ is a single fresh vertex.
struct MoveDescriptor {
  Simplex sigma;
  Simplex tau;
  int p() const noexcept { return sigma.dim(); }
  int q() const noexcept { return tau.dim(); }
  MoveDescriptor inverse() const { return {tau, sigma}; }
  std::string str() const;
  friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
  friend auto operator<=>(const MoveDescriptor&, const MoveDescriptor&) = default;
};

/// Why a move does not apply, or empty if it does.
std::string move_obstacle(const Complex& c, const MoveDescriptor& m);

/// All applicable moves of a pure complex: σ runs over faces by decreasing
/// dimension, lexicographically within a dimension. (D,0) moves use the fresh
/// label max + 1.
std::vector<MoveDescriptor> applicable_moves(const Complex& c);

/// Applies `m`; throws with a diagnostic if it is not applicable.
Complex apply_move(const Complex& c, const MoveDescriptor& m);

struct Walk {
  Complex result;
  std::vector<MoveDescriptor> trace;
};

/// `steps` moves chosen uniformly among applicable_moves with a seeded
/// generator (see kRngAlgorithm).
Walk random_walk(const Complex& c, int steps, std::uint64_t seed);

/// Replays a trace from `start`.
Complex replay(const Complex& start, const std::vector<MoveDescriptor>& trace);

/// Replaces st(σ) by v ∗ ∂σ ∗ lk(σ) with v = max label + 1. Subdividing a
/// vertex returns c unchanged.
Complex stellar_subdivide(const Complex& c, const Simplex& sigma);

/// Bistellar moves whose composite is stellar_subdivide(c, σ), available when
/// lk(σ, c) is the boundary of a simplex G = {g_1 < ... < g_m}. Move j
/// (1-based) has σ_j = σ ∪ {g_1..g_{m-j}} and τ_j = {v} ∪ {g_{m-j+2}..g_m},
/// where v is the fresh vertex. Throws if the link has another shape.
std::vector<MoveDescriptor> stellar_as_moves(const Complex& c, const Simplex& sigma);

/// Boundary complex of the cyclic (D+1)-polytope with n vertices labelled
/// 0..n-1, via Gale's evenness condition.
Complex cyclic_sphere(int n, int D);

/// ∂Δ^{D+1} on vertices 0..D+1.
Complex boundary_simplex(int D);

/// Vertex set {0, 1, ..., n-1}.
Simplex first_vertices(int n);

}  // namespace vk
