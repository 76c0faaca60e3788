#pragma once

#include <optional>
#include <set>
#include <vector>

#include "vk/deleted_product.hpp"
#include "vk/geometry.hpp"

namespace vk {

/// Values of φ_f on the r-cells of a deleted product, aligned with
/// DeletedProduct::cells(r).
struct IntersectionCochain {
  int r = 0;
  std::vector<PairCell> cells;
  BitVector values;

  int value(const PairCell& c) const;
  std::set<PairCell> support() const;
  /// ⟨φ, w⟩ over GF(2); cells of w outside the cochain's domain throw.
  int pair(const PairChain& w) const;
};

/// φ_g({σ,τ}) = |g(σ) ∩ g(τ)| mod 2 on every r-cell (r = g.r).
IntersectionCochain intersection_cochain(const GeomMap& g, const DeletedProduct& dp);

/// Intersection cochain for moment schedule `schedule`, retrying the next
/// schedules (at most 5 retries) if a degenerate position is hit. `used`
/// receives the schedule that succeeded.
IntersectionCochain moment_cochain(const DeletedProduct& dp, int r, int schedule = 0,
                                   int* used = nullptr);

struct ObstructionReport {
  int r = 0;
  bool vanishes = true;
  std::optional<PairChain> witness;
  int pairing = 0;
  std::set<PairCell> cochain_support;
  std::size_t kernel_dim = 0;
  int schedule = 0;
};

/// Decides whether the Z2 van Kampen obstruction in degree r vanishes, by
/// pairing the moment-curve intersection cochain with a kernel basis of the
/// degree-r boundary matrix of the quotient deleted product.
ObstructionReport obstruction(const Complex& c, int r, int schedule = 0);
ObstructionReport obstruction(const DeletedProduct& dp, int r, int schedule = 0);

/// ⟨φ, w⟩ for a moment-curve map; throws "not a cycle" unless w is an
/// r-cycle of the quotient deleted product of c.
int evaluate(const Complex& c, int r, const PairChain& w, int schedule = 0);
int evaluate(const DeletedProduct& dp, int r, const PairChain& w, int schedule = 0);

/// All unordered pairs of disjoint (d+1)-subsets of V, |V| = 2d+3.
PairChain vk_witness(const Simplex& vertex_set, int d);

}  // namespace vk
