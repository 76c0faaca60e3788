#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vk/complex.hpp"
#include "vk/pachner.hpp"

namespace vk {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  /// Criteria to run (1..12); empty means all.
  std::vector<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// A move sequence from a starting sphere, as used by the corpora.
struct NamedTrace {
  std::string name;
  Complex start;
  std::vector<MoveDescriptor> trace;
};

/// Seeded corpora shared by the suites and the unit tests.
namespace corpus {

/// 20 walks of 1..10 moves from ∂Δ^3 (seeds 1..20).
std::vector<NamedTrace> d1_walks();
/// ∂Δ^5; the stellar subdivision at [0,1,2] written as three moves; five
/// traces of 1..3 further random moves; three traces biased to p ≤ 2. Then
/// twelve longer "d2-long-*" traces (two random moves, then four
/// preserving_walk moves) that carry witnesses through non-trivial transports.
std::vector<NamedTrace> d2_traces();
/// Like random_walk, but picks among moves with p ≤ bias whenever any exists.
std::vector<MoveDescriptor> biased_walk(const Complex& start, int steps, std::uint64_t seed,
                                        int bias);
/// Random walk restricted to moves with 1 ≤ p ≤ d that keep at least one
/// current missing d-face missing; falls back to any move.
std::vector<MoveDescriptor> preserving_walk(const Complex& start, int steps, std::uint64_t seed,
                                            int d);
/// Graph number `seed` of the planarity corpus: a random subgraph of a walked
/// 2-sphere's graph on at most 10 vertices, plus a few random edges.
Complex planarity_graph(std::uint64_t seed);
/// Minimal 6-vertex triangulation of the real projective plane.
Complex rp2();
/// The octahedron with antipodal pairs {0,1}, {2,3}, {4,5}.
Complex octahedron();

}  // namespace corpus

}  // namespace vk
