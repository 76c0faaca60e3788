#pragma once

#include <map>
#include <string>
#include <vector>

#include "vk/complex.hpp"

namespace vk {

struct Reconstruction {
  Complex complex;
  /// accepted[k - d - 1] = number of k-faces added at level k.
  std::vector<std::size_t> accepted;
  std::vector<std::size_t> candidates;
  /// False when the result is not a pure 2d-complex.
  bool pure = false;
};

/// Rebuilds the (d+1)..2d faces of a 2d-sphere from its d-skeleton. At level k
/// a (k+1)-set σ whose facets are all present is accepted iff
///   k = d+1: H̃_{d-1}(skel[V∖σ]; Z) = 0,
///   k > d+1: H̃_i(current[V∖σ]; Z) = 0 for i = 2d-k+1 and 2d-k.
/// All candidates of a level are decided against the same (k-1)-skeleton.
Reconstruction reconstruct(const Complex& skel, int d);

struct NonSkeletonReport {
  /// L = S[L_vertices] is induced and g is an isomorphism ∂B -> L.
  bool admissible = false;
  Complex glued;
  /// d-faces of the glued complex that are not in S.
  std::vector<Simplex> new_faces;
  Reconstruction rebuilt;
  bool reproduces_input = false;
  /// d = 1 only: more than 3n - 6 edges, so no 2-sphere has this graph.
  bool euler_bound_violated = false;
  std::string verdict;
};

/// Glues the ball B onto S_{≤d} along g : ∂B -> S (interior vertices of B get
/// fresh labels) and runs reconstruct on the result. Throws if g is not a
/// simplicial isomorphism of ∂B onto a subcomplex of S.
NonSkeletonReport non_skeleton_check(const Complex& S, int d, const Simplex& L_vertices,
                                     const Complex& B, const std::map<Vertex, Vertex>& g);

/// Codimension-one faces of a pure complex lying in exactly one facet.
Complex boundary_complex(const Complex& c);

}  // namespace vk
