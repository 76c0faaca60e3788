#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vk/complex.hpp"

namespace vk {

using Rational = boost::multiprecision::mpq_rational;
using Point = std::vector<Rational>;

/// Exact linear map of a complex into Q^r, given by vertex positions.
struct GeomMap {
  int r = 0;
  std::map<Vertex, Point> coords;

  const Point& at(Vertex v) const;
};

/// Raised when an intersection count is not transverse for the given map.
class DegeneratePosition : public Error {
 public:
  explicit DegeneratePosition(const std::string& what) : Error("degenerate position: " + what) {}
};

/// Places vertex i (in label order) at t ↦ (t, t², …, t^r) with t = params[i];
/// default params are 1, 2, …, n. Throws on duplicate or miscounted params.
GeomMap moment_map(const Complex& c, int r, const std::vector<long long>& params = {});

/// Deterministic family of moment maps. Schedule 0 is the default moment map;
/// schedule k > 0 assigns the curve positions to the vertices in a shuffled
/// order (mt19937_64 seeded with k) with parameters scaled by the k-th prime.
/// Positions on the moment curve only matter through their order, so distinct
/// shuffles give genuinely different intersection cochains.
GeomMap moment_schedule(const Complex& c, int r, int schedule);

/// Mod-2 intersection number of the images of disjoint simplices with
/// dim σ + dim τ = r. Returns 0 when the affine hulls do not meet; throws
/// DegeneratePosition when they meet non-transversally or on a boundary.
int intersection_number(const GeomMap& g, const Simplex& sigma, const Simplex& tau);

/// True when the images of σ ∪ τ are affinely independent, which separates
/// the images of disjoint σ, τ.
bool affinely_independent(const GeomMap& g, const Simplex& vertices);

/// Checks that disjoint faces with dim σ + dim τ < r have affinely
/// independent images (sufficient for disjoint images).
bool general_position(const GeomMap& g, const Complex& c);

/// First disjoint pair (scan order: σ by dimension then lexicographic, then τ)
/// with dim σ + dim τ = g.r and odd intersection number. Throws
/// "sphere hypothesis violated" if none exists.
std::pair<Simplex, Simplex> find_odd_pair(const Complex& c, const GeomMap& g);

/// Schlegel-style map of ∂Δ^{d+1} into Q^d: the vertices of `facet` go to a
/// large simplex, the remaining vertex to its barycenter region.
GeomMap schlegel_map(const Simplex& full, const Simplex& facet);

}  // namespace vk
