#pragma once

#include <optional>
#include <vector>

#include "vk/complex.hpp"
#include "vk/gf2.hpp"

namespace vk {

/// Boundary map C_dim -> C_{dim-1} in the canonical (lexicographic) cell order.
/// For dim = 0 the codomain is the augmentation {∅}.
struct BoundaryMatrix {
  int dim = 0;
  std::vector<Simplex> domain_cells;
  std::vector<Simplex> codomain_cells;
  Gf2Matrix matrix;
};

struct IntBoundaryMatrix {
  int dim = 0;
  std::vector<Simplex> domain_cells;
  std::vector<Simplex> codomain_cells;
  IntMatrix matrix;
};

BoundaryMatrix boundary_matrix_gf2(const Complex& c, int dim);
/// Oriented boundary: ∂[v0..vk] = Σ (-1)^i [v0..v̂i..vk].
IntBoundaryMatrix boundary_matrix_int(const Complex& c, int dim);

/// Betti numbers indexed from dimension -1: value(i) is the rank in degree i.
struct BettiNumbers {
  std::vector<long long> values;  // values[i + 1] is degree i
  long long at(int degree) const {
    const auto k = static_cast<std::size_t>(degree + 1);
    return (degree < -1 || k >= values.size()) ? 0 : values[k];
  }
};

/// Reduced GF(2) Betti numbers in degrees -1..dim c (unreduced with
/// `reduced = false`, in which case degree -1 is always 0).
BettiNumbers betti_gf2(const Complex& c, bool reduced = true);

struct IntegralHomology {
  std::vector<long long> free_ranks;           // index degree + 1
  std::vector<std::vector<BigInt>> torsion;    // index degree + 1, factors > 1
  long long free_rank(int degree) const;
  const std::vector<BigInt>& torsion_at(int degree) const;
  /// True when the reduced group in `degree` is trivial.
  bool vanishes(int degree) const;
};

/// Reduced integral homology via Smith normal form.
IntegralHomology betti_int(const Complex& c);

/// GF(2) boundary of a chain; the boundary of a vertex is {∅}.
Chain2 boundary(const Chain2& z);
/// Some b in C_{k+1}(c) with ∂b = z (free variables zero), or nullopt if z
/// is not a boundary in c.
std::optional<Chain2> solve_boundary(const Complex& c, const Chain2& z);

/// Throws "chain not supported" if some cell of z is not in c.
bool is_cycle(const Chain2& z, const Complex& c);

}  // namespace vk
