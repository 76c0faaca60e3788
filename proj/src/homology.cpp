#include "vk/homology.hpp"

#include <algorithm>

namespace vk {

namespace {

std::size_t index_of(const std::vector<Simplex>& cells, const Simplex& s) {
  auto it = std::lower_bound(cells.begin(), cells.end(), s);
  return static_cast<std::size_t>(it - cells.begin());
}

}  // namespace

BoundaryMatrix boundary_matrix_gf2(const Complex& c, int dim) {
  BoundaryMatrix b;
  b.dim = dim;
  b.domain_cells = c.faces(dim);
  b.codomain_cells = c.faces(dim - 1);
  b.matrix = Gf2Matrix(b.codomain_cells.size(), b.domain_cells.size());
  for (std::size_t j = 0; j < b.domain_cells.size(); ++j)
    for (const auto& f : b.domain_cells[j].facets())
      b.matrix.set(index_of(b.codomain_cells, f), j);
  return b;
}

IntBoundaryMatrix boundary_matrix_int(const Complex& c, int dim) {
  IntBoundaryMatrix b;
  b.dim = dim;
  b.domain_cells = c.faces(dim);
  b.codomain_cells = c.faces(dim - 1);
  b.matrix = IntMatrix(b.codomain_cells.size(), b.domain_cells.size());
  for (std::size_t j = 0; j < b.domain_cells.size(); ++j) {
    const Simplex& s = b.domain_cells[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto r = index_of(b.codomain_cells, s.without(s[i]));
      b.matrix(r, j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return b;
}

BettiNumbers betti_gf2(const Complex& c, bool reduced) {
  BettiNumbers out;
  if (c.empty()) return out;
  const int top = c.dim();
  // ranks[k + 1] = rank of ∂_k : C_k -> C_{k-1}; ∂_{-1} = 0.
  std::vector<long long> ranks(static_cast<std::size_t>(top + 3), 0);
  for (int k = reduced ? 0 : 1; k <= top; ++k)
    ranks[static_cast<std::size_t>(k + 1)] =
        static_cast<long long>(rank(boundary_matrix_gf2(c, k).matrix));
  for (int i = -1; i <= top; ++i) {
    long long n = static_cast<long long>(c.num_faces(i));
    if (i == -1 && !reduced) n = 0;
    out.values.push_back(n - ranks[static_cast<std::size_t>(i + 1)] -
                         ranks[static_cast<std::size_t>(i + 2)]);
  }
  return out;
}

long long IntegralHomology::free_rank(int degree) const {
  const auto k = static_cast<std::size_t>(degree + 1);
  return (degree < -1 || k >= free_ranks.size()) ? 0 : free_ranks[k];
}

const std::vector<BigInt>& IntegralHomology::torsion_at(int degree) const {
  static const std::vector<BigInt> none;
  const auto k = static_cast<std::size_t>(degree + 1);
  return (degree < -1 || k >= torsion.size()) ? none : torsion[k];
}

bool IntegralHomology::vanishes(int degree) const {
  return free_rank(degree) == 0 && torsion_at(degree).empty();
}

IntegralHomology betti_int(const Complex& c) {
  IntegralHomology out;
  if (c.empty()) return out;
  const int top = c.dim();
  std::vector<long long> ranks(static_cast<std::size_t>(top + 3), 0);
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(top + 3));
  for (int k = 0; k <= top; ++k) {
    auto f = smith_normal_form(boundary_matrix_int(c, k).matrix);
    ranks[static_cast<std::size_t>(k + 1)] = static_cast<long long>(f.size());
    factors[static_cast<std::size_t>(k + 1)] = std::move(f);
  }
  for (int i = -1; i <= top; ++i) {
    const long long n = static_cast<long long>(c.num_faces(i));
    out.free_ranks.push_back(n - ranks[static_cast<std::size_t>(i + 1)] -
                             ranks[static_cast<std::size_t>(i + 2)]);
    std::vector<BigInt> tors;
    for (const auto& d : factors[static_cast<std::size_t>(i + 2)])
      if (d > 1) tors.push_back(d);
    out.torsion.push_back(std::move(tors));
  }
  return out;
}

Chain2 boundary(const Chain2& z) {
  Chain2 out(z.dim() - 1);
  if (z.dim() < 0) return out;
  for (const auto& s : z)
    for (const auto& f : s.facets()) out.toggle(f);
  return out;
}

std::optional<Chain2> solve_boundary(const Complex& c, const Chain2& z) {
  auto bm = boundary_matrix_gf2(c, z.dim() + 1);
  BitVector rhs(bm.codomain_cells.size());
  for (const auto& s : z) {
    auto i = index_of(bm.codomain_cells, s);
    if (i == bm.codomain_cells.size() || !(bm.codomain_cells[i] == s)) return std::nullopt;
    rhs.set(i);
  }
  auto x = solve(bm.matrix, rhs);
  if (!x) return std::nullopt;
  Chain2 b(z.dim() + 1);
  for (auto j : x->ones()) b.toggle(bm.domain_cells[j]);
  return b;
}

bool is_cycle(const Chain2& z, const Complex& c) {
  for (const auto& s : z)
    if (!c.contains(s)) throw Error("chain not supported: " + s.str() + " is not a face");
  return boundary(z).empty();
}

}  // namespace vk
