#include "vk/pachner.hpp"

#include <algorithm>
#include <optional>

#include "vk/combinatorics.hpp"
#include "vk/rng.hpp"

namespace vk {

std::string MoveDescriptor::str() const {
  return "(" + std::to_string(p()) + "," + std::to_string(q()) + ") " + sigma.str() + " -> " +
         tau.str();
}

namespace {

/// Vertex set G when lk is the boundary of the simplex G (|G| ≥ 2).
std::optional<Simplex> simplex_boundary_vertices(const Complex& lk) {
  if (lk.empty() || lk.dim() < 0) return std::nullopt;
  Simplex g(lk.vertices());
  if (!lk.is_pure() || lk.facets().size() != g.size() ||
      static_cast<std::size_t>(lk.dim()) + 2 != g.size())
    return std::nullopt;
  return g;
}

}  // namespace

std::string move_obstacle(const Complex& c, const MoveDescriptor& m) {
  if (!c.is_pure()) return "complex is not pure";
  if (m.sigma.empty() || m.tau.empty()) return "σ and τ must be nonempty";
  if (m.p() + m.q() != c.dim())
    return "p + q = " + std::to_string(m.p() + m.q()) + " differs from dimension " +
           std::to_string(c.dim());
  if (!m.sigma.disjoint(m.tau)) return "σ and τ share vertices";
  if (!c.contains(m.sigma)) return "σ = " + m.sigma.str() + " is not a face";
  if (m.q() == 0) {
    if (c.has_vertex(m.tau[0])) return "fresh vertex " + m.tau.str() + " already in use";
  } else if (c.contains(m.tau)) {
    return "τ = " + m.tau.str() + " is present, not missing";
  }
  if (!(link(c, m.sigma) == Complex::boundary_of(m.tau)))
    return "link of σ is " + link(c, m.sigma).str() + ", not ∂" + m.tau.str();
  return {};
}

std::vector<MoveDescriptor> applicable_moves(const Complex& c) {
  std::vector<MoveDescriptor> out;
  if (c.empty() || !c.is_pure() || c.dim() < 0) return out;
  const int D = c.dim();
  const Simplex fresh{c.max_label() + 1};
  for (const auto& f : c.faces(D)) out.push_back({f, fresh});
  for (int p = D - 1; p >= 0; --p)
    for (const auto& s : c.faces(p)) {
      auto g = simplex_boundary_vertices(link(c, s));
      if (!g || g->dim() != D - p || c.contains(*g)) continue;
      out.push_back({s, *g});
    }
  return out;
}

Complex apply_move(const Complex& c, const MoveDescriptor& m) {
  if (auto why = move_obstacle(c, m); !why.empty())
    throw Error("move " + m.str() + " is not applicable: " + why);
  std::vector<Simplex> gens;
  for (const auto& f : c.facets())
    if (!f.contains(m.sigma)) gens.push_back(f);
  for (Vertex u : m.sigma) gens.push_back(m.sigma.without(u).unite(m.tau));
  return Complex(std::move(gens));
}

Walk random_walk(const Complex& c, int steps, std::uint64_t seed) {
  Walk w{c, {}};
  Rng rng(seed);
  for (int i = 0; i < steps; ++i) {
    auto moves = applicable_moves(w.result);
    if (moves.empty()) throw Error("no applicable move", Error::Kind::property);
    const auto& m = moves[uniform_index(rng, moves.size())];
    w.result = apply_move(w.result, m);
    w.trace.push_back(m);
  }
  return w;
}

Complex replay(const Complex& start, const std::vector<MoveDescriptor>& trace) {
  Complex cur = start;
  for (const auto& m : trace) cur = apply_move(cur, m);
  return cur;
}

Complex stellar_subdivide(const Complex& c, const Simplex& sigma) {
  if (!c.contains(sigma) || sigma.empty())
    throw Error("cannot subdivide " + sigma.str() + ": not a face");
  if (sigma.dim() == 0) return c;
  const Vertex v = c.max_label() + 1;
  std::vector<Simplex> gens;
  for (const auto& f : c.facets()) {
    if (!f.contains(sigma)) {
      gens.push_back(f);
      continue;
    }
    for (Vertex u : sigma) gens.push_back(f.without(u).with(v));
  }
  return Complex(std::move(gens));
}

std::vector<MoveDescriptor> stellar_as_moves(const Complex& c, const Simplex& sigma) {
  if (!c.contains(sigma) || sigma.empty())
    throw Error("cannot subdivide " + sigma.str() + ": not a face");
  if (sigma.dim() == 0) return {};
  const Simplex fresh{c.max_label() + 1};
  if (sigma.dim() == c.dim()) return {{sigma, fresh}};
  auto g = simplex_boundary_vertices(link(c, sigma));
  if (!g) throw Error("link of " + sigma.str() + " is not the boundary of a simplex");
  const auto& gv = g->vertices();
  const std::size_t m = gv.size();
  std::vector<MoveDescriptor> out;
  for (std::size_t j = 1; j <= m; ++j) {
    std::vector<Vertex> s(sigma.begin(), sigma.end());
    s.insert(s.end(), gv.begin(), gv.begin() + static_cast<std::ptrdiff_t>(m - j));
    std::vector<Vertex> t{fresh[0]};
    if (j >= 2) t.insert(t.end(), gv.begin() + static_cast<std::ptrdiff_t>(m - j + 1), gv.end());
    out.push_back({Simplex(s), Simplex(t)});
  }
  return out;
}

Complex cyclic_sphere(int n, int D) {
  if (D < 0 || n < D + 2) throw Error("cyclic sphere needs n ≥ D + 2");
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<Simplex> facets;
  for_each_subset(all, static_cast<std::size_t>(D + 1), [&](const std::vector<Vertex>& s) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (Vertex v : s) in[static_cast<std::size_t>(v)] = true;
    for (int i = 0; i < n; ++i) {
      if (in[static_cast<std::size_t>(i)]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (in[static_cast<std::size_t>(j)]) continue;
        int between = 0;
        for (int k = i + 1; k < j; ++k) between += in[static_cast<std::size_t>(k)] ? 1 : 0;
        if (between % 2 != 0) return;
      }
    }
    facets.emplace_back(s);
  });
  return Complex(std::move(facets));
}

Complex boundary_simplex(int D) { return Complex::boundary_of(first_vertices(D + 2)); }

Simplex first_vertices(int n) {
  std::vector<Vertex> vs(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
  return Simplex(vs);
}

}  // namespace vk
