#include "vk/dancis.hpp"

#include <set>

#include "vk/homology.hpp"

namespace vk {

namespace {

/// (k+1)-sets whose facets all lie in c, by extending (k-1)-faces.
std::vector<Simplex> candidates(const Complex& c, int k) {
  std::set<Simplex> out;
  for (const auto& f : c.faces(k - 1))
    for (Vertex v : c.vertices()) {
      if (!f.empty() && v <= f.vertices().back()) continue;
      const Simplex s = f.with(v);
      if (c.contains(s)) continue;
      bool ok = true;
      for (const auto& g : s.facets()) ok = ok && c.contains(g);
      if (ok) out.insert(s);
    }
  return {out.begin(), out.end()};
}

}  // namespace

Reconstruction reconstruct(const Complex& skel, int d) {
  if (d < 1) throw Error("reconstruction needs d ≥ 1");
  Reconstruction r;
  Complex current = skeleton(skel, d);
  const Simplex all(current.vertices());
  for (int k = d + 1; k <= 2 * d; ++k) {
    const auto cands = candidates(current, k);
    std::vector<Simplex> accept;
    for (const auto& s : cands) {
      const auto h = betti_int(induced(current, all.minus(s)));
      const bool ok = k == d + 1 ? h.vanishes(d - 1)
                                 : h.vanishes(2 * d - k + 1) && h.vanishes(2 * d - k);
      if (ok) accept.push_back(s);
    }
    r.candidates.push_back(cands.size());
    r.accepted.push_back(accept.size());
    if (!accept.empty()) {
      accept.insert(accept.end(), current.facets().begin(), current.facets().end());
      current = Complex(std::move(accept));
    }
  }
  r.pure = current.is_pure() && current.dim() == 2 * d;
  r.complex = std::move(current);
  return r;
}

Complex boundary_complex(const Complex& c) {
  std::map<Simplex, int> count;
  for (const auto& f : c.facets())
    for (const auto& g : f.facets()) ++count[g];
  std::vector<Simplex> out;
  for (const auto& [g, n] : count)
    if (n == 1) out.push_back(g);
  return out.empty() ? Complex() : Complex(std::move(out));
}

NonSkeletonReport non_skeleton_check(const Complex& S, int d, const Simplex& L_vertices,
                                     const Complex& B, const std::map<Vertex, Vertex>& g) {
  if (!B.is_pure() || B.dim() != d) throw Error("B must be a pure " + std::to_string(d) + "-ball");
  const Complex dB = boundary_complex(B);
  std::set<Vertex> image;
  for (Vertex v : dB.vertices()) {
    auto it = g.find(v);
    if (it == g.end()) throw Error("gluing map undefined on boundary vertex " + std::to_string(v));
    if (!image.insert(it->second).second) throw Error("gluing map is not injective");
  }
  auto map_simplex = [&](const Simplex& s, Vertex& fresh, std::map<Vertex, Vertex>& interior) {
    std::vector<Vertex> vs;
    for (Vertex v : s) {
      if (auto it = g.find(v); it != g.end() && dB.has_vertex(v)) {
        vs.push_back(it->second);
      } else {
        auto [jt, inserted] = interior.try_emplace(v, fresh);
        if (inserted) ++fresh;
        vs.push_back(jt->second);
      }
    }
    return Simplex(vs);
  };
  Vertex fresh = S.max_label() + 1;
  std::map<Vertex, Vertex> interior;
  std::vector<Simplex> bd_image;
  for (const auto& f : dB.facets()) {
    Simplex s = map_simplex(f, fresh, interior);
    if (!S.contains(s)) throw Error("g(" + f.str() + ") = " + s.str() + " is not a face of S");
    bd_image.push_back(s);
  }

  NonSkeletonReport rep;
  const Complex L = induced(S, L_vertices);
  const Complex gL = bd_image.empty() ? Complex() : Complex(bd_image);
  rep.admissible = Simplex(std::vector<Vertex>(image.begin(), image.end())) == L_vertices &&
                   L == gL;

  std::vector<Simplex> gens = skeleton(S, d).facets();
  for (const auto& f : B.facets()) {
    Simplex s = map_simplex(f, fresh, interior);
    if (!S.contains(s)) rep.new_faces.push_back(s);
    gens.push_back(std::move(s));
  }
  rep.glued = Complex(std::move(gens));
  rep.rebuilt = reconstruct(rep.glued, d);
  rep.reproduces_input = rep.rebuilt.complex == S;
  if (d == 1) {
    const auto n = static_cast<long long>(rep.glued.vertices().size());
    rep.euler_bound_violated = static_cast<long long>(rep.glued.num_faces(1)) > 3 * n - 6;
  }
  if (rep.new_faces.empty())
    rep.verdict = "nothing new glued";
  else if (!rep.admissible)
    rep.verdict = "no admissible instance";
  else if (rep.euler_bound_violated || !rep.rebuilt.pure)
    rep.verdict = "glued complex is not the skeleton of a 2d-sphere";
  else
    rep.verdict = "reconstruction produced a pure 2d-complex";
  return rep;
}

}  // namespace vk
