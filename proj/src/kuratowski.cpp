#include "vk/kuratowski.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "vk/combinatorics.hpp"

namespace vk {

namespace {

struct Search {
  std::vector<std::vector<int>> adj;
  std::vector<char> used;  // branch vertices and path interiors
  std::vector<std::pair<int, int>> pairs;

  bool extend(int cur, int target, std::size_t k) {
    for (int w : adj[static_cast<std::size_t>(cur)]) {
      if (w == target) {
        if (route(k + 1)) return true;
        continue;
      }
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      if (extend(w, target, k)) return true;
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }

  /// Internally disjoint paths for pairs[k..].
  bool route(std::size_t k) {
    if (k == pairs.size()) return true;
    return extend(pairs[k].first, pairs[k].second, k);
  }

  bool embed(const std::vector<int>& branch, std::vector<std::pair<int, int>> ps) {
    std::fill(used.begin(), used.end(), 0);
    for (int b : branch) used[static_cast<std::size_t>(b)] = 1;
    pairs = std::move(ps);
    return route(0);
  }
};

}  // namespace

std::string kuratowski_subgraph(const Complex& graph) {
  const auto& vs = graph.vertices();
  const int n = static_cast<int>(vs.size());
  Search s;
  s.adj.resize(static_cast<std::size_t>(n));
  s.used.resize(static_cast<std::size_t>(n));
  auto idx = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const auto& e : graph.faces(1)) {
    const int a = idx(e[0]), b = idx(e[1]);
    s.adj[static_cast<std::size_t>(a)].push_back(b);
    s.adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> deg4, deg3;
  for (int i = 0; i < n; ++i) {
    const auto deg = s.adj[static_cast<std::size_t>(i)].size();
    if (deg >= 4) deg4.push_back(i);
    if (deg >= 3) deg3.push_back(i);
  }

  bool found = false;
  for_each_subset(deg4, 5, [&](const std::vector<int>& b) {
    if (found) return;
    std::vector<std::pair<int, int>> ps;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) ps.emplace_back(b[i], b[j]);
    found = s.embed(b, ps);
  });
  if (found) return "K5";

  for_each_subset(deg3, 6, [&](const std::vector<int>& b) {
    if (found) return;
    // Side A always holds b[0]; choose its two partners.
    for (std::size_t x = 1; x < 6 && !found; ++x)
      for (std::size_t y = x + 1; y < 6 && !found; ++y) {
        std::vector<int> A{b[0], b[x], b[y]}, B;
        for (std::size_t z = 1; z < 6; ++z)
          if (z != x && z != y) B.push_back(b[z]);
        std::vector<std::pair<int, int>> ps;
        for (int a : A)
          for (int c : B) ps.emplace_back(a, c);
        found = s.embed(b, ps);
      }
  });
  return found ? "K33" : "";
}

}  // namespace vk
