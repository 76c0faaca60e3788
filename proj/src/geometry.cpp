#include "vk/geometry.hpp"

#include <algorithm>
#include <set>

#include "vk/rng.hpp"

namespace vk {

const Point& GeomMap::at(Vertex v) const {
  auto it = coords.find(v);
  if (it == coords.end()) throw Error("map has no position for vertex " + std::to_string(v));
  return it->second;
}

GeomMap moment_map(const Complex& c, int r, const std::vector<long long>& params) {
  if (r < 1) throw Error("target dimension must be at least 1");
  const auto& vs = c.vertices();
  std::vector<long long> ts = params;
  if (ts.empty()) {
    for (std::size_t i = 0; i < vs.size(); ++i) ts.push_back(static_cast<long long>(i) + 1);
  }
  if (ts.size() != vs.size())
    throw Error("moment map needs one parameter per vertex (" + std::to_string(vs.size()) + ")");
  if (std::set<long long>(ts.begin(), ts.end()).size() != ts.size())
    throw Error("moment map parameters must be distinct");
  GeomMap g;
  g.r = r;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Point p;
    Rational t = ts[i], pw = 1;
    for (int k = 0; k < r; ++k) {
      pw *= t;
      p.push_back(pw);
    }
    g.coords.emplace(vs[i], std::move(p));
  }
  return g;
}

GeomMap moment_schedule(const Complex& c, int r, int schedule) {
  static constexpr long long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  if (schedule <= 0) return moment_map(c, r);
  const std::size_t n = c.vertices().size();
  std::vector<long long> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<long long>(i) + 1;
  Rng rng(static_cast<std::uint64_t>(schedule));
  shuffle(order, rng);
  const long long scale = kPrimes[static_cast<std::size_t>(schedule - 1) % std::size(kPrimes)];
  for (auto& t : order) t *= scale;
  return moment_map(c, r, order);
}

namespace {

enum class SolveStatus { unique, none, infinite };

/// Gaussian elimination on the square system a·x = b over Q.
SolveStatus solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                        std::vector<Rational>& x) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[row][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (b[i] != 0) return SolveStatus::none;
  if (row < n) return SolveStatus::infinite;
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return SolveStatus::unique;
}

}  // namespace

int intersection_number(const GeomMap& g, const Simplex& sigma, const Simplex& tau) {
  if (!sigma.disjoint(tau)) throw Error("intersection number needs disjoint simplices");
  if (sigma.empty() || tau.empty()) throw Error("intersection number needs nonempty simplices");
  if (sigma.dim() + tau.dim() != g.r)
    throw Error("intersection number needs dim σ + dim τ = " + std::to_string(g.r));
  const std::size_t n = sigma.size() + tau.size();  // = r + 2
  const auto r = static_cast<std::size_t>(g.r);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> b(n, Rational(0));
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const Point& p = g.at(sigma[i]);
    for (std::size_t k = 0; k < r; ++k) a[k][i] = p[k];
    a[r][i] = 1;
  }
  for (std::size_t j = 0; j < tau.size(); ++j) {
    const Point& p = g.at(tau[j]);
    const std::size_t col = sigma.size() + j;
    for (std::size_t k = 0; k < r; ++k) a[k][col] = -p[k];
    a[r + 1][col] = 1;
  }
  b[r] = 1;
  b[r + 1] = 1;
  std::vector<Rational> x;
  switch (solve_exact(std::move(a), std::move(b), x)) {
    case SolveStatus::none:
      return 0;  // affine hulls are parallel and disjoint
    case SolveStatus::infinite:
      throw DegeneratePosition("images of " + sigma.str() + " and " + tau.str() +
                               " meet in more than a point");
    case SolveStatus::unique:
      break;
  }
  bool all_positive = true;
  for (const auto& v : x) {
    if (v == 0)
      throw DegeneratePosition("images of " + sigma.str() + " and " + tau.str() +
                               " meet on a boundary");
    if (v < 0) all_positive = false;
  }
  return all_positive ? 1 : 0;
}

bool affinely_independent(const GeomMap& g, const Simplex& vertices) {
  // Rank of the homogenized points, by elimination over Q.
  std::vector<std::vector<Rational>> rows;
  for (Vertex v : vertices) {
    std::vector<Rational> row = g.at(v);
    row.push_back(1);
    rows.push_back(std::move(row));
  }
  const std::size_t m = rows.size(), n = static_cast<std::size_t>(g.r) + 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < n && rk < m; ++col) {
    std::size_t sel = rk;
    while (sel < m && rows[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(rows[sel], rows[rk]);
    for (std::size_t i = rk + 1; i < m; ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rk][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rk][j];
    }
    ++rk;
  }
  return rk == m;
}

bool general_position(const GeomMap& g, const Complex& c) {
  auto all = c.all_faces();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].empty()) continue;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[j].empty() || all[i].dim() + all[j].dim() >= g.r) continue;
      if (!all[i].disjoint(all[j])) continue;
      if (!affinely_independent(g, all[i].unite(all[j]))) return false;
    }
  }
  return true;
}

std::pair<Simplex, Simplex> find_odd_pair(const Complex& c, const GeomMap& g) {
  for (int p = 0; p <= g.r; ++p) {
    const int q = g.r - p;
    if (q < p) break;
    for (const auto& s : c.faces(p))
      for (const auto& t : c.faces(q)) {
        if (p == q && !(s < t)) continue;
        if (!s.disjoint(t)) continue;
        if (intersection_number(g, s, t) == 1) return {s, t};
      }
  }
  throw Error("sphere hypothesis violated: no disjoint pair with odd intersection",
              Error::Kind::property);
}

GeomMap schlegel_map(const Simplex& full, const Simplex& facet) {
  if (facet.size() + 1 != full.size() || !full.contains(facet))
    throw Error("Schlegel map needs a facet of the simplex");
  const int d = facet.dim();
  GeomMap g;
  g.r = d;
  for (std::size_t i = 0; i < facet.size(); ++i) {
    Point p(static_cast<std::size_t>(d), Rational(0));
    if (i > 0) p[i - 1] = d + 2;
    g.coords.emplace(facet[i], std::move(p));
  }
  Vertex apex = full.minus(facet)[0];
  g.coords.emplace(apex, Point(static_cast<std::size_t>(d), Rational(1)));
  return g;
}

}  // namespace vk
