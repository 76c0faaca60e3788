#include "vk/complex.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>

#include "vk/combinatorics.hpp"

namespace vk {

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::vector<Vertex> vs) : v_(std::move(vs)) {
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw Error("simplex has duplicate vertex labels");
  if (!v_.empty() && v_.front() < 0) throw Error("vertex labels must be non-negative");
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::contains(const Simplex& other) const noexcept {
  return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

bool Simplex::disjoint(const Simplex& other) const noexcept {
  auto a = v_.begin(), b = other.v_.begin();
  while (a != v_.end() && b != other.v_.end()) {
    if (*a == *b) return false;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return true;
}

Simplex Simplex::without(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(v_.size());
  for (Vertex u : v_)
    if (u != v) out.push_back(u);
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::with(Vertex v) const {
  if (contains(v)) return *this;
  std::vector<Vertex> out(v_);
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::unite(const Simplex& other) const {
  std::vector<Vertex> out;
  out.reserve(v_.size() + other.v_.size());
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const {
  std::vector<Vertex> out;
  std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                      std::back_inserter(out));
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::intersect(const Simplex& other) const {
  std::vector<Vertex> out;
  std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(out));
  return Simplex(Sorted{}, std::move(out));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  out.reserve(v_.size());
  // Dropping the last vertex first yields lexicographic order.
  for (std::size_t i = v_.size(); i-- > 0;) {
    std::vector<Vertex> f;
    f.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j)
      if (j != i) f.push_back(v_[j]);
    out.push_back(Simplex(Sorted{}, std::move(f)));
  }
  return out;
}

std::vector<Simplex> Simplex::faces_of_dim(int k) const {
  std::vector<Simplex> out;
  if (k < -1 || k + 1 > static_cast<int>(v_.size())) return out;
  for_each_subset(v_, static_cast<std::size_t>(k + 1),
                  [&](const std::vector<Vertex>& s) { out.push_back(Simplex(Sorted{}, s)); });
  return out;
}

std::string Simplex::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Complex

struct Complex::FaceCache {
  std::mutex mutex;
  std::vector<std::optional<std::vector<Simplex>>> by_dim;
};

Complex::Complex(std::vector<Simplex> generators) {
  std::sort(generators.begin(), generators.end(),
            [](const Simplex& a, const Simplex& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    bool covered = std::any_of(facets_.begin(), facets_.end(),
                               [&](const Simplex& f) { return f.contains(g); });
    if (!covered) facets_.push_back(g);
  }
  std::sort(facets_.begin(), facets_.end());
  std::set<Vertex> vs;
  for (const auto& f : facets_) {
    vs.insert(f.begin(), f.end());
    dim_ = std::max(dim_, f.dim());
  }
  vertices_.assign(vs.begin(), vs.end());
  cache_ = std::make_shared<FaceCache>();
  cache_->by_dim.resize(static_cast<std::size_t>(dim_ + 2));
}

Complex Complex::full_simplex(const Simplex& s) { return Complex({s}); }

Complex Complex::boundary_of(const Simplex& s) {
  if (s.empty()) return Complex();
  return Complex(s.facets());
}

bool Complex::is_pure() const noexcept {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return f.dim() == dim_; });
}

Vertex Complex::max_label() const { return vertices_.empty() ? -1 : vertices_.back(); }

bool Complex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Complex::contains(const Simplex& s) const {
  if (empty() || s.dim() > dim_) return false;
  const auto& fs = faces(s.dim());
  return std::binary_search(fs.begin(), fs.end(), s);
}

const std::vector<Simplex>& Complex::faces(int i) const {
  static const std::vector<Simplex> none;
  if (empty() || i < -1 || i > dim_) return none;
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slot = cache_->by_dim[static_cast<std::size_t>(i + 1)];
  if (!slot) {
    std::set<Simplex> acc;
    for (const auto& f : facets_) {
      if (f.dim() < i) continue;
      for (auto& s : f.faces_of_dim(i)) acc.insert(std::move(s));
    }
    slot.emplace(acc.begin(), acc.end());
  }
  return *slot;
}

std::vector<Simplex> Complex::all_faces() const {
  std::vector<Simplex> out;
  for (int i = -1; i <= dim_; ++i) {
    const auto& fs = faces(i);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::string Complex::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < facets_.size(); ++i) os << (i ? " " : "") << facets_[i].str();
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Chain2

Chain2::Chain2(int dim, std::initializer_list<Simplex> cells) : dim_(dim) {
  for (const auto& s : cells) toggle(s);
}

Chain2::Chain2(int dim, const std::vector<Simplex>& cells) : dim_(dim) {
  for (const auto& s : cells) toggle(s);
}

void Chain2::toggle(const Simplex& s) {
  if (s.dim() != dim_)
    throw Error("chain of dimension " + std::to_string(dim_) + " cannot hold " + s.str());
  auto [it, inserted] = cells_.insert(s);
  if (!inserted) cells_.erase(it);
}

Chain2& Chain2::operator+=(const Chain2& other) {
  if (other.empty()) return *this;
  if (other.dim_ != dim_) throw Error("adding chains of different dimensions");
  for (const auto& s : other.cells_) toggle(s);
  return *this;
}

Simplex Chain2::support() const {
  Simplex acc;
  for (const auto& s : cells_) acc = acc.unite(s);
  return acc;
}

std::string Chain2::str() const {
  std::ostringstream os;
  os << "dim " << dim_ << ": ";
  bool first = true;
  for (const auto& s : cells_) {
    os << (first ? "" : " + ") << s.str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Simplex> faces(const Complex& c, int i) { return c.faces(i); }

Complex skeleton(const Complex& c, int d) {
  if (d >= c.dim()) return c;
  std::vector<Simplex> gens;
  for (const auto& f : c.facets()) {
    if (f.dim() <= d) {
      gens.push_back(f);
    } else {
      auto fs = f.faces_of_dim(d);
      gens.insert(gens.end(), fs.begin(), fs.end());
    }
  }
  return Complex(std::move(gens));
}

Complex star(const Complex& c, const Simplex& s) {
  std::vector<Simplex> gens;
  for (const auto& f : c.facets())
    if (f.contains(s)) gens.push_back(f);
  return Complex(std::move(gens));
}

Complex link(const Complex& c, const Simplex& s) {
  std::vector<Simplex> gens;
  for (const auto& f : c.facets())
    if (f.contains(s)) gens.push_back(f.minus(s));
  return Complex(std::move(gens));
}

Complex join(const Complex& a, const Complex& b) {
  for (Vertex v : a.vertices())
    if (b.has_vertex(v)) throw Error("non-disjoint join");
  if (a.empty() || b.empty()) return Complex();
  std::vector<Simplex> gens;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) gens.push_back(f.unite(g));
  return Complex(std::move(gens));
}

Complex induced(const Complex& c, const Simplex& vertex_set) {
  std::vector<Simplex> gens;
  for (const auto& f : c.facets()) gens.push_back(f.intersect(vertex_set));
  if (c.empty()) return Complex();
  return Complex(std::move(gens));
}

Complex delete_vertices(const Complex& c, const Simplex& w) {
  std::vector<Simplex> gens;
  for (const auto& f : c.facets()) gens.push_back(f.minus(w));
  if (c.empty()) return Complex();
  return Complex(std::move(gens));
}

Complex add_face(const Complex& c, const Simplex& s) {
  std::vector<Simplex> gens = c.facets();
  gens.push_back(s);
  return Complex(std::move(gens));
}

Complex union_of(const Complex& a, const Complex& b) {
  std::vector<Simplex> gens = a.facets();
  gens.insert(gens.end(), b.facets().begin(), b.facets().end());
  return Complex(std::move(gens));
}

Complex intersection_of(const Complex& a, const Complex& b) {
  std::vector<Simplex> gens;
  for (int i = -1; i <= std::min(a.dim(), b.dim()); ++i)
    for (const auto& s : a.faces(i))
      if (b.contains(s)) gens.push_back(s);
  if (gens.empty()) return Complex();
  return Complex(std::move(gens));
}

std::vector<Simplex> missing_faces(const Complex& c, int d) {
  std::vector<Simplex> out;
  if (d < 0 || c.empty()) return out;
  for_each_subset(c.vertices(), static_cast<std::size_t>(d + 1),
                  [&](const std::vector<Vertex>& vs) {
                    Simplex s(vs);
                    if (c.contains(s)) return;
                    for (const auto& f : s.facets())
                      if (!c.contains(f)) return;
                    out.push_back(std::move(s));
                  });
  return out;
}

std::vector<long long> f_vector(const Complex& c) {
  std::vector<long long> f;
  if (c.empty()) return f;
  for (int i = -1; i <= c.dim(); ++i) f.push_back(static_cast<long long>(c.num_faces(i)));
  return f;
}

std::vector<long long> h_vector(const Complex& c, int d) {
  if (!c.is_pure() || c.dim() != d - 1)
    throw Error("h-vector requires a pure " + std::to_string(d - 1) + "-dimensional complex");
  auto f = f_vector(c);  // f[j] = f_{j-1}
  std::vector<long long> h(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i <= d; ++i) {
    long long acc = 0;
    for (int j = 0; j <= i; ++j) {
      long long term = binomial(d - j, i - j) * f[static_cast<std::size_t>(j)];
      acc += ((i - j) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(i)] = acc;
  }
  return h;
}

long long euler_characteristic(const Complex& c) {
  long long chi = 0;
  for (int i = 0; i <= c.dim(); ++i) {
    long long n = static_cast<long long>(c.num_faces(i));
    chi += (i % 2 == 0) ? n : -n;
  }
  return chi;
}

bool has_full_skeleton(const Complex& c, const Simplex& vertex_set, int d) {
  for (int k = 0; k <= d; ++k)
    for (const auto& s : vertex_set.faces_of_dim(k))
      if (!c.contains(s)) return false;
  return true;
}

}  // namespace vk
