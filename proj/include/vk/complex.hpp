#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace vk {

using Vertex = int;

/// Error raised by any library operation whose preconditions fail.
/// `kind` lets the CLI map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind { input, property };
  explicit Error(const std::string& what, Kind kind = Kind::input)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A simplex as a strictly increasing tuple of vertex labels. The empty tuple
/// is the (-1)-simplex.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}
  /// Sorts the labels; throws on duplicates or negative labels.
  explicit Simplex(std::vector<Vertex> vs);

  int dim() const noexcept { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  const std::vector<Vertex>& vertices() const noexcept { return v_; }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  bool contains(Vertex v) const noexcept;
  /// Subset test.
  bool contains(const Simplex& other) const noexcept;
  bool disjoint(const Simplex& other) const noexcept;

  Simplex without(Vertex v) const;
  Simplex with(Vertex v) const;
  /// Vertex-set union (the join of two disjoint simplices).
  Simplex unite(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;

  /// Codimension-one faces in lexicographic order; a vertex has the single
  /// facet {} and {} has none.
  std::vector<Simplex> facets() const;
  /// All faces of dimension `k` (subsets of size k+1), lexicographic.
  std::vector<Simplex> faces_of_dim(int k) const;

  std::string str() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return a.v_ <=> b.v_;
  }

 private:
  struct Sorted {};
  Simplex(Sorted, std::vector<Vertex> vs) : v_(std::move(vs)) {}
  std::vector<Vertex> v_;
};

/// Finite abstract simplicial complex stored by its facets. Values are
/// immutable; per-dimension face lists are computed on first use and shared
/// between copies.
class Complex {
 public:
  /// The empty complex (no faces, not even the empty simplex).
  Complex() = default;
  /// Builds the downward closure of the given simplices; non-maximal inputs are
  /// dropped. Passing the single empty simplex yields the complex {∅}.
  explicit Complex(std::vector<Simplex> generators);

  static Complex full_simplex(const Simplex& s);
  static Complex boundary_of(const Simplex& s);

  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  /// True for the complex with no faces at all.
  bool empty() const noexcept { return facets_.empty(); }
  /// Largest facet dimension; -1 for both the empty complex and {∅}.
  int dim() const noexcept { return dim_; }
  bool is_pure() const noexcept;
  Vertex max_label() const;

  bool contains(const Simplex& s) const;
  bool has_vertex(Vertex v) const;
  /// Faces of dimension i in lexicographic order. i = -1 gives {∅} for a
  /// nonempty complex.
  const std::vector<Simplex>& faces(int i) const;
  std::vector<Simplex> all_faces() const;
  std::size_t num_faces(int i) const { return faces(i).size(); }

  std::string str() const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.facets_ == b.facets_; }

 private:
  struct FaceCache;
  std::vector<Simplex> facets_;
  std::vector<Vertex> vertices_;
  int dim_ = -1;
  std::shared_ptr<FaceCache> cache_;
};

/// GF(2) chain: a set of simplices of one dimension. Adding a simplex twice
/// cancels it.
class Chain2 {
 public:
  explicit Chain2(int dim = 0) : dim_(dim) {}
  Chain2(int dim, std::initializer_list<Simplex> cells);
  Chain2(int dim, const std::vector<Simplex>& cells);

  int dim() const noexcept { return dim_; }
  bool empty() const noexcept { return cells_.empty(); }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::set<Simplex>& cells() const noexcept { return cells_; }
  auto begin() const noexcept { return cells_.begin(); }
  auto end() const noexcept { return cells_.end(); }
  bool contains(const Simplex& s) const { return cells_.count(s) != 0; }

  /// Toggles `s`; throws if its dimension differs from the chain's.
  void toggle(const Simplex& s);
  Chain2& operator+=(const Chain2& other);
  friend Chain2 operator+(Chain2 a, const Chain2& b) { return a += b; }

  /// Union of the vertex sets of all cells.
  Simplex support() const;
  std::string str() const;

  friend bool operator==(const Chain2&, const Chain2&) = default;

 private:
  int dim_;
  std::set<Simplex> cells_;
};

// Combinatorial operations. All are pure functions of their arguments.

std::vector<Simplex> faces(const Complex& c, int i);
Complex skeleton(const Complex& c, int d);
/// Closed star: all faces of facets containing `s`.
Complex star(const Complex& c, const Simplex& s);
/// {τ : τ ∩ s = ∅, τ ∪ s ∈ c}; the empty complex if s ∉ c.
Complex link(const Complex& c, const Simplex& s);
/// Throws "non-disjoint join" when vertex sets overlap.
Complex join(const Complex& a, const Complex& b);
Complex induced(const Complex& c, const Simplex& vertex_set);
Complex delete_vertices(const Complex& c, const Simplex& w);
/// Complex with `s` (and its faces) added.
Complex add_face(const Complex& c, const Simplex& s);
Complex union_of(const Complex& a, const Complex& b);
Complex intersection_of(const Complex& a, const Complex& b);
/// d-subsets of the vertex set that are not faces but whose facets all are.
std::vector<Simplex> missing_faces(const Complex& c, int d);
/// (f_{-1}, f_0, ..., f_dim); empty for the empty complex.
std::vector<long long> f_vector(const Complex& c);
/// h_0..h_d of a pure (d-1)-dimensional complex. Throws on non-pure input.
std::vector<long long> h_vector(const Complex& c, int d);
/// Unreduced Euler characteristic Σ (-1)^i f_i, i ≥ 0.
long long euler_characteristic(const Complex& c);
/// True when every subset of `vertex_set` of size ≤ d+1 is a face.
bool has_full_skeleton(const Complex& c, const Simplex& vertex_set, int d);

}  // namespace vk
