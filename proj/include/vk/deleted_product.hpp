#pragma once

#include <map>
#include <set>
#include <vector>

#include "vk/complex.hpp"
#include "vk/gf2.hpp"

namespace vk {

/// Unordered pair {a, b} of vertex-disjoint nonempty simplices, stored with
/// the lexicographically smaller simplex first.
class PairCell {
 public:
  PairCell(Simplex a, Simplex b);

  const Simplex& first() const noexcept { return a_; }
  const Simplex& second() const noexcept { return b_; }
  int dim() const noexcept { return a_.dim() + b_.dim(); }
  bool involves(const Simplex& s) const noexcept { return a_ == s || b_ == s; }
  /// The member other than `s` (which must be a member).
  const Simplex& partner(const Simplex& s) const;
  std::string str() const;

  friend bool operator==(const PairCell&, const PairCell&) = default;
  friend auto operator<=>(const PairCell&, const PairCell&) = default;

 private:
  Simplex a_, b_;
};

/// GF(2) chain of pair cells of one dimension.
class PairChain {
 public:
  explicit PairChain(int dim = 0) : dim_(dim) {}
  int dim() const noexcept { return dim_; }
  bool empty() const noexcept { return cells_.empty(); }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::set<PairCell>& cells() const noexcept { return cells_; }
  auto begin() const noexcept { return cells_.begin(); }
  auto end() const noexcept { return cells_.end(); }
  bool contains(const PairCell& c) const { return cells_.count(c) != 0; }

  void toggle(const PairCell& c);
  PairChain& operator+=(const PairChain& other);
  friend PairChain operator+(PairChain a, const PairChain& b) { return a += b; }

  /// α_σ = {τ : {σ, τ} ∈ this}, as a chain of dimension dim - dim σ.
  Chain2 slice(const Simplex& sigma) const;
  /// Every simplex occurring in some cell.
  std::set<Simplex> members() const;

  friend bool operator==(const PairChain&, const PairChain&) = default;

 private:
  int dim_;
  std::set<PairCell> cells_;
};

/// The quotient (unordered) deleted product of a complex.
class DeletedProduct {
 public:
  explicit DeletedProduct(Complex base);

  const Complex& base() const noexcept { return base_; }
  /// Largest k with at least one k-cell; -1 if there are none.
  int top_dim() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  /// k-cells in canonical order (empty beyond top_dim).
  const std::vector<PairCell>& cells(int k) const;
  std::size_t num_cells() const;
  bool contains(const PairCell& c) const;
  /// Position of `c` among cells(c.dim()); throws if absent.
  std::size_t index_of(const PairCell& c) const;

  /// Boundary matrix C_k -> C_{k-1} over GF(2).
  Gf2Matrix boundary_matrix(int k) const;
  PairChain chain_from(int k, const BitVector& v) const;
  BitVector vector_of(const PairChain& w) const;

 private:
  Complex base_;
  std::vector<std::vector<PairCell>> cells_;
};

/// ∂{σ,τ} = {∂σ,τ} + {σ,∂τ}, dropping terms with an empty member.
PairChain boundary_pair(const PairCell& x);
PairChain boundary(const PairChain& w);

/// True iff ∂w = 0. Throws if a cell is not in the deleted product.
bool is_pair_cycle(const PairChain& w, const DeletedProduct& dp);

/// Simplices whose slice α_σ is not a cycle (empty iff w is a cycle).
std::vector<Simplex> non_cycle_slices(const PairChain& w);

/// Bilinear pairing {α, β} = Σ {σ, τ}; throws "supports not disjoint" unless
/// every σ ∈ α is disjoint from every τ ∈ β.
PairChain pair_chain_of(const Chain2& a, const Chain2& b);

/// Number of cells the deleted product of `c` would have, counted without
/// building it.
std::size_t count_deleted_product_cells(const Complex& c);

}  // namespace vk
