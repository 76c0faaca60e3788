#include "vk/deleted_product.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "vk/homology.hpp"

namespace vk {

PairCell::PairCell(Simplex a, Simplex b) {
  if (a.empty() || b.empty()) throw Error("pair cells need nonempty simplices");
  if (!a.disjoint(b)) throw Error("pair cell members " + a.str() + ", " + b.str() + " intersect");
  if (b < a) std::swap(a, b);
  a_ = std::move(a);
  b_ = std::move(b);
}

const Simplex& PairCell::partner(const Simplex& s) const {
  if (s == a_) return b_;
  if (s == b_) return a_;
  throw Error(s.str() + " is not a member of " + str());
}

std::string PairCell::str() const { return "{" + a_.str() + "," + b_.str() + "}"; }

void PairChain::toggle(const PairCell& c) {
  if (c.dim() != dim_)
    throw Error("pair chain of dimension " + std::to_string(dim_) + " cannot hold " + c.str());
  auto [it, inserted] = cells_.insert(c);
  if (!inserted) cells_.erase(it);
}

PairChain& PairChain::operator+=(const PairChain& other) {
  if (other.empty()) return *this;
  if (other.dim_ != dim_) throw Error("adding pair chains of different dimensions");
  for (const auto& c : other.cells_) toggle(c);
  return *this;
}

Chain2 PairChain::slice(const Simplex& sigma) const {
  Chain2 out(dim_ - sigma.dim());
  for (const auto& c : cells_)
    if (c.involves(sigma)) out.toggle(c.partner(sigma));
  return out;
}

std::set<Simplex> PairChain::members() const {
  std::set<Simplex> out;
  for (const auto& c : cells_) {
    out.insert(c.first());
    out.insert(c.second());
  }
  return out;
}

DeletedProduct::DeletedProduct(Complex base) : base_(std::move(base)) {
  std::vector<Simplex> fs;
  for (int i = 0; i <= base_.dim(); ++i) {
    const auto& level = base_.faces(i);
    fs.insert(fs.end(), level.begin(), level.end());
  }
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (!fs[i].disjoint(fs[j])) continue;
      const auto k = static_cast<std::size_t>(fs[i].dim() + fs[j].dim());
      if (cells_.size() <= k) cells_.resize(k + 1);
      cells_[k].emplace_back(fs[i], fs[j]);
    }
  for (auto& level : cells_) std::sort(level.begin(), level.end());
}

const std::vector<PairCell>& DeletedProduct::cells(int k) const {
  static const std::vector<PairCell> none;
  if (k < 0 || k >= static_cast<int>(cells_.size())) return none;
  return cells_[static_cast<std::size_t>(k)];
}

std::size_t DeletedProduct::num_cells() const {
  std::size_t n = 0;
  for (const auto& level : cells_) n += level.size();
  return n;
}

bool DeletedProduct::contains(const PairCell& c) const {
  const auto& level = cells(c.dim());
  return std::binary_search(level.begin(), level.end(), c);
}

std::size_t DeletedProduct::index_of(const PairCell& c) const {
  const auto& level = cells(c.dim());
  auto it = std::lower_bound(level.begin(), level.end(), c);
  if (it == level.end() || !(*it == c))
    throw Error("cell " + c.str() + " is not in the deleted product");
  return static_cast<std::size_t>(it - level.begin());
}

Gf2Matrix DeletedProduct::boundary_matrix(int k) const {
  const auto& dom = cells(k);
  const auto& cod = cells(k - 1);
  Gf2Matrix m(cod.size(), dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j)
    for (const auto& f : boundary_pair(dom[j])) m.flip(index_of(f), j);
  return m;
}

PairChain DeletedProduct::chain_from(int k, const BitVector& v) const {
  PairChain w(k);
  const auto& level = cells(k);
  for (auto i : v.ones()) w.toggle(level[i]);
  return w;
}

BitVector DeletedProduct::vector_of(const PairChain& w) const {
  BitVector v(cells(w.dim()).size());
  for (const auto& c : w) v.flip(index_of(c));
  return v;
}

PairChain boundary_pair(const PairCell& x) {
  PairChain out(x.dim() - 1);
  if (x.dim() < 1) return out;
  for (const auto& f : x.first().facets())
    if (!f.empty()) out.toggle(PairCell(f, x.second()));
  for (const auto& f : x.second().facets())
    if (!f.empty()) out.toggle(PairCell(x.first(), f));
  return out;
}

PairChain boundary(const PairChain& w) {
  PairChain out(w.dim() - 1);
  for (const auto& c : w) out += boundary_pair(c);
  return out;
}

bool is_pair_cycle(const PairChain& w, const DeletedProduct& dp) {
  for (const auto& c : w)
    if (!dp.contains(c)) throw Error("chain not supported: " + c.str() + " is not a cell");
  return boundary(w).empty();
}

std::vector<Simplex> non_cycle_slices(const PairChain& w) {
  std::vector<Simplex> bad;
  for (const auto& s : w.members())
    if (!vk::boundary(w.slice(s)).empty()) bad.push_back(s);
  return bad;
}

PairChain pair_chain_of(const Chain2& a, const Chain2& b) {
  PairChain out(a.dim() + b.dim());
  if (!a.support().disjoint(b.support())) throw Error("supports not disjoint");
  for (const auto& s : a)
    for (const auto& t : b) out.toggle(PairCell(s, t));
  return out;
}

std::size_t count_deleted_product_cells(const Complex& c) {
  std::vector<Simplex> fs;
  for (int i = 0; i <= c.dim(); ++i) {
    const auto& level = c.faces(i);
    fs.insert(fs.end(), level.begin(), level.end());
  }
  std::size_t n = 0;
  if (c.vertices().size() <= 64) {
    std::unordered_map<Vertex, int> pos;
    for (std::size_t i = 0; i < c.vertices().size(); ++i)
      pos[c.vertices()[i]] = static_cast<int>(i);
    std::vector<std::uint64_t> masks;
    masks.reserve(fs.size());
    for (const auto& s : fs) {
      std::uint64_t m = 0;
      for (Vertex v : s) m |= std::uint64_t{1} << pos[v];
      masks.push_back(m);
    }
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = i + 1; j < masks.size(); ++j)
        if ((masks[i] & masks[j]) == 0) ++n;
    return n;
  }
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (fs[i].disjoint(fs[j])) ++n;
  return n;
}

}  // namespace vk
