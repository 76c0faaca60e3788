#include "vk/obstruction.hpp"

#include <algorithm>

namespace vk {

namespace {
constexpr int kMaxRetries = 5;
}

int IntersectionCochain::value(const PairCell& c) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it == cells.end() || !(*it == c)) throw Error("cochain is not defined on " + c.str());
  return values.get(static_cast<std::size_t>(it - cells.begin())) ? 1 : 0;
}

std::set<PairCell> IntersectionCochain::support() const {
  std::set<PairCell> out;
  for (auto i : values.ones()) out.insert(cells[i]);
  return out;
}

int IntersectionCochain::pair(const PairChain& w) const {
  if (w.empty()) return 0;
  if (w.dim() != r) throw Error("pairing a degree-" + std::to_string(r) + " cochain with a " +
                                std::to_string(w.dim()) + "-chain");
  int acc = 0;
  for (const auto& c : w) acc ^= value(c);
  return acc;
}

IntersectionCochain intersection_cochain(const GeomMap& g, const DeletedProduct& dp) {
  IntersectionCochain phi;
  phi.r = g.r;
  phi.cells = dp.cells(g.r);
  phi.values = BitVector(phi.cells.size());
  for (std::size_t i = 0; i < phi.cells.size(); ++i)
    if (intersection_number(g, phi.cells[i].first(), phi.cells[i].second()) == 1)
      phi.values.set(i);
  return phi;
}

IntersectionCochain moment_cochain(const DeletedProduct& dp, int r, int schedule, int* used) {
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    try {
      auto phi = intersection_cochain(moment_schedule(dp.base(), r, schedule + attempt), dp);
      if (used) *used = schedule + attempt;
      return phi;
    } catch (const DegeneratePosition&) {
      if (attempt == kMaxRetries) throw;
    }
  }
  throw DegeneratePosition("retries exhausted");
}

namespace {

/// δφ = 0 check on (r+1)-cells; only needed below the top dimension.
void require_cocycle(const IntersectionCochain& phi, const DeletedProduct& dp) {
  for (const auto& cell : dp.cells(phi.r + 1)) {
    int acc = 0;
    for (const auto& f : boundary_pair(cell)) acc ^= phi.value(f);
    if (acc != 0)
      throw Error("intersection cochain is not a cocycle at " + cell.str(), Error::Kind::property);
  }
}

}  // namespace

ObstructionReport obstruction(const DeletedProduct& dp, int r, int schedule) {
  if (r < 1) throw Error("obstruction degree must be positive");
  ObstructionReport rep;
  rep.r = r;
  if (dp.cells(r).empty()) {
    rep.schedule = schedule;
    return rep;
  }
  auto phi = moment_cochain(dp, r, schedule, &rep.schedule);
  if (r < dp.top_dim()) require_cocycle(phi, dp);
  rep.cochain_support = phi.support();
  auto basis = kernel_basis(dp.boundary_matrix(r));
  rep.kernel_dim = basis.size();
  for (const auto& z : basis) {
    if (z.dot(phi.values)) {
      rep.vanishes = false;
      rep.witness = dp.chain_from(r, z);
      rep.pairing = 1;
      break;
    }
  }
  return rep;
}

ObstructionReport obstruction(const Complex& c, int r, int schedule) {
  return obstruction(DeletedProduct(c), r, schedule);
}

int evaluate(const DeletedProduct& dp, int r, const PairChain& w, int schedule) {
  if (w.empty()) return 0;
  if (w.dim() != r) throw Error("witness has dimension " + std::to_string(w.dim()));
  if (!is_pair_cycle(w, dp)) throw Error("not a cycle", Error::Kind::property);
  return moment_cochain(dp, r, schedule).pair(w);
}

int evaluate(const Complex& c, int r, const PairChain& w, int schedule) {
  if (w.empty()) return 0;
  return evaluate(DeletedProduct(c), r, w, schedule);
}

PairChain vk_witness(const Simplex& vertex_set, int d) {
  if (d < 0 || vertex_set.size() != static_cast<std::size_t>(2 * d + 3))
    throw Error("van Kampen witness needs exactly 2d+3 = " + std::to_string(2 * d + 3) +
                " vertices");
  PairChain w(2 * d);
  const auto halves = vertex_set.faces_of_dim(d);
  for (std::size_t i = 0; i < halves.size(); ++i)
    for (std::size_t j = i + 1; j < halves.size(); ++j)
      if (halves[i].disjoint(halves[j])) w.toggle(PairCell(halves[i], halves[j]));
  return w;
}

}  // namespace vk
