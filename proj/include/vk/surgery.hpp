#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vk/complex.hpp"
#include "vk/deleted_product.hpp"
#include "vk/pachner.hpp"

namespace vk {

/// A bistellar move of type (p, q), p + q = 2d, seen on d-skeleta: K contains
/// T = (Δ^p ∗ ∂Δ^q)_{≤d}, and L is K with T replaced by T' = (∂Δ^p ∗ Δ^q)_{≤d}.
/// The constructor checks the structural hypotheses (T induced in K, open star
/// of Δ^p inside T, L = (K minus the star) ∪ T' ∪ `added`, v0 outside
/// T_0 ∪ T'_0). Without an explicit v0 the smallest such label is used; if there
/// is none, v0() is -1 and check_assumptions reports (II.a).
class SkeletonMoveContext {
 public:
  SkeletonMoveContext(Complex K, Complex L, Simplex delta_p, Simplex delta_q, int d,
                      std::optional<Vertex> v0 = std::nullopt,
                      const std::vector<Simplex>& added = {});

  /// K = S_{≤d} ∪ extra, L = S'_{≤d} ∪ extra for the sphere move S -> S'.
  static SkeletonMoveContext from_move(const Complex& S, const MoveDescriptor& m, int d,
                                       const std::vector<Simplex>& extra = {},
                                       std::optional<Vertex> v0 = std::nullopt);

  const Complex& K() const noexcept { return K_; }
  const Complex& L() const noexcept { return L_; }
  const Complex& KL() const noexcept { return KL_; }
  const Complex& T() const noexcept { return T_; }
  const Complex& Tprime() const noexcept { return Tp_; }
  const Simplex& delta_p() const noexcept { return dp_; }
  const Simplex& delta_q() const noexcept { return dq_; }
  int d() const noexcept { return d_; }
  int p() const noexcept { return dp_.dim(); }
  int q() const noexcept { return dq_.dim(); }
  Vertex v0() const noexcept { return v0_; }
  /// T_0 ∩ T'_0 as a vertex set.
  const Simplex& shared_vertices() const noexcept { return shared_; }

 private:
  Complex K_, L_, KL_, T_, Tp_;
  Simplex dp_, dq_, shared_;
  int d_;
  Vertex v0_ = -1;
};

struct AssumptionReport {
  bool ok = true;
  /// First violation, e.g. "(II.b) at ρ = [0,1], i = 0".
  std::string violation;
  std::size_t rho_checked = 0;
};

/// (II.a) and (II.b): H̃_i(K - (T_0 ∖ ρ); Z2) = 0 for 0 ≤ i ≤ d-1 and every
/// ρ ∈ T ∩ T' (including ∅).
AssumptionReport check_assumptions(const SkeletonMoveContext& ctx);

/// The homological cone v0 • ρ for faces ρ of K ∩ L of dimension ≤ d-1.
/// Memoized; one oracle per context and thread.
class ConingOracle {
 public:
  explicit ConingOracle(const SkeletonMoveContext& ctx) : ctx_(&ctx) {}

  /// Throws "assumption (II.b) violated at ρ" when the defining system has no
  /// solution.
  const Chain2& cone(const Simplex& rho);
  Chain2 cone_chain(const Chain2& theta);
  /// Number of cones that needed the linear solve.
  std::size_t solved() const noexcept { return solved_; }

 private:
  const Complex& restricted(const Simplex& rho);

  const SkeletonMoveContext* ctx_;
  std::map<Simplex, Chain2> memo_;
  std::map<Simplex, Complex> restricted_;  // keyed by ρ ∩ T_0 ∩ T'_0
  std::size_t solved_ = 0;
};

/// Counts of the internal checks made by one transport. A failed check throws,
/// so in a returned value every counted check passed.
struct TransportDiagnostics {
  bool identity = false;
  std::size_t gamma_checked = 0;
  std::size_t gamma_nonzero = 0;
  std::size_t gamma_in_T_checked = 0;
  std::size_t zeta_checked = 0;
  std::size_t problematic_patched = 0;
  std::size_t removed_cells = 0;
  std::size_t added_cells = 0;

  TransportDiagnostics& operator+=(const TransportDiagnostics& o);
};

struct TransportResult {
  PairChain omega;
  TransportDiagnostics diagnostics;
};

/// Carries a 2d-cycle of the quotient deleted product of K to one of L, via
/// Steps 1-3 of the bistellar surgery. Throws Error(property) if any internal
/// claim fails (γ_τ not a cycle, γ_τ ≠ 0 on T, ζ(ρ) not a cycle, a removed cell
/// away from T or added cell away from T', or a non-cycle result).
TransportResult transport_witness(const SkeletonMoveContext& ctx, ConingOracle& oracle,
                                  const PairChain& omega);
TransportResult transport_witness(const SkeletonMoveContext& ctx, const PairChain& omega);

/// Witness for a freshly created missing face M = v0 ∗ Δ^q (q = d-1): the sum of
/// {B(σ), B(τ)} over disjoint d-subsets of V = {v0} ∪ Δ^p ∪ Δ^q. The context's
/// v0 must be M ∖ Δ^q.
PairChain missing_face_witness(const SkeletonMoveContext& ctx, ConingOracle& oracle,
                               const Simplex& M);
PairChain missing_face_witness(const SkeletonMoveContext& ctx, const Simplex& M);

struct TheoremReport {
  Simplex M;
  /// How the witness for M was obtained at each move, oldest first:
  /// "fresh", "transport", "identity" or "swap".
  std::vector<std::string> steps;
  PairChain witness;
  bool witness_is_cycle = false;
  int pairing = 0;
  bool direct_vanishes = true;
  bool agrees = false;
  TransportDiagnostics diagnostics;
};

/// Replays `trace` from `start` (a simplex boundary of dimension 2d) and builds
/// a witness for S_{≤d} ∪ {M} inductively, then compares with the direct kernel
/// decision. Throws if M is not a missing d-face of the final sphere.
TheoremReport verify_missing_face_theorem(const Complex& start,
                                          const std::vector<MoveDescriptor>& trace,
                                          const Simplex& M, int schedule = 0);

/// The d-chain ∂Δ^p ∗ β (join of each facet of Δ^p with each cell of β).
Chain2 join_chain(const Chain2& a, const Chain2& b);

}  // namespace vk
