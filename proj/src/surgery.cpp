#include "vk/surgery.hpp"

#include <algorithm>

#include "vk/homology.hpp"
#include "vk/obstruction.hpp"

namespace vk {

namespace {

Error violation(const std::string& what) { return Error(what, Error::Kind::property); }

Simplex vertex_set(const Complex& c) { return Simplex(c.vertices()); }

/// K with every face containing s removed.
Complex remove_star(const Complex& c, const Simplex& s) {
  std::vector<Simplex> gens;
  for (const auto& f : c.facets()) {
    if (!f.contains(s)) {
      gens.push_back(f);
      continue;
    }
    for (Vertex u : s) gens.push_back(f.without(u));
  }
  return Complex(std::move(gens));
}

bool is_missing(const Complex& c, const Simplex& m) {
  if (c.contains(m)) return false;
  for (const auto& f : m.facets())
    if (!c.contains(f)) return false;
  return true;
}

}  // namespace

Chain2 join_chain(const Chain2& a, const Chain2& b) {
  Chain2 out(a.dim() + b.dim() + 1);
  for (const auto& x : a)
    for (const auto& y : b) {
      if (!x.disjoint(y)) throw Error("non-disjoint join of " + x.str() + " and " + y.str());
      out.toggle(x.unite(y));
    }
  return out;
}

SkeletonMoveContext::SkeletonMoveContext(Complex K, Complex L, Simplex delta_p, Simplex delta_q,
                                         int d, std::optional<Vertex> v0,
                                         const std::vector<Simplex>& added)
    : K_(std::move(K)), L_(std::move(L)), dp_(std::move(delta_p)), dq_(std::move(delta_q)), d_(d) {
  if (d < 0 || dp_.empty() || dq_.empty() || p() + q() != 2 * d)
    throw Error("move type (" + std::to_string(p()) + "," + std::to_string(q()) +
                ") does not match 2d = " + std::to_string(2 * d));
  if (!dp_.disjoint(dq_)) throw Error("Δ^p and Δ^q share vertices");
  T_ = skeleton(join(Complex::full_simplex(dp_), Complex::boundary_of(dq_)), d);
  Tp_ = skeleton(join(Complex::boundary_of(dp_), Complex::full_simplex(dq_)), d);

  for (const auto& f : T_.facets())
    if (!K_.contains(f)) throw Error("T is not a subcomplex of K: missing " + f.str());
  const Simplex t0 = vertex_set(T_);
  if (!(induced(K_, t0) == T_)) throw Error("T is not an induced subcomplex of K");
  if (p() <= d)
    for (const auto& f : K_.facets())
      if (f.contains(dp_) && !T_.contains(f))
        throw Error("open star of Δ^p leaves T at " + f.str());
  Complex expect = union_of(remove_star(K_, dp_), Tp_);
  if (!added.empty()) expect = union_of(expect, Complex(added));
  if (!(expect == L_)) throw Error("L is not K with T replaced by T'");

  KL_ = intersection_of(K_, L_);
  const Simplex tp0 = vertex_set(Tp_);
  shared_ = t0.intersect(tp0);
  const Simplex inside = t0.unite(tp0.minus(t0));
  if (v0) {
    if (!K_.has_vertex(*v0) || !L_.has_vertex(*v0) || inside.contains(*v0))
      throw Error("v0 = " + std::to_string(*v0) + " is not a vertex outside T_0 ∪ T'_0");
    v0_ = *v0;
  } else {
    for (Vertex v : K_.vertices())
      if (!inside.contains(v) && L_.has_vertex(v)) {
        v0_ = v;
        break;
      }
  }
}

SkeletonMoveContext SkeletonMoveContext::from_move(const Complex& S, const MoveDescriptor& m,
                                                   int d, const std::vector<Simplex>& extra,
                                                   std::optional<Vertex> v0) {
  Complex K = skeleton(S, d);
  Complex L = skeleton(apply_move(S, m), d);
  for (const auto& e : extra) {
    K = add_face(K, e);
    L = add_face(L, e);
  }
  return SkeletonMoveContext(std::move(K), std::move(L), m.sigma, m.tau, d, v0);
}

AssumptionReport check_assumptions(const SkeletonMoveContext& ctx) {
  AssumptionReport rep;
  if (ctx.v0() < 0) {
    rep.ok = false;
    rep.violation = "(II.a): no vertex of K outside T_0";
    return rep;
  }
  std::vector<Simplex> rhos{Simplex{}};
  for (const auto& r : intersection_of(ctx.T(), ctx.Tprime()).all_faces())
    if (!r.empty()) rhos.push_back(r);
  const Simplex t0 = vertex_set(ctx.T());
  for (const auto& rho : rhos) {
    ++rep.rho_checked;
    const auto betti = betti_gf2(delete_vertices(ctx.K(), t0.minus(rho)));
    for (int i = 0; i <= ctx.d() - 1; ++i)
      if (betti.at(i) != 0) {
        rep.ok = false;
        rep.violation = "(II.b) at ρ = " + rho.str() + ", i = " + std::to_string(i);
        return rep;
      }
  }
  return rep;
}

const Complex& ConingOracle::restricted(const Simplex& rho) {
  const Simplex key = rho.intersect(ctx_->shared_vertices());
  auto it = restricted_.find(key);
  if (it == restricted_.end())
    it = restricted_
             .emplace(key, delete_vertices(ctx_->KL(), ctx_->shared_vertices().minus(key)))
             .first;
  return it->second;
}

const Chain2& ConingOracle::cone(const Simplex& rho) {
  if (auto it = memo_.find(rho); it != memo_.end()) return it->second;
  const Vertex v0 = ctx_->v0();
  if (v0 < 0) throw violation("assumption (II.a) violated: no cone vertex");
  Chain2 out(rho.dim() + 1);
  if (rho.contains(v0)) {
    // zero chain
  } else if (ctx_->KL().contains(rho.with(v0))) {
    out.toggle(rho.with(v0));
  } else {
    if (rho.dim() > ctx_->d() - 1 || !ctx_->KL().contains(rho))
      throw Error("cannot cone " + rho.str() + ": not a face of K ∩ L of dimension < d");
    Chain2 z(rho.dim(), {rho});
    for (Vertex u : rho) z += cone(rho.without(u));
    auto b = solve_boundary(restricted(rho), z);
    if (!b) throw violation("assumption (II.b) violated at ρ = " + rho.str());
    ++solved_;
    out = std::move(*b);
  }
  return memo_.emplace(rho, std::move(out)).first->second;
}

Chain2 ConingOracle::cone_chain(const Chain2& theta) {
  Chain2 out(theta.dim() + 1);
  for (const auto& rho : theta) out += cone(rho);
  return out;
}

TransportDiagnostics& TransportDiagnostics::operator+=(const TransportDiagnostics& o) {
  identity = identity && o.identity;
  gamma_checked += o.gamma_checked;
  gamma_nonzero += o.gamma_nonzero;
  gamma_in_T_checked += o.gamma_in_T_checked;
  zeta_checked += o.zeta_checked;
  problematic_patched += o.problematic_patched;
  removed_cells += o.removed_cells;
  added_cells += o.added_cells;
  return *this;
}

namespace {

void require_cycle_in(const PairChain& w, const Complex& c, const std::string& what) {
  for (const auto& cell : w)
    if (!c.contains(cell.first()) || !c.contains(cell.second()))
      throw violation(what + ": cell " + cell.str() + " is not in the deleted product");
  if (!boundary(w).empty()) throw violation(what + " is not a cycle");
}

}  // namespace

TransportResult transport_witness(const SkeletonMoveContext& ctx, ConingOracle& oracle,
                                  const PairChain& omega) {
  const int d = ctx.d();
  const int p = ctx.p();
  const Simplex& dp = ctx.delta_p();
  const Simplex& dq = ctx.delta_q();
  TransportResult res{omega, {}};
  if (!omega.empty() && omega.dim() != 2 * d)
    throw Error("witness has dimension " + std::to_string(omega.dim()) + ", expected " +
                std::to_string(2 * d));
  require_cycle_in(omega, ctx.K(), "input witness");

  bool touches = false;
  for (const auto& s : omega.members()) touches = touches || s.contains(dp);
  if (p > d || !touches) {
    res.diagnostics.identity = true;
    require_cycle_in(omega, ctx.L(), "untouched witness");
    return res;
  }

  // Step 1: γ_τ = lk(Δ^p, α_τ), then drop every pair with a member ⊇ Δ^p.
  std::map<Simplex, Chain2> gamma;
  PairChain w1(2 * d);
  for (const auto& cell : omega)
    if (!cell.first().contains(dp) && !cell.second().contains(dp)) w1.toggle(cell);
  for (const auto& tau : omega.members()) {
    if (tau.contains(dp)) continue;
    Chain2 g(d - p - 1);
    for (const auto& s : omega.slice(tau))
      if (s.contains(dp)) g.toggle(s.minus(dp));
    ++res.diagnostics.gamma_checked;
    if (!boundary(g).empty()) throw violation("γ_τ is not a cycle at τ = " + tau.str());
    if (ctx.T().contains(tau)) {
      ++res.diagnostics.gamma_in_T_checked;
      if (!g.empty()) throw violation("γ_τ ≠ 0 for τ = " + tau.str() + " in T");
    }
    if (g.empty()) continue;
    if (!dq.contains(g.support()) || !g.support().disjoint(tau))
      throw violation("γ_τ at τ = " + tau.str() + " leaves ∂Δ^q or meets τ");
    ++res.diagnostics.gamma_nonzero;
    gamma.emplace(tau, std::move(g));
  }

  // Step 2: patch with ∂Δ^p ∗ β_τ.
  const Chain2 dp_boundary(p - 1, dp.facets());
  std::map<Simplex, Chain2> beta;
  PairChain w2 = w1;
  for (const auto& [tau, g] : gamma) {
    Chain2 b(d - p);
    if (p < d) {
      auto sol = solve_boundary(Complex::full_simplex(g.support()), g);
      if (!sol) throw violation("no patching chain for γ_τ at τ = " + tau.str());
      b = std::move(*sol);
    } else {
      auto w = std::find_if(dq.begin(), dq.end(), [&](Vertex x) { return !tau.contains(x); });
      if (w == dq.end()) throw violation("every vertex of Δ^q lies in τ = " + tau.str());
      b.toggle(Simplex{*w});
    }
    w2 += pair_chain_of(join_chain(dp_boundary, b), Chain2(d, {tau}));
    beta.emplace(tau, std::move(b));
  }

  // Step 3: ζ(ρ) must be cycles; cone off ∂α''_σ for problematic σ.
  std::map<Simplex, Chain2> zeta;
  for (const auto& [tau, b] : beta)
    for (const auto& rho : tau.facets()) {
      auto it = zeta.try_emplace(rho, d - p).first;
      it->second += b;
    }
  for (const auto& [rho, z] : zeta) {
    ++res.diagnostics.zeta_checked;
    if (!boundary(z).empty()) throw violation("ζ(ρ) is not a cycle at ρ = " + rho.str());
  }
  PairChain fix(2 * d);
  for (const auto& f : dp.facets())
    for (const auto& s : dq.faces_of_dim(d - p)) {
      const Simplex sigma = f.unite(s);
      const Chain2 hole = boundary(w2.slice(sigma));
      if (hole.empty()) continue;
      const Chain2 c = oracle.cone_chain(hole);
      if (!c.support().disjoint(sigma))
        throw violation("cone of ∂α''_σ meets σ = " + sigma.str());
      fix += pair_chain_of(Chain2(d, {sigma}), c);
      ++res.diagnostics.problematic_patched;
    }
  w2 += fix;

  require_cycle_in(w2, ctx.L(), "transported witness");
  for (const auto& cell : omega)
    if (!w2.contains(cell)) {
      ++res.diagnostics.removed_cells;
      if (!ctx.T().contains(cell.first()) && !ctx.T().contains(cell.second()))
        throw violation("removed cell " + cell.str() + " has no member in T");
    }
  for (const auto& cell : w2)
    if (!omega.contains(cell)) {
      ++res.diagnostics.added_cells;
      if (!ctx.Tprime().contains(cell.first()) && !ctx.Tprime().contains(cell.second()))
        throw violation("added cell " + cell.str() + " has no member in T'");
    }
  res.omega = std::move(w2);
  return res;
}

TransportResult transport_witness(const SkeletonMoveContext& ctx, const PairChain& omega) {
  ConingOracle oracle(ctx);
  return transport_witness(ctx, oracle, omega);
}

PairChain missing_face_witness(const SkeletonMoveContext& ctx, ConingOracle& oracle,
                               const Simplex& M) {
  const int d = ctx.d();
  const Vertex v0 = ctx.v0();
  if (ctx.q() != d - 1 || v0 < 0 || !M.contains(v0) || !(M.without(v0) == ctx.delta_q()))
    throw Error("not a freshly created missing face: " + M.str());
  if (!ctx.L().contains(M)) throw Error("M = " + M.str() + " is not in L");
  const Simplex V = ctx.delta_p().unite(ctx.delta_q()).with(v0);
  const auto halves = V.faces_of_dim(d);
  std::vector<Chain2> B;
  B.reserve(halves.size());
  for (const auto& s : halves) {
    if (s == M || !s.contains(v0))
      B.emplace_back(d, std::initializer_list<Simplex>{s});
    else
      B.push_back(oracle.cone(s.without(v0)));
  }
  PairChain w(2 * d);
  for (std::size_t i = 0; i < halves.size(); ++i)
    for (std::size_t j = i + 1; j < halves.size(); ++j)
      if (halves[i].disjoint(halves[j])) w += pair_chain_of(B[i], B[j]);
  require_cycle_in(w, ctx.L(), "missing-face witness");
  return w;
}

PairChain missing_face_witness(const SkeletonMoveContext& ctx, const Simplex& M) {
  ConingOracle oracle(ctx);
  return missing_face_witness(ctx, oracle, M);
}

TheoremReport verify_missing_face_theorem(const Complex& start,
                                          const std::vector<MoveDescriptor>& trace,
                                          const Simplex& M, int schedule) {
  const int D = start.dim();
  if (D < 2 || D % 2 != 0 || !(start == Complex::boundary_of(vertex_set(start))))
    throw Error("trace must start at the boundary of a simplex of even dimension");
  const int d = D / 2;
  std::vector<Complex> spheres{start};
  for (const auto& m : trace) spheres.push_back(apply_move(spheres.back(), m));
  const std::size_t n = trace.size();
  if (M.dim() != d || !is_missing(spheres[n], M))
    throw Error(M.str() + " is not a missing " + std::to_string(d) + "-face");

  // Walk back to the move that created the face.
  std::vector<Simplex> lineage(n + 1);
  std::vector<std::string> how(n + 1);
  lineage[n] = M;
  std::size_t i = n;
  for (;; --i) {
    if (i == 0) throw violation("missing face traced back to the initial simplex boundary");
    const auto& m = trace[i - 1];
    const Simplex& cur = lineage[i];
    if (is_missing(spheres[i - 1], cur)) {
      how[i] = m.p() > d ? "identity" : "transport";
      lineage[i - 1] = cur;
    } else if (m.p() == d && m.q() == d && cur == m.sigma) {
      how[i] = "swap";
      lineage[i - 1] = m.tau;
    } else if (m.q() == d - 1 && cur.contains(m.tau) && cur.size() == m.tau.size() + 1 &&
               !m.sigma.contains(cur.minus(m.tau))) {
      how[i] = "fresh";
      break;
    } else {
      throw violation("not a freshly created missing face: " + cur.str() + " at move " +
                      std::to_string(i));
    }
  }

  TheoremReport rep;
  rep.M = M;
  rep.diagnostics.identity = true;
  PairChain omega(2 * d);
  for (std::size_t k = i; k <= n; ++k) {
    const auto& m = trace[k - 1];
    rep.steps.push_back(how[k]);
    const Simplex& cur = lineage[k];
    if (how[k] == "fresh") {
      const Vertex v0 = cur.minus(m.tau)[0];
      SkeletonMoveContext ctx(skeleton(spheres[k - 1], d), add_face(skeleton(spheres[k], d), cur),
                              m.sigma, m.tau, d, v0, {cur});
      if (auto a = check_assumptions(ctx); !a.ok) throw violation(a.violation);
      omega = missing_face_witness(ctx, cur);
    } else if (how[k] == "swap") {
      if (!(add_face(skeleton(spheres[k - 1], d), m.tau) ==
            add_face(skeleton(spheres[k], d), m.sigma)))
        throw violation("swap step changed the complex");
    } else {
      auto ctx = SkeletonMoveContext::from_move(spheres[k - 1], m, d, {cur});
      if (auto a = check_assumptions(ctx); !a.ok) throw violation(a.violation);
      auto t = transport_witness(ctx, omega);
      rep.diagnostics += t.diagnostics;
      omega = std::move(t.omega);
    }
  }

  DeletedProduct dp(add_face(skeleton(spheres[n], d), M));
  rep.witness_is_cycle = !omega.empty() && is_pair_cycle(omega, dp);
  rep.pairing = rep.witness_is_cycle ? moment_cochain(dp, 2 * d, schedule).pair(omega) : 0;
  rep.direct_vanishes = obstruction(dp, 2 * d, schedule).vanishes;
  rep.agrees = rep.pairing == 1 && !rep.direct_vanishes;
  rep.witness = std::move(omega);
  return rep;
}

}  // namespace vk
