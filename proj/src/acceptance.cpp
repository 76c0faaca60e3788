#include "vk/acceptance.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "vk/combinatorics.hpp"
#include "vk/dancis.hpp"
#include "vk/geometry.hpp"
#include "vk/homology.hpp"
#include "vk/kuratowski.hpp"
#include "vk/obstruction.hpp"
#include "vk/rng.hpp"
#include "vk/surgery.hpp"

namespace vk {

namespace corpus {

std::vector<NamedTrace> d1_walks() {
  std::vector<NamedTrace> out;
  const Complex start = boundary_simplex(2);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int steps = 1 + static_cast<int>((seed * 7) % 10);
    out.push_back({"d1-walk-" + std::to_string(seed), start,
                   random_walk(start, steps, seed).trace});
  }
  return out;
}

std::vector<MoveDescriptor> biased_walk(const Complex& start, int steps, std::uint64_t seed,
                                        int bias) {
  Rng rng(seed);
  Complex cur = start;
  std::vector<MoveDescriptor> trace;
  for (int i = 0; i < steps; ++i) {
    auto moves = applicable_moves(cur);
    std::vector<MoveDescriptor> low;
    for (const auto& m : moves)
      if (m.p() <= bias) low.push_back(m);
    const auto& pool = low.empty() ? moves : low;
    if (pool.empty()) break;
    const auto& m = pool[uniform_index(rng, pool.size())];
    cur = apply_move(cur, m);
    trace.push_back(m);
  }
  return trace;
}

std::vector<MoveDescriptor> preserving_walk(const Complex& start, int steps, std::uint64_t seed,
                                            int d) {
  Rng rng(seed);
  Complex cur = start;
  std::vector<MoveDescriptor> trace;
  for (int i = 0; i < steps; ++i) {
    const auto before = missing_faces(cur, d);
    const auto moves = applicable_moves(cur);
    std::vector<MoveDescriptor> pool;
    for (const auto& m : moves) {
      if (m.p() < 1 || m.p() > d) continue;
      const Complex next = apply_move(cur, m);
      for (const auto& M : before)
        if (!next.contains(M)) {
          bool still = true;
          for (const auto& f : M.facets()) still = still && next.contains(f);
          if (still) {
            pool.push_back(m);
            break;
          }
        }
    }
    const auto& from = pool.empty() ? moves : pool;
    if (from.empty()) break;
    const auto& m = from[uniform_index(rng, from.size())];
    cur = apply_move(cur, m);
    trace.push_back(m);
  }
  return trace;
}

std::vector<NamedTrace> d2_traces() {
  const Complex base = boundary_simplex(4);
  const auto stellar = stellar_as_moves(base, Simplex{0, 1, 2});
  const Complex sub = replay(base, stellar);
  std::vector<NamedTrace> out;
  out.push_back({"d2-boundary", base, {}});
  out.push_back({"d2-stellar", base, stellar});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto t = stellar;
    auto more = random_walk(sub, 1 + static_cast<int>(seed % 3), seed).trace;
    t.insert(t.end(), more.begin(), more.end());
    out.push_back({"d2-stellar+walk-" + std::to_string(seed), base, t});
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto t = stellar;
    auto more = biased_walk(sub, 3, 100 + seed, 2);
    t.insert(t.end(), more.begin(), more.end());
    out.push_back({"d2-stellar+low-p-" + std::to_string(seed), base, t});
  }
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto t = stellar;
    auto grow = random_walk(sub, 2, seed).trace;
    t.insert(t.end(), grow.begin(), grow.end());
    auto more = preserving_walk(replay(sub, grow), 4, seed, 2);
    t.insert(t.end(), more.begin(), more.end());
    out.push_back({"d2-long-" + std::to_string(seed), base, t});
  }
  return out;
}

Complex planarity_graph(std::uint64_t seed) {
  Rng rng(seed);
  const int steps = static_cast<int>(uniform_index(rng, 11));
  Complex s = random_walk(boundary_simplex(2), steps, seed ^ 0x9e3779b97f4a7c15ULL).result;
  std::vector<Vertex> keep(s.vertices().begin(),
                           s.vertices().begin() + static_cast<std::ptrdiff_t>(
                                                      std::min<std::size_t>(10, s.vertices().size())));
  const Simplex kept(keep);
  std::vector<Simplex> gens;
  for (Vertex v : keep) gens.push_back(Simplex{v});
  for (const auto& e : s.faces(1))
    if (kept.contains(e) && uniform_index(rng, 100) < 80) gens.push_back(e);
  const auto extra = uniform_index(rng, 4);
  for (std::size_t k = 0; k < extra; ++k) {
    Vertex a = keep[uniform_index(rng, keep.size())];
    Vertex b = keep[uniform_index(rng, keep.size())];
    if (a != b) gens.push_back(Simplex{a, b});
  }
  return Complex(std::move(gens));
}

Complex rp2() {
  return Complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                  {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

Complex octahedron() {
  std::vector<Simplex> f;
  for (Vertex a : {0, 1})
    for (Vertex b : {2, 3})
      for (Vertex c : {4, 5}) f.push_back(Simplex{a, b, c});
  return Complex(std::move(f));
}

}  // namespace corpus

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct TheoremRun {
  std::string where;
  Simplex M;
  int r = 0;
  Complex K;
  std::optional<TheoremReport> report;
  std::string error;
};

struct TraceRuns {
  std::vector<TheoremRun> runs;
  double max_trace_seconds = 0;
};

TraceRuns run_theorem_corpus(const std::vector<NamedTrace>& traces) {
  TraceRuns out;
  for (const auto& t : traces) {
    const auto t0 = Clock::now();
    const Complex S = replay(t.start, t.trace);
    const int d = S.dim() / 2;
    for (const auto& M : missing_faces(S, d)) {
      TheoremRun run{t.name, M, 2 * d, add_face(skeleton(S, d), M), std::nullopt, {}};
      try {
        run.report = verify_missing_face_theorem(t.start, t.trace, M);
      } catch (const Error& e) {
        run.error = e.what();
      }
      out.runs.push_back(std::move(run));
    }
    out.max_trace_seconds = std::max(out.max_trace_seconds, since(t0));
  }
  return out;
}

class Suite {
 public:
  CriterionResult run(int id) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = id;
    try {
      switch (id) {
        case 1: c1(r); break;
        case 2: c2(r); break;
        case 3: c3(r); break;
        case 4: c4(r); break;
        case 5: c5(r); break;
        case 6: c6(r); break;
        case 7: c7(r); break;
        case 8: c8(r); break;
        case 9: c9(r); break;
        case 10: c10(r); break;
        case 11: c11(r); break;
        case 12: c12(r); break;
        default: throw Error("unknown criterion " + std::to_string(id));
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = since(t0);
    return r;
  }

 private:
  const TraceRuns& d1() {
    if (!d1_) d1_ = run_theorem_corpus(corpus::d1_walks());
    return *d1_;
  }
  const TraceRuns& d2() {
    if (!d2_) d2_ = run_theorem_corpus(corpus::d2_traces());
    return *d2_;
  }
  const std::vector<Complex>& graphs() {
    if (graphs_.empty())
      for (std::uint64_t s = 1; s <= 240; ++s) graphs_.push_back(corpus::planarity_graph(s));
    return graphs_;
  }

  static std::string theorem_check(const TraceRuns& tr, bool& ok) {
    std::size_t good = 0, bad = 0;
    std::string first;
    for (const auto& run : tr.runs) {
      const bool g = run.error.empty() && run.report->agrees && run.report->witness_is_cycle &&
                     !run.report->direct_vanishes;
      (g ? good : bad)++;
      if (!g && first.empty())
        first = run.where + " M=" + run.M.str() + ": " +
                (run.error.empty() ? "pairing/decision mismatch" : run.error);
    }
    ok = bad == 0 && good > 0;
    std::ostringstream os;
    os << good << "/" << tr.runs.size() << " missing faces with nonvanishing obstruction and "
       << "pairing-1 inductive witness";
    if (!first.empty()) os << "; first failure: " << first;
    return os.str();
  }

  void c1(CriterionResult& r) {
    r.title = "K5 obstruction and Kuratowski cross-check";
    const auto t0 = Clock::now();
    const Complex k5 = skeleton(Complex::full_simplex(corpus_vertices(5)), 1);
    auto rep = obstruction(k5, 2);
    const double secs = since(t0);
    const std::size_t cells = rep.witness ? rep.witness->size() : 0;
    const std::string kur = kuratowski_subgraph(k5);
    r.passed = !rep.vanishes && cells == 15 && rep.pairing == 1 && kur == "K5" && secs < 1.0;
    r.detail = "vanishes=" + std::string(rep.vanishes ? "true" : "false") + " witness cells=" +
               std::to_string(cells) + " oracle=" + (kur.empty() ? "planar" : kur) +
               " time=" + std::to_string(secs) + "s (limit 1s)";
  }

  void c2(CriterionResult& r) {
    r.title = "van Kampen-Flores complex, d = 2";
    const auto t0 = Clock::now();
    const Simplex V = corpus_vertices(7);
    const Complex vk = skeleton(Complex::full_simplex(V), 2);
    DeletedProduct dp(vk);
    auto rep = obstruction(dp, 4);
    const auto w = vk_witness(V, 2);
    const int pairing = evaluate(dp, 4, w);
    const double secs = since(t0);
    r.passed = !rep.vanishes && w.size() == 70 && pairing == 1 && secs < 30.0;
    r.detail = "vanishes=" + std::string(rep.vanishes ? "true" : "false") +
               " vk_witness cells=" + std::to_string(w.size()) +
               " pairing=" + std::to_string(pairing) + " time=" + std::to_string(secs) +
               "s (limit 30s)";
  }

  void c3(CriterionResult& r) {
    r.title = "planarity oracle equivalence";
    std::size_t agree = 0, nonplanar = 0;
    std::string first;
    for (std::size_t i = 0; i < graphs().size(); ++i) {
      const auto& g = graphs()[i];
      const bool planar = is_planar(g);
      const bool vanishes = obstruction(g, 2).vanishes;
      if (!planar) ++nonplanar;
      if (planar == vanishes)
        ++agree;
      else if (first.empty())
        first = "graph " + std::to_string(i + 1) + " " + g.str();
    }
    r.passed = agree == graphs().size() && graphs().size() >= 200;
    r.detail = std::to_string(agree) + "/" + std::to_string(graphs().size()) + " agree (" +
               std::to_string(nonplanar) + " nonplanar)";
    if (!first.empty()) r.detail += "; first disagreement: " + first;
  }

  void c4(CriterionResult& r) {
    r.title = "missing-edge theorem, d = 1 corpus";
    bool ok = false;
    r.detail = theorem_check(d1(), ok);
    r.passed = ok;
  }

  void c5(CriterionResult& r) {
    r.title = "missing-face theorem, d = 2 desk scale";
    bool ok = false;
    r.detail = theorem_check(d2(), ok);
    r.passed = ok && d2().max_trace_seconds < 600.0;
    r.detail += "; slowest trace " + std::to_string(d2().max_trace_seconds) + "s (limit 600s)";
  }

  void c6(CriterionResult& r) {
    r.title = "homological coning lemma";
    std::size_t rho_ok = 0, rho_bad = 0, cyc_ok = 0, cyc_bad = 0;
    std::string first;
    Rng rng(6);
    std::vector<NamedTrace> traces = corpus::d1_walks();
    for (auto& t : corpus::d2_traces()) traces.push_back(std::move(t));
    for (const auto& t : traces) {
      Complex S = t.start;
      const int d = S.dim() / 2;
      for (const auto& m : t.trace) {
        const Complex next = apply_move(S, m);
        auto ctx = SkeletonMoveContext::from_move(S, m, d);
        S = next;
        if (!check_assumptions(ctx).ok) continue;
        ConingOracle oracle(ctx);
        const Simplex t0(ctx.T().vertices());
        // (context, ρ) instances
        for (int k = 0; k < 4; ++k) {
          const int i = static_cast<int>(uniform_index(rng, static_cast<std::size_t>(d)));
          const auto& faces = ctx.KL().faces(i);
          if (faces.empty()) continue;
          const Simplex rho = faces[uniform_index(rng, faces.size())];
          try {
            const Chain2 c = oracle.cone(rho);
            Chain2 rhs(i, {rho});
            for (Vertex u : rho) rhs += oracle.cone(rho.without(u));
            if (rho.contains(ctx.v0())) rhs = Chain2(i);
            const bool identity = boundary(c) == rhs;
            const bool support = t0.intersect(c.support()).minus(rho).empty();
            const bool inside = std::all_of(c.begin(), c.end(),
                                            [&](const Simplex& s) { return ctx.KL().contains(s); });
            if (identity && support && inside) {
              ++rho_ok;
            } else {
              ++rho_bad;
              if (first.empty()) first = t.name + " ρ=" + rho.str();
            }
          } catch (const Error& e) {
            ++rho_bad;
            if (first.empty()) first = t.name + " ρ=" + rho.str() + ": " + e.what();
          }
        }
        // cycles ϑ = ∂(random chain)
        for (int k = 0; k < 3; ++k) {
          const int i = static_cast<int>(uniform_index(rng, static_cast<std::size_t>(d)));
          const auto& up = ctx.KL().faces(i + 1);
          if (up.empty()) continue;
          Chain2 c(i + 1);
          for (const auto& s : up)
            if (uniform_index(rng, 3) == 0) c.toggle(s);
          const Chain2 theta = boundary(c);
          if (theta.empty()) continue;
          try {
            if (boundary(oracle.cone_chain(theta)) == theta) {
              ++cyc_ok;
            } else {
              ++cyc_bad;
              if (first.empty()) first = t.name + " cycle " + theta.str();
            }
          } catch (const Error& e) {
            ++cyc_bad;
            if (first.empty()) first = t.name + ": " + e.what();
          }
        }
      }
    }
    r.passed = rho_bad == 0 && cyc_bad == 0 && rho_ok >= 100 && cyc_ok >= 100;
    r.detail = "(context, ρ) instances " + std::to_string(rho_ok) + " ok / " +
               std::to_string(rho_bad) + " bad; cycles " + std::to_string(cyc_ok) + " ok / " +
               std::to_string(cyc_bad) + " bad (need ≥ 100 each)";
    if (!first.empty()) r.detail += "; first failure: " + first;
  }

  void c7(CriterionResult& r) {
    r.title = "surgery internal claims";
    TransportDiagnostics total, only_d2;
    total.identity = true;
    std::size_t violations = 0;
    std::string first;
    for (const TraceRuns* tr : {&d1(), &d2()})
      for (const auto& run : tr->runs) {
        if (run.report) {
          total += run.report->diagnostics;
          if (tr == &d2()) only_d2 += run.report->diagnostics;
        } else {
          ++violations;
          if (first.empty()) first = run.where + ": " + run.error;
        }
      }
    const bool exercised = total.gamma_checked > 0 && total.gamma_nonzero > 0 &&
                           total.zeta_checked > 0 && total.problematic_patched > 0 &&
                           only_d2.gamma_nonzero > 0 && only_d2.zeta_checked > 0;
    r.passed = violations == 0 && exercised;
    std::ostringstream os;
    os << "violations=" << violations << " γ checked=" << total.gamma_checked
       << " (nonzero " << total.gamma_nonzero << ", τ∈T " << total.gamma_in_T_checked
       << ") ζ checked=" << total.zeta_checked << " problematic patched="
       << total.problematic_patched << " cells removed/added=" << total.removed_cells << "/"
       << total.added_cells << "; d=2 share: γ nonzero " << only_d2.gamma_nonzero << ", ζ "
       << only_d2.zeta_checked << ", patched " << only_d2.problematic_patched;
    if (!first.empty()) os << "; first violation: " << first;
    r.detail = os.str();
  }

  static std::optional<std::pair<Simplex, Simplex>> odd_pair(const Complex& s, int d) {
    for (int k = 0; k <= 5; ++k) {
      try {
        return find_odd_pair(s, moment_schedule(s, d, k));
      } catch (const DegeneratePosition&) {
      }
    }
    return std::nullopt;
  }

  void c8(CriterionResult& r) {
    r.title = "odd intersection pair on d-spheres";
    std::size_t ok = 0, total = 0;
    std::string first;
    for (int d = 1; d <= 2; ++d) {
      std::vector<Complex> spheres{boundary_simplex(d)};
      for (std::uint64_t seed = 1; seed <= 10; ++seed)
        spheres.push_back(random_walk(boundary_simplex(d), 1 + static_cast<int>(seed % 4),
                                      seed + 80).result);
      for (const auto& s : spheres) {
        ++total;
        try {
          if (odd_pair(s, d)) {
            ++ok;
            continue;
          }
          if (first.empty()) first = "degenerate on " + s.str();
        } catch (const Error& e) {
          if (first.empty()) first = e.what();
        }
      }
    }
    const Complex tet = boundary_simplex(2);
    const Simplex F{0, 1, 2};
    const auto g = schlegel_map(corpus_vertices(4), F);
    const auto [a, b] = find_odd_pair(tet, g);
    const bool facet_vertex = (a == F && b == Simplex{3}) || (b == F && a == Simplex{3});
    const int count = intersection_number(g, F, Simplex{3});
    r.passed = ok == total && total >= 22 && facet_vertex && count == 1;
    r.detail = std::to_string(ok) + "/" + std::to_string(total) +
               " spheres with an odd pair; Schlegel pair " + a.str() + "," + b.str() +
               " count=" + std::to_string(count);
    if (!first.empty()) r.detail += "; first failure: " + first;
  }

  void c9(CriterionResult& r) {
    r.title = "homology engine";
    bool spheres_ok = true;
    for (int n = 1; n <= 6; ++n) {
      const auto b = betti_gf2(Complex::boundary_of(corpus_vertices(n + 1)));
      for (int i = -1; i <= n - 1; ++i)
        spheres_ok = spheres_ok && b.at(i) == (i == n - 1 ? 1 : 0);
    }
    std::vector<Complex> all{corpus::rp2(), skeleton(Complex::full_simplex(corpus_vertices(7)), 2)};
    for (const TraceRuns* tr : {&d1(), &d2()})
      for (const auto& run : tr->runs) all.push_back(run.K);
    for (const auto& t : corpus::d2_traces()) all.push_back(replay(t.start, t.trace));
    std::size_t dd_ok = 0;
    for (const auto& c : all) {
      bool zero = true;
      for (int k = 1; k <= c.dim(); ++k)
        zero = zero && boundary_matrix_gf2(c, k - 1)
                           .matrix.multiply(boundary_matrix_gf2(c, k).matrix)
                           .is_zero();
      dd_ok += zero ? 1 : 0;
    }
    const auto h = betti_int(corpus::rp2());
    const bool torsion = h.torsion_at(1).size() == 1 && h.torsion_at(1)[0] == 2 &&
                         h.free_rank(1) == 0 && h.free_rank(2) == 0;
    r.passed = spheres_ok && dd_ok == all.size() && torsion;
    r.detail = std::string("sphere Betti ") + (spheres_ok ? "ok" : "wrong") + "; ∂∂=0 on " +
               std::to_string(dd_ok) + "/" + std::to_string(all.size()) +
               " complexes; RP² H1 torsion " + (torsion ? "Z/2" : "missing");
  }

  void c10(CriterionResult& r) {
    r.title = "Dancis reconstruction";
    const Complex b5 = boundary_simplex(4);
    const Complex sub = stellar_subdivide(b5, Simplex{0, 1, 2});
    const Complex b3 = boundary_simplex(2);
    struct Case {
      const char* name;
      Complex s;
      int d;
    };
    std::vector<Case> cases{{"∂Δ^5", b5, 2}, {"stellar", sub, 2}, {"∂Δ^3", b3, 1}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
      const auto t0 = Clock::now();
      const auto rec = reconstruct(skeleton(c.s, c.d), c.d);
      const double secs = since(t0);
      const bool good = rec.complex == c.s && rec.pure && secs < 300.0;
      ok = ok && good;
      os << c.name << (good ? " recovered" : " NOT recovered") << " (" << secs << "s) ";
    }
    r.passed = ok;
    r.detail = os.str();
  }

  void c11(CriterionResult& r) {
    r.title = "Dehn-Sommerville and Euler along walks";
    std::vector<NamedTrace> traces = corpus::d1_walks();
    for (auto& t : corpus::d2_traces()) traces.push_back(std::move(t));
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
      traces.push_back({"d1-sphere-" + std::to_string(seed), boundary_simplex(1),
                        random_walk(boundary_simplex(1), 1 + static_cast<int>(seed % 4), seed + 80)
                            .trace});
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (const auto& t : traces) {
      Complex S = t.start;
      for (std::size_t i = 0; i <= t.trace.size(); ++i) {
        if (i > 0) S = apply_move(S, t.trace[i - 1]);
        const int D = S.dim();
        const auto h = h_vector(S, D + 1);
        bool ok = euler_characteristic(S) == (D % 2 == 0 ? 2 : 0);
        for (int j = 0; j <= D + 1; ++j)
          ok = ok && h[static_cast<std::size_t>(j)] == h[static_cast<std::size_t>(D + 1 - j)];
        ++checked;
        if (!ok) {
          ++bad;
          if (first.empty()) first = t.name + " after " + std::to_string(i) + " moves";
        }
      }
    }
    r.passed = bad == 0 && checked > 0;
    r.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) + " complexes";
    if (!first.empty()) r.detail += "; first failure: " + first;
  }

  void c12(CriterionResult& r) {
    r.title = "class independence across moment schedules";
    struct Item {
      Complex c;
      int r;
    };
    std::vector<Item> items;
    items.push_back({skeleton(Complex::full_simplex(corpus_vertices(5)), 1), 2});
    items.push_back({skeleton(Complex::full_simplex(corpus_vertices(7)), 2), 4});
    for (const auto& g : graphs()) items.push_back({g, 2});
    for (const TraceRuns* tr : {&d1(), &d2()})
      for (const auto& run : tr->runs) items.push_back({run.K, run.r});
    std::size_t same = 0;
    std::string first;
    for (const auto& it : items) {
      DeletedProduct dp(it.c);
      const bool v0 = obstruction(dp, it.r, 0).vanishes;
      const bool v1 = obstruction(dp, it.r, 1).vanishes;
      const bool v2 = obstruction(dp, it.r, 2).vanishes;
      if (v0 == v1 && v1 == v2)
        ++same;
      else if (first.empty())
        first = it.c.str();
    }
    r.passed = same == items.size();
    r.detail = std::to_string(same) + "/" + std::to_string(items.size()) +
               " complexes decided identically by schedules 0, 1, 2";
    if (!first.empty()) r.detail += "; first disagreement: " + first;
  }

  static Simplex corpus_vertices(int n) { return first_vertices(n); }

  std::optional<TraceRuns> d1_, d2_;
  std::vector<Complex> graphs_;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<int> ids = opts.only;
  if (ids.empty())
    for (int i = 1; i <= 12; ++i) ids.push_back(i);
  Suite suite;
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(suite.run(id));
    if (opts.on_result) opts.on_result(out.back());
  }
  return out;
}

}  // namespace vk
