#include "catch_amalgamated.hpp"

#include "vk/acceptance.hpp"
#include "vk/homology.hpp"
#include "vk/obstruction.hpp"
#include "vk/surgery.hpp"

using namespace vk;

namespace {

// Triangle on {0,1,2} with the (2,0) move towards the fresh vertex 4 (d = 1).
Complex triangle() { return skeleton(Complex::full_simplex({0, 1, 2}), 1); }
Complex triangle_replaced() {
  return Complex({{0, 1}, {0, 2}, {1, 2}, {0, 4}, {1, 4}, {2, 4}});
}

}  // namespace

TEST_CASE("context of a (2,0) move on the tetrahedron") {
  const auto ctx = SkeletonMoveContext::from_move(boundary_simplex(2), {{0, 1, 2}, {4}}, 1);
  CHECK(ctx.p() == 2);
  CHECK(ctx.q() == 0);
  CHECK(ctx.v0() == 3);
  CHECK(ctx.T() == triangle());
  CHECK(ctx.Tprime() == triangle_replaced());
  CHECK(ctx.shared_vertices() == Simplex{0, 1, 2});
  const auto rep = check_assumptions(ctx);
  CHECK(rep.ok);
  CHECK(rep.rho_checked == 7);  // ∅, three vertices, three edges
}

TEST_CASE("structural hypotheses are enforced") {
  const Complex s = boundary_simplex(2);
  CHECK_THROWS(SkeletonMoveContext::from_move(s, {{0, 1, 2}, {4}}, 1, {}, 0));
  CHECK_THROWS(SkeletonMoveContext::from_move(s, {{0, 1, 2}, {4}}, 2));
  CHECK_THROWS(SkeletonMoveContext(skeleton(s, 1), skeleton(s, 1), {0, 1, 2}, {4}, 1));
  // T not induced: K has the triangle edges plus a 2-face on them
  CHECK_THROWS_WITH(
      SkeletonMoveContext(Complex({{0, 1, 2}}), triangle_replaced(), {0, 1, 2}, {4}, 1),
      Catch::Matchers::ContainsSubstring("induced"));
}

TEST_CASE("(II.a): no vertex outside the move") {
  const SkeletonMoveContext ctx(triangle(), triangle_replaced(), {0, 1, 2}, {4}, 1);
  CHECK(ctx.v0() == -1);
  const auto rep = check_assumptions(ctx);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violation.find("(II.a)") != std::string::npos);
  ConingOracle oracle(ctx);
  CHECK_THROWS(oracle.cone({0}));
}

TEST_CASE("(II.b): removing T_0 disconnects K") {
  const Complex K({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 5}});
  const Complex L = union_of(K, triangle_replaced());
  const SkeletonMoveContext ctx(K, L, {0, 1, 2}, {4}, 1);
  CHECK(ctx.v0() == 3);
  const auto rep = check_assumptions(ctx);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violation.find("(II.b) at ρ = ") == 0);
  CHECK(rep.violation.find("i = 0") != std::string::npos);
}

TEST_CASE("coning identities along walks") {
  std::size_t checked = 0;
  for (const auto& nt : corpus::d1_walks()) {
    Complex S = nt.start;
    for (const auto& m : nt.trace) {
      const auto ctx = SkeletonMoveContext::from_move(S, m, 1);
      S = apply_move(S, m);
      if (!check_assumptions(ctx).ok) continue;
      ConingOracle oracle(ctx);
      CHECK(oracle.cone(Simplex()) == Chain2(0, {{ctx.v0()}}));
      for (const auto& rho : ctx.KL().faces(0)) {
        const Chain2& c = oracle.cone(rho);
        // ∂(v0 • ρ) = ρ + v0 • ∂ρ, and v0 • ∂ρ = {v0} for a vertex
        if (rho == Simplex{ctx.v0()}) {
          CHECK(c.empty());
        } else {
          CHECK(boundary(c) == Chain2(0, {rho, {ctx.v0()}}));
          for (const auto& e : c) CHECK(ctx.KL().contains(e));
        }
        CHECK(oracle.cone_chain(Chain2(0, {rho})) == c);
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("fresh missing edge witness after a (2,0) move") {
  const Complex S = boundary_simplex(2);
  const MoveDescriptor m{{0, 1, 2}, {4}};
  const Simplex M{3, 4};
  REQUIRE(!apply_move(S, m).contains(M));
  const auto ctx = SkeletonMoveContext::from_move(S, m, 1, {M}, 3);
  const PairChain w = missing_face_witness(ctx, M);
  const Complex& KM = ctx.L();
  CHECK(KM.num_faces(1) == 10);
  CHECK(is_pair_cycle(w, DeletedProduct(KM)));
  CHECK(evaluate(KM, 2, w) == 1);
}

TEST_CASE("join chains") {
  const Chain2 a(0, {{0}, {1}});
  const Chain2 b(0, {{5}});
  CHECK(join_chain(a, b) == Chain2(1, {{0, 5}, {1, 5}}));
}

TEST_CASE("missing-face theorem on small traces") {
  const auto walks = corpus::d1_walks();
  for (std::size_t i = 0; i < 6; ++i) {
    const Complex S = replay(walks[i].start, walks[i].trace);
    for (const auto& M : missing_faces(S, 1)) {
      const auto rep = verify_missing_face_theorem(walks[i].start, walks[i].trace, M);
      CHECK(rep.witness_is_cycle);
      CHECK(rep.pairing == 1);
      CHECK_FALSE(rep.direct_vanishes);
      CHECK(rep.agrees);
      // steps run from the move that created M to the end of the trace
      REQUIRE_FALSE(rep.steps.empty());
      CHECK(rep.steps.size() <= walks[i].trace.size());
      CHECK(rep.steps.front() == "fresh");
    }
  }
  CHECK_THROWS(verify_missing_face_theorem(boundary_simplex(2), {}, {0, 1}));
}

TEST_CASE("d = 2 transport carries a witness through non-trivial surgery") {
  TransportDiagnostics total;
  std::size_t theorems = 0;
  for (const auto& nt : corpus::d2_traces()) {
    if (nt.name.rfind("d2-long-", 0) != 0) continue;
    const Complex S = replay(nt.start, nt.trace);
    for (const auto& M : missing_faces(S, 2)) {
      const auto rep = verify_missing_face_theorem(nt.start, nt.trace, M);
      CHECK(rep.agrees);
      CHECK(rep.pairing == 1);
      total += rep.diagnostics;
      ++theorems;
    }
  }
  CHECK(theorems > 0);
  CHECK(total.gamma_nonzero > 0);
  CHECK(total.zeta_checked > 0);
  CHECK(total.problematic_patched > 0);
}

TEST_CASE("transport refuses non-cycles") {
  const auto ctx = SkeletonMoveContext::from_move(boundary_simplex(2), {{0, 1, 2}, {4}}, 1);
  PairChain w(2);
  w.toggle(PairCell({0, 1}, {2, 3}));
  CHECK_THROWS(transport_witness(ctx, w));
}
