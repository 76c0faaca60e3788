#include "catch_amalgamated.hpp"

#include "vk/homology.hpp"
#include "vk/pachner.hpp"

using namespace vk;

namespace {

bool is_homology_sphere(const Complex& c, int D) {
  const auto b = betti_gf2(c);
  for (int i = -1; i <= D; ++i)
    if (b.at(i) != (i == D ? 1 : 0)) return false;
  return c.is_pure() && c.dim() == D;
}

}  // namespace

TEST_CASE("moves on the tetrahedron boundary") {
  const Complex s = boundary_simplex(2);
  const auto moves = applicable_moves(s);
  REQUIRE(moves.size() == 4);
  for (const auto& m : moves) {
    CHECK(m.p() == 2);
    CHECK(m.tau == Simplex{4});
  }
  CHECK(move_obstacle(s, {{0, 1}, {2, 3}}) != "");
  CHECK(move_obstacle(s, {{0}, {1, 2, 3}}) != "");
  CHECK(move_obstacle(s, {{0, 1, 2}, {4}}) == "");
  CHECK_THROWS(apply_move(s, {{0, 1}, {2, 3}}));
}

TEST_CASE("move descriptors") {
  const MoveDescriptor m{{0, 1}, {2, 3}};
  CHECK(m.p() == 1);
  CHECK(m.q() == 1);
  CHECK(m.inverse() == MoveDescriptor{{2, 3}, {0, 1}});
  CHECK(m.str().find("(1,1)") != std::string::npos);
}

TEST_CASE("a move followed by its inverse is the identity") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Complex s = random_walk(boundary_simplex(seed % 2 ? 2 : 3), 4, seed).result;
    for (const auto& m : applicable_moves(s)) {
      const Complex t = apply_move(s, m);
      CHECK(move_obstacle(t, m.inverse()) == "");
      CHECK(apply_move(t, m.inverse()) == s);
    }
  }
}

TEST_CASE("walks are seeded, replayable and stay spheres") {
  const Complex s = boundary_simplex(2);
  const auto a = random_walk(s, 10, 7);
  const auto b = random_walk(s, 10, 7);
  CHECK(a.trace == b.trace);
  CHECK(a.result == b.result);
  CHECK(replay(s, a.trace) == a.result);
  CHECK(is_homology_sphere(a.result, 2));
  CHECK(random_walk(s, 10, 8).trace != a.trace);
  const auto w4 = random_walk(boundary_simplex(4), 6, 3);
  CHECK(is_homology_sphere(w4.result, 4));
}

TEST_CASE("stellar subdivision as a sequence of moves") {
  const Complex s2 = boundary_simplex(2);
  const Complex sub = stellar_subdivide(s2, {0, 1});
  CHECK(f_vector(sub) == std::vector<long long>{1, 5, 9, 6});
  const auto moves = stellar_as_moves(s2, {0, 1});
  REQUIRE(moves.size() == 2);
  CHECK(moves[0] == MoveDescriptor{{0, 1, 2}, {4}});
  CHECK(moves[1] == MoveDescriptor{{0, 1}, {3, 4}});
  CHECK(replay(s2, moves) == sub);

  CHECK(stellar_as_moves(s2, {0, 1, 2}).size() == 1);
  CHECK(stellar_as_moves(s2, {0}).empty());
  CHECK(stellar_subdivide(s2, {0}) == s2);

  const Complex s4 = boundary_simplex(4);
  const auto m4 = stellar_as_moves(s4, {0, 1, 2});
  CHECK(m4.size() == 3);
  CHECK(replay(s4, m4) == stellar_subdivide(s4, {0, 1, 2}));
}

TEST_CASE("cyclic polytope boundaries") {
  const Complex c = cyclic_sphere(6, 2);
  CHECK(f_vector(c) == std::vector<long long>{1, 6, 12, 8});
  CHECK(is_homology_sphere(c, 2));
  CHECK(is_homology_sphere(cyclic_sphere(8, 3), 3));
  CHECK(is_homology_sphere(cyclic_sphere(8, 4), 4));
  CHECK(cyclic_sphere(5, 3) == boundary_simplex(3));
  // neighbourly: every pair of vertices of C(8,4) spans an edge
  CHECK(has_full_skeleton(cyclic_sphere(8, 4), first_vertices(8), 1));
}

TEST_CASE("Dehn-Sommerville along a walk") {
  Complex s = boundary_simplex(3);
  const auto w = random_walk(s, 12, 11);
  for (const auto& m : w.trace) {
    s = apply_move(s, m);
    const auto h = h_vector(s, 4);
    for (int i = 0; i <= 4; ++i) CHECK(h[i] == h[4 - i]);
    CHECK(euler_characteristic(s) == 0);
  }
}
