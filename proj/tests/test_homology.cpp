#include "catch_amalgamated.hpp"

#include "vk/acceptance.hpp"
#include "vk/homology.hpp"
#include "vk/pachner.hpp"

using namespace vk;

TEST_CASE("reduced Betti numbers of spheres and a point") {
  for (int D = 1; D <= 4; ++D) {
    const auto b = betti_gf2(boundary_simplex(D));
    for (int i = -1; i <= D; ++i) CHECK(b.at(i) == (i == D ? 1 : 0));
  }
  CHECK(betti_gf2(Complex(std::vector<Simplex>{Simplex{0}})).at(0) == 0);
  CHECK(betti_gf2(Complex(std::vector<Simplex>{Simplex{0}}), false).at(0) == 1);
}

TEST_CASE("{∅} has reduced homology in degree -1") {
  CHECK(betti_gf2(Complex({Simplex()})).at(-1) == 1);
  CHECK(betti_int(Complex({Simplex()})).free_rank(-1) == 1);
}

TEST_CASE("two points and a circle") {
  const auto b = betti_gf2(Complex({{0}, {1}}));
  CHECK(b.at(0) == 1);
  const auto c = betti_int(Complex({{0, 1}, {1, 2}, {0, 2}}));
  CHECK(c.free_rank(1) == 1);
  CHECK(c.vanishes(0));
  CHECK_FALSE(c.vanishes(1));
}

TEST_CASE("projective plane: Z/2 torsion in H1") {
  const Complex rp2 = corpus::rp2();
  CHECK(f_vector(rp2) == std::vector<long long>{1, 6, 15, 10});
  const auto h = betti_int(rp2);
  CHECK(h.free_rank(1) == 0);
  REQUIRE(h.torsion_at(1).size() == 1);
  CHECK(h.torsion_at(1)[0] == 2);
  CHECK(h.free_rank(2) == 0);
  CHECK_FALSE(h.vanishes(1));
  const auto b = betti_gf2(rp2);
  CHECK(b.at(1) == 1);
  CHECK(b.at(2) == 1);
}

TEST_CASE("∂∂ = 0 on random spheres") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Complex s = random_walk(boundary_simplex(3), 4, seed).result;
    for (int k = 1; k <= s.dim(); ++k) {
      const auto hi = boundary_matrix_gf2(s, k);
      const auto lo = boundary_matrix_gf2(s, k - 1);
      CHECK(lo.matrix.multiply(hi.matrix).is_zero());
    }
  }
}

TEST_CASE("chain boundary and solving for a filling") {
  CHECK(boundary(Chain2(0, {{3}})) == Chain2(-1, {Simplex()}));
  const Chain2 tri(1, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(boundary(tri).empty());
  const Complex disk = Complex::full_simplex({0, 1, 2});
  CHECK(is_cycle(tri, disk));
  const auto fill = solve_boundary(disk, tri);
  REQUIRE(fill);
  CHECK(*fill == Chain2(2, {{0, 1, 2}}));
  CHECK_FALSE(solve_boundary(Complex::boundary_of({0, 1, 2}), tri));
  CHECK_THROWS_WITH(is_cycle(tri, Complex({{0, 1}})),
                    Catch::Matchers::ContainsSubstring("chain not supported"));
}

TEST_CASE("integral boundary signs") {
  const auto m = boundary_matrix_int(Complex::full_simplex({0, 1, 2}), 2);
  REQUIRE(m.codomain_cells.size() == 3);
  // ∂[0,1,2] = [1,2] - [0,2] + [0,1]
  CHECK(m.matrix(0, 0) == 1);
  CHECK(m.matrix(1, 0) == -1);
  CHECK(m.matrix(2, 0) == 1);
}
