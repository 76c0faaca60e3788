#include "catch_amalgamated.hpp"

#include "vk/acceptance.hpp"
#include "vk/dancis.hpp"
#include "vk/pachner.hpp"

using namespace vk;

TEST_CASE("spheres are recovered from their d-skeleta") {
  for (const Complex& s : {boundary_simplex(2), corpus::octahedron(), cyclic_sphere(7, 2),
                           stellar_subdivide(boundary_simplex(2), {0, 1}),
                           random_walk(boundary_simplex(2), 6, 2).result}) {
    const auto r = reconstruct(skeleton(s, 1), 1);
    CHECK(r.pure);
    CHECK(r.complex == s);
  }
  const Complex s4 = boundary_simplex(4);
  CHECK(reconstruct(skeleton(s4, 2), 2).complex == s4);
  const Complex sub = stellar_subdivide(s4, {0, 1, 2});
  const auto r = reconstruct(skeleton(sub, 2), 2);
  CHECK(r.complex == sub);
  CHECK(r.accepted.size() == 2);
}

TEST_CASE("a square is not rebuilt into a sphere") {
  const auto r = reconstruct(Complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 1);
  CHECK_FALSE(r.pure);
  CHECK_THROWS(reconstruct(Complex({{0, 1}}), 0));
}

TEST_CASE("boundary of a ball") {
  const Complex disk({{0, 1, 2}, {0, 2, 3}});
  CHECK(boundary_complex(disk) == Complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(boundary_complex(boundary_simplex(2)).empty());
  CHECK(boundary_complex(Complex({{0, 1}})) == Complex({{0}, {1}}));
}

TEST_CASE("gluing an edge across the octahedron breaks the Euler bound") {
  const Complex S = corpus::octahedron();
  const auto rep = non_skeleton_check(S, 1, {0, 1}, Complex({{10, 11}}), {{10, 0}, {11, 1}});
  CHECK(rep.admissible);
  CHECK(rep.new_faces == std::vector<Simplex>{{0, 1}});
  CHECK(rep.glued.num_faces(1) == 13);
  CHECK(rep.euler_bound_violated);
  CHECK_FALSE(rep.reproduces_input);
  CHECK(rep.verdict == "glued complex is not the skeleton of a 2d-sphere");
}

TEST_CASE("no admissible instance on the tetrahedron") {
  // every pair of vertices spans an edge, so S[{0,1}] is never ∂B for a path B
  const auto rep = non_skeleton_check(boundary_simplex(2), 1, {0, 1},
                                      Complex({{10, 11}, {11, 12}}), {{10, 0}, {12, 1}});
  CHECK_FALSE(rep.admissible);
  CHECK(rep.new_faces == std::vector<Simplex>{{0, 4}, {1, 4}});
  CHECK(rep.verdict == "no admissible instance");
}

TEST_CASE("gluing onto existing faces adds nothing") {
  const auto rep =
      non_skeleton_check(corpus::octahedron(), 1, {0, 2}, Complex({{10, 11}}), {{10, 0}, {11, 2}});
  CHECK(rep.new_faces.empty());
  CHECK(rep.verdict == "nothing new glued");
  CHECK(rep.reproduces_input);
}

TEST_CASE("gluing maps are validated") {
  const Complex S = corpus::octahedron();
  CHECK_THROWS(non_skeleton_check(S, 1, {0, 1}, Complex({{10, 11}}), {{10, 0}}));
  CHECK_THROWS(non_skeleton_check(S, 1, {0, 1}, Complex({{10, 11}}), {{10, 0}, {11, 0}}));
  CHECK_THROWS(non_skeleton_check(S, 1, {0, 1}, Complex({{10, 11, 12}}), {}));
  CHECK_THROWS(non_skeleton_check(S, 1, {0, 9}, Complex({{10, 11}}), {{10, 0}, {11, 9}}));
}
