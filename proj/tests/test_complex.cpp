#include "catch_amalgamated.hpp"

#include "vk/complex.hpp"
#include "vk/pachner.hpp"

using namespace vk;

TEST_CASE("simplex normalises and rejects bad labels") {
  Simplex s({3, 1, 2});
  CHECK(s.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(s.dim() == 2);
  CHECK(Simplex().dim() == -1);
  CHECK_THROWS_AS(Simplex({1, 1}), Error);
  CHECK_THROWS_AS(Simplex({-1, 2}), Error);
}

TEST_CASE("simplex set operations") {
  Simplex a{0, 1, 2}, b{2, 3};
  CHECK(a.contains(Simplex{0, 2}));
  CHECK_FALSE(a.contains(b));
  CHECK_FALSE(a.disjoint(b));
  CHECK(a.unite(b) == Simplex{0, 1, 2, 3});
  CHECK(a.minus(b) == Simplex{0, 1});
  CHECK(a.intersect(b) == Simplex{2});
  CHECK(a.facets() == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(Simplex{4}.facets() == std::vector<Simplex>{Simplex()});
  CHECK(Simplex().facets().empty());
  CHECK(a.faces_of_dim(0).size() == 3);
}

TEST_CASE("empty complex and the complex {∅} differ") {
  Complex e;
  Complex v({Simplex()});
  CHECK(e.empty());
  CHECK_FALSE(v.empty());
  CHECK(e.dim() == -1);
  CHECK(v.dim() == -1);
  CHECK(v.contains(Simplex()));
  CHECK_FALSE(e.contains(Simplex()));
  CHECK(f_vector(e).empty());
  CHECK(f_vector(v) == std::vector<long long>{1});
}

TEST_CASE("non-maximal generators are dropped") {
  Complex c({{0, 1, 2}, {0, 1}, {3}});
  CHECK(c.facets() == std::vector<Simplex>{{0, 1, 2}, {3}});
  CHECK_FALSE(c.is_pure());
  CHECK(c.num_faces(0) == 4);
  CHECK(c.num_faces(-1) == 1);
}

TEST_CASE("star, link, join") {
  const Complex s = boundary_simplex(2);  // ∂Δ^3
  CHECK(link(s, {0}) == Complex::boundary_of({1, 2, 3}));
  CHECK(link(s, {0, 1}) == Complex({{2}, {3}}));
  CHECK(link(s, {7}).empty());
  CHECK(star(s, {0}).facets().size() == 3);
  const Complex j = join(Complex({{0}, {1}}), Complex({{2}, {3}}));
  CHECK(j.num_faces(1) == 4);
  CHECK_THROWS_WITH(join(s, s), Catch::Matchers::ContainsSubstring("non-disjoint join"));
}

TEST_CASE("missing faces of small examples") {
  const Complex square({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(missing_faces(square, 1) == std::vector<Simplex>{{0, 2}, {1, 3}});
  CHECK(missing_faces(Complex::boundary_of({0, 1, 2}), 2) == std::vector<Simplex>{{0, 1, 2}});
  CHECK(missing_faces(Complex::full_simplex({0, 1, 2}), 1).empty());
}

TEST_CASE("f-vector, h-vector and Euler characteristic") {
  const Complex bd = boundary_simplex(2);
  CHECK(f_vector(bd) == std::vector<long long>{1, 4, 6, 4});
  CHECK(euler_characteristic(bd) == 2);
  CHECK(h_vector(bd, 3) == std::vector<long long>{1, 1, 1, 1});
  const Complex sub = stellar_subdivide(bd, {0, 1});
  CHECK(f_vector(sub) == std::vector<long long>{1, 5, 9, 6});
  CHECK(h_vector(sub, 3) == std::vector<long long>{1, 2, 2, 1});
  CHECK_THROWS(h_vector(Complex({{0, 1}, {2}}), 2));
}

TEST_CASE("induced subcomplexes and full skeleta") {
  const Complex c = skeleton(Complex::full_simplex(first_vertices(5)), 1);
  CHECK(c.num_faces(1) == 10);
  CHECK(has_full_skeleton(c, first_vertices(5), 1));
  CHECK_FALSE(has_full_skeleton(c, first_vertices(5), 2));
  CHECK(induced(c, {0, 1, 2}).num_faces(1) == 3);
  CHECK(delete_vertices(c, {0}).vertices() == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(add_face(c, {0, 1, 2}).num_faces(2) == 1);
  CHECK(intersection_of(c, Complex({{0, 1, 9}})).facets() ==
        std::vector<Simplex>{{0, 1}});
}

TEST_CASE("chains over GF(2) cancel") {
  Chain2 z(1, {{0, 1}, {1, 2}});
  z.toggle({0, 1});
  CHECK(z == Chain2(1, {{1, 2}}));
  z += Chain2(1, {{1, 2}});
  CHECK(z.empty());
  CHECK_THROWS(z.toggle({0}));
  CHECK(Chain2(1, {{0, 1}, {3, 4}}).support() == Simplex{0, 1, 3, 4});
}
