#include "catch_amalgamated.hpp"

#include "vk/geometry.hpp"
#include "vk/pachner.hpp"

using namespace vk;

TEST_CASE("moment map coordinates") {
  const Complex c = Complex::full_simplex({0, 1, 2});
  const auto g = moment_map(c, 3);
  CHECK(g.r == 3);
  CHECK(g.at(2) == Point{3, 9, 27});
  const auto h = moment_map(c, 2, {5, -1, 2});
  CHECK(h.at(1) == Point{-1, 1});
  CHECK_THROWS(moment_map(c, 2, {1, 1, 2}));
  CHECK_THROWS(moment_map(c, 2, {1, 2}));
}

TEST_CASE("chords of a convex curve cross iff interleaved") {
  const auto g = moment_map(Complex::full_simplex({0, 1, 2, 3}), 2);
  CHECK(intersection_number(g, {0, 2}, {1, 3}) == 1);
  CHECK(intersection_number(g, {0, 1}, {2, 3}) == 0);
  CHECK(intersection_number(g, {0, 3}, {1, 2}) == 0);
}

TEST_CASE("point against segment on the line") {
  const auto g = moment_map(Complex::full_simplex({0, 1, 2}), 1);
  CHECK(intersection_number(g, {1}, {0, 2}) == 1);
  CHECK(intersection_number(g, {0}, {1, 2}) == 0);
  GeomMap bad{1, {{0, {0}}, {1, {1}}, {2, {1}}}};
  CHECK_THROWS_AS(intersection_number(bad, {2}, {0, 1}), DegeneratePosition);
}

TEST_CASE("rational positions stay exact") {
  GeomMap g{2,
            {{0, {Rational(0), Rational(0)}},
             {1, {Rational(1, 3), Rational(1, 3)}},
             {2, {Rational(0), Rational(1, 7)}},
             {3, {Rational(1, 5), Rational(0)}}}};
  CHECK(intersection_number(g, {0, 1}, {2, 3}) == 1);
}

TEST_CASE("general position of moment maps") {
  const Complex k5 = skeleton(Complex::full_simplex(first_vertices(5)), 1);
  CHECK(general_position(moment_map(k5, 3), k5));
  GeomMap flat{2, {{0, {0, 0}}, {1, {1, 1}}, {2, {2, 2}}}};
  CHECK_FALSE(affinely_independent(flat, {0, 1, 2}));
  CHECK(affinely_independent(moment_map(k5, 3), {0, 1, 2, 3}));
}

TEST_CASE("moment schedules are deterministic and distinct") {
  const Complex c = Complex::full_simplex(first_vertices(6));
  const auto a = moment_schedule(c, 3, 2);
  const auto b = moment_schedule(c, 3, 2);
  CHECK(a.coords == b.coords);
  CHECK(moment_schedule(c, 3, 0).coords == moment_map(c, 3).coords);
  CHECK(moment_schedule(c, 3, 1).coords != moment_map(c, 3).coords);
}

TEST_CASE("odd pairs on spheres") {
  for (int D = 1; D <= 3; ++D) {
    const Complex s = boundary_simplex(D);
    const auto [a, b] = find_odd_pair(s, moment_map(s, D));
    CHECK(a.disjoint(b));
    CHECK(a.dim() + b.dim() == D);
  }
  const Complex disk = Complex::full_simplex({0, 1, 2});
  CHECK_THROWS_WITH(find_odd_pair(Complex({{0, 1}, {1, 2}}), moment_map(disk, 1)),
                    Catch::Matchers::ContainsSubstring("sphere hypothesis violated"));
}

TEST_CASE("Schlegel map: interior vertex hits the opposite facet once") {
  const auto g = schlegel_map({0, 1, 2, 3}, {0, 1, 2});
  CHECK(g.r == 2);
  CHECK(intersection_number(g, {3}, {0, 1, 2}) == 1);
  CHECK(intersection_number(g, {0}, {1, 2, 3}) == 0);
}
