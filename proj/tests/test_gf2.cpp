#include "catch_amalgamated.hpp"

#include "vk/combinatorics.hpp"
#include "vk/gf2.hpp"
#include "vk/rng.hpp"

using namespace vk;

namespace {

Gf2Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  Rng rng(seed);
  Gf2Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, uniform_index(rng, 2) == 1);
  return m;
}

}  // namespace

TEST_CASE("bit vectors across word boundaries") {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.find_next(1) == 64);
  CHECK(v.find_next(130) == 130);
  CHECK(v.ones() == std::vector<std::size_t>{0, 64, 129});
  BitVector w(130);
  w.set(64);
  w.set(129);
  CHECK_FALSE(v.dot(w));
  v ^= w;
  CHECK(v.ones() == std::vector<std::size_t>{0});
}

TEST_CASE("rank of known matrices") {
  CHECK(rank(Gf2Matrix::identity(70)) == 70);
  CHECK(rank(Gf2Matrix(5, 9)) == 0);
  Gf2Matrix m(3, 3);  // rows 110, 011, 101 sum to zero
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(1, 2);
  m.set(2, 0);
  m.set(2, 2);
  CHECK(rank(m) == 2);
  CHECK(kernel_basis(m).size() == 1);
  CHECK(kernel_basis(m)[0].count() == 3);
}

TEST_CASE("solve: consistent, inconsistent, free variables zero") {
  Gf2Matrix m(2, 3);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(1, 2);
  BitVector b(2);
  b.set(0);
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m.multiply(*x) == b);
  CHECK_FALSE(x->get(2));

  Gf2Matrix z(1, 2);
  BitVector one(1);
  one.set(0);
  CHECK_FALSE(solve(z, one));
}

TEST_CASE("random matrices: rank-nullity and kernel vectors") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto m = random_matrix(1 + seed % 17, 1 + (seed * 7) % 90, seed);
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == m.cols());
    for (const auto& k : ker) CHECK_FALSE(m.multiply(k).any());
    CHECK(rank(m) == rank(m.transpose()));
    BitVector x(m.cols());
    for (std::size_t j = 0; j < m.cols(); j += 3) x.set(j);
    const auto b = m.multiply(x);
    auto y = solve(m, b);
    REQUIRE(y);
    CHECK(m.multiply(*y) == b);
  }
}

TEST_CASE("matrix product and transpose") {
  const auto a = random_matrix(6, 9, 5);
  const auto b = random_matrix(9, 4, 6);
  const auto ab = a.multiply(b);
  CHECK(ab.transpose().is_zero() == ab.is_zero());
  const auto btat = b.transpose().multiply(a.transpose());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(ab.get(i, j) == btat.get(j, i));
}

TEST_CASE("Smith normal form") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(1, 0) = 6;
  m(1, 1) = 8;
  const auto f = smith_normal_form(m);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 2);
  CHECK(f[1] == 4);

  IntMatrix big(1, 1);
  big(0, 0) = BigInt("-123456789012345678901234567890");
  CHECK(smith_normal_form(big)[0] == BigInt("123456789012345678901234567890"));
  CHECK(smith_normal_form(IntMatrix(3, 3)).empty());
}

TEST_CASE("subset enumeration and binomials") {
  std::size_t n = 0;
  for_each_subset(std::vector<int>{0, 1, 2, 3, 4}, 2, [&](const std::vector<int>&) { ++n; });
  CHECK(n == 10);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("seeded index draws are reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(uniform_index(a, 13) == uniform_index(b, 13));
  Rng c(1);
  for (int i = 0; i < 200; ++i) CHECK(uniform_index(c, 7) < 7);
}
