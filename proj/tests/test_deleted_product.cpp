#include "catch_amalgamated.hpp"

#include "vk/deleted_product.hpp"
#include "vk/pachner.hpp"

using namespace vk;

namespace {

Complex k5() { return skeleton(Complex::full_simplex(first_vertices(5)), 1); }

}  // namespace

TEST_CASE("pair cells are unordered and need disjoint members") {
  const PairCell x({2, 3}, {0, 1});
  CHECK(x.first() == Simplex{0, 1});
  CHECK(x == PairCell({0, 1}, {2, 3}));
  CHECK(x.partner({0, 1}) == Simplex{2, 3});
  CHECK(x.dim() == 2);
  CHECK_THROWS(PairCell({0, 1}, {1, 2}));
  CHECK_THROWS(PairCell({0}, Simplex()));
}

TEST_CASE("cell counts of the deleted product of K5") {
  const DeletedProduct dp(k5());
  CHECK(dp.top_dim() == 2);
  CHECK(dp.cells(0).size() == 10);
  CHECK(dp.cells(1).size() == 30);
  CHECK(dp.cells(2).size() == 15);
  CHECK(dp.cells(3).empty());
  CHECK(dp.num_cells() == 55);
  CHECK(count_deleted_product_cells(k5()) == 55);
  CHECK(count_deleted_product_cells(boundary_simplex(3)) ==
        DeletedProduct(boundary_simplex(3)).num_cells());
}

TEST_CASE("pair boundary drops empty members") {
  const auto b = boundary_pair(PairCell({0, 1}, {2, 3}));
  CHECK(b.size() == 4);
  CHECK(b.contains(PairCell({0}, {2, 3})));
  CHECK(b.contains(PairCell({0, 1}, {3})));
  CHECK(boundary_pair(PairCell({0}, {1})).empty());
  CHECK(boundary(b).empty());
}

TEST_CASE("∂∂ = 0 on deleted products") {
  for (const Complex& c : {k5(), boundary_simplex(3), random_walk(boundary_simplex(2), 3, 4).result}) {
    const DeletedProduct dp(c);
    for (int k = 1; k <= dp.top_dim(); ++k)
      CHECK(dp.boundary_matrix(k - 1).multiply(dp.boundary_matrix(k)).is_zero());
  }
}

TEST_CASE("vector round trip and indices") {
  const DeletedProduct dp(k5());
  PairChain w(2);
  w.toggle(PairCell({0, 1}, {2, 3}));
  w.toggle(PairCell({0, 4}, {1, 2}));
  CHECK(dp.chain_from(2, dp.vector_of(w)) == w);
  CHECK(dp.cells(2)[dp.index_of(PairCell({0, 1}, {2, 3}))] == PairCell({0, 1}, {2, 3}));
  CHECK_THROWS(dp.index_of(PairCell({0, 1, 2}, {3})));
}

TEST_CASE("pairings, slices and cycle checks") {
  const Chain2 a(1, {{0, 1}, {1, 2}, {0, 2}});
  const Chain2 b(1, {{3, 4}, {4, 5}, {3, 5}});
  const PairChain w = pair_chain_of(a, b);
  CHECK(w.size() == 9);
  CHECK(w.slice({0, 1}) == b);
  CHECK(w.members().size() == 6);
  CHECK(boundary(w).empty());
  CHECK(non_cycle_slices(w).empty());
  CHECK_THROWS_WITH(pair_chain_of(a, Chain2(1, {{2, 3}})),
                    Catch::Matchers::ContainsSubstring("supports not disjoint"));

  PairChain broken = w;
  broken.toggle(PairCell({0, 1}, {3, 4}));
  CHECK_FALSE(non_cycle_slices(broken).empty());
  const DeletedProduct dp(join(Complex::boundary_of({0, 1, 2}), Complex::boundary_of({3, 4, 5})));
  CHECK(is_pair_cycle(w, dp));
  CHECK_FALSE(is_pair_cycle(broken, dp));
  CHECK_THROWS(is_pair_cycle(w, DeletedProduct(k5())));
}
