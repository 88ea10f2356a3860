#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cfl/relcore.hpp"

using namespace cfl;

namespace {

Correspondence random_rel(std::mt19937_64& g, std::size_t dst, std::size_t src) {
  Correspondence r(dst, src);
  for (std::size_t y = 0; y < dst; ++y) r.set_row(y, g());
  return r;
}

}  // namespace

TEST_CASE("compose small cases") {
  const auto r = Correspondence::from_pairs(1, 1, {{0, 0}});
  const auto s = Correspondence::from_pairs(1, 2, {{0, 0}, {0, 1}});
  CHECK(r * s == s);
  CHECK(Correspondence::identity(1) * s == s);
  CHECK(s * Correspondence::identity(2) == s);
  // Empty middle set gives the empty relation.
  CHECK((Correspondence(2, 0) * Correspondence(0, 3)).pair_count() == 0);
}

TEST_CASE("compose matches the pairwise definition") {
  std::mt19937_64 g(7);
  for (int s = 0; s < 200; ++s) {
    const std::size_t a = g() % 6, b = g() % 6, c = g() % 6;
    const auto r = random_rel(g, a, b);
    const auto q = random_rel(g, b, c);
    const auto p = r * q;
    for (std::size_t z = 0; z < a; ++z)
      for (std::size_t x = 0; x < c; ++x) {
        bool want = false;
        for (std::size_t y = 0; y < b; ++y) want = want || (r.contains(z, y) && q.contains(y, x));
        CHECK(p.contains(z, x) == want);
      }
  }
}

TEST_CASE("opposite") {
  CHECK(opposite(Correspondence::from_pairs(2, 2, {{1, 0}})) == Correspondence::from_pairs(2, 2, {{0, 1}}));
  CHECK(opposite(Correspondence::identity(3)) == Correspondence::identity(3));
  const auto r = Correspondence::from_pairs(2, 3, {{0, 2}, {1, 1}});
  CHECK(opposite(r).dst_size() == 3);
  CHECK(opposite(opposite(r)) == r);
}

TEST_CASE("delta of permutations") {
  CHECK(delta(Permutation::identity(3)) == Correspondence::identity(3));
  CHECK(delta(Permutation({1, 0})) == Correspondence::from_pairs(2, 2, {{1, 0}, {0, 1}}));
  const Permutation a({1, 2, 0});
  const Permutation b({0, 2, 1});
  CHECK(delta(a * b) == delta(a) * delta(b));
  CHECK(delta(a.inverse()) * delta(a) == Correspondence::identity(3));
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("order flags") {
  const OrderFlags id = order_flags(Correspondence::identity(3));
  CHECK(id.reflexive);
  CHECK(id.transitive);
  CHECK(id.antisymmetric);
  const OrderFlags full = order_flags(Correspondence::full(2, 2));
  CHECK(full.reflexive);
  CHECK(full.transitive);
  CHECK_FALSE(full.antisymmetric);
  const OrderFlags gap = order_flags(Correspondence::from_pairs(3, 3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(gap.reflexive);
  CHECK_FALSE(gap.transitive);
}

TEST_CASE("closure and quotient") {
  const auto cyc = reflexive_transitive_closure(Correspondence::from_pairs(3, 3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(cyc == Correspondence::full(3, 3));
  CHECK(preorder_quotient(cyc).order.dst_size() == 1);

  const auto q = preorder_quotient(Correspondence::full(2, 2));
  CHECK(q.order.dst_size() == 1);
  CHECK(q.class_of == std::vector<Element>{0, 0});

  const auto chain = reflexive_transitive_closure(Correspondence::from_pairs(3, 3, {{0, 1}, {1, 2}}));
  CHECK(chain.contains(0, 2));
  const auto same = preorder_quotient(chain);
  CHECK(same.order == chain);
  CHECK(same.class_of == std::vector<Element>{0, 1, 2});
}

TEST_CASE("set size cap") {
  CHECK_NOTHROW(check_set_size(64));
  CHECK_THROWS_AS(check_set_size(65), std::length_error);
}
