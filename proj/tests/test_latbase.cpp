#include <doctest.h>

#include "cfl/catalog.hpp"
#include "cfl/latbase.hpp"

using namespace cfl;

TEST_CASE("lattice construction") {
  const auto c1 = Lattice::from_leq(2, {{0, 1}});
  CHECK(c1->is_chain());
  CHECK(*c1 == *chain(1));

  const auto b2 = Lattice::from_leq(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(isomorphic(*b2, *boolean_lattice(2)));
  CHECK(b2->join(1, 2) == 3);
  CHECK(b2->meet(1, 2) == 0);

  try {
    Lattice::from_leq(4, {{0, 1}, {0, 2}});
    FAIL("bowtie accepted");
  } catch (const LatticeError& e) {
    CHECK(e.kind() == LatticeError::Kind::no_join);
  }
  CHECK_THROWS_AS(Lattice::from_leq(2, {{0, 1}, {1, 0}}), LatticeError);
  CHECK_THROWS_AS(Lattice::from_leq(2, {}), LatticeError);
}

TEST_CASE("irreducibles of named lattices") {
  const auto ch = irreducibles(*chain(3));
  CHECK(ch.elements == std::vector<Element>{1, 2, 3});
  CHECK(ch.order.leq(0, 2));

  const auto b2 = irreducibles(*boolean_lattice(2));
  CHECK(b2.elements == std::vector<Element>{1, 2});
  CHECK(b2.order == Poset::antichain(2));

  const auto m = irreducibles(*m3());
  CHECK(m.elements == std::vector<Element>{1, 2, 3});
  CHECK(m.order == Poset::antichain(3));

  for (Element a : {1u, 2u, 3u}) CHECK(r_of(*m3(), a) == 0);
}

TEST_CASE("ideal lattices") {
  CHECK(ideal_lattice(Poset::antichain(2)).ideals.size() == 4);
  CHECK(isomorphic(*ideal_lattice(Poset::antichain(2)).lattice, *boolean_lattice(2)));
  const Poset two = Poset::from_leq(2, {{0, 1}});
  CHECK(ideal_lattice(two).ideals == std::vector<Mask>{0, 1, 3});
  CHECK(isomorphic(*ideal_lattice(two).lattice, *chain(2)));
  CHECK(ideal_lattice(Poset::antichain(3)).lattice->size() == 8);

  const IdealLattice il = ideal_lattice(two);
  const auto emb = principal_embed(two, il);
  CHECK(il.ideals[emb[0]] == 1);
  CHECK(il.ideals[emb[1]] == 3);
  const IdealLattice anti = ideal_lattice(Poset::antichain(3));
  const auto e3 = principal_embed(Poset::antichain(3), anti);
  for (std::size_t e = 0; e < 3; ++e) CHECK(anti.ideals[e3[e]] == bit(e));
}

TEST_CASE("distributivity") {
  CHECK(is_distributive(*boolean_lattice(3)));
  CHECK(is_distributive(*chain(4)));
  CHECK_FALSE(is_distributive(*m3()));
  CHECK_FALSE(is_distributive(*n5()));
}

TEST_CASE("mobius on chains and Boolean lattices") {
  const auto mu = mobius(*chain(3));
  CHECK(mu(0, 0) == 1);
  CHECK(mu(0, 1) == -1);
  CHECK(mu(0, 2) == 0);
  CHECK(mu(2, 1) == 0);
  const auto mb = mobius(*boolean_lattice(3));
  // (-1)^|B \ A| on subsets.
  for (Mask a = 0; a < 8; ++a)
    for (Mask b = 0; b < 8; ++b)
      CHECK(mb(a, b) == ((a & ~b) ? 0 : (popcount(b & ~a) % 2 ? -1 : 1)));
  CHECK(mobius(*m3())(0, 4) == 2);
}

TEST_CASE("canonical surjection") {
  const JoinMap b = canonical_surjection(boolean_lattice(2));
  CHECK(b.images.size() == 4);
  CHECK(b.src->size() == 4);

  const JoinMap m = canonical_surjection(m3());
  CHECK(m.images.size() == 8);
  std::size_t to_top = 0;
  for (Element v : m.images) to_top += v == 4;
  CHECK(to_top == 4);  // the three 2-subsets and the full set

  const JoinMap one = canonical_surjection(chain(1));
  CHECK(one.images.size() == 2);
}

TEST_CASE("opposite lattice and products") {
  const auto op = opposite(n5());
  CHECK(op->bottom() == 4);
  CHECK(op->join(1, 3) == 0);
  const auto p = product(chain(2), chain(3));
  CHECK(p->size() == 12);
  CHECK(is_distributive(*p));
  CHECK(irreducibles(*p).elements.size() == 5);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_lattices(1).size() == 1);
  const auto two = enumerate_lattices(2);
  CHECK(two.size() == 3);  // one of size 1, two labelled 2-chains
  std::size_t posets = 0;
  for_each_labeled_poset(4, [&](const Poset&) { ++posets; });
  CHECK(posets == 219);
  std::size_t five = 0;
  for (const auto& t : enumerate_lattices(5)) five += t->size() == 5;
  CHECK(five == 380);
}

TEST_CASE("catalog") {
  const LatticeCatalog cat(5);
  CHECK(cat.find("M3") != nullptr);
  CHECK(cat.find("chain2xchain3") != nullptr);
  // One representative per type: 1, 1, 1, 2, 5 lattices on 1..5 points.
  std::size_t small = 0;
  for (const auto& e : cat.representatives(5)) small += e.lattice->size() <= 5;
  CHECK(small == 10);
  // M3 with the top listed first.
  const auto moved = Lattice::from_leq(5, {{4, 1}, {4, 2}, {4, 3}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(isomorphic(*m3(), *moved));
  CHECK_FALSE(isomorphic(*m3(), *n5()));
}
