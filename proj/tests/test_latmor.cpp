#include <doctest.h>

#include "cfl/latmor.hpp"

using namespace cfl;

namespace {

LinMorphism single(const LatticePtr& src, const LatticePtr& dst, std::vector<Element> images) {
  return LinMorphism(JoinMap{src, dst, std::move(images)});
}

}  // namespace

TEST_CASE("join map validity") {
  const auto b2 = boolean_lattice(2);
  CHECK(check_join_map(identity_map(b2)));
  CHECK(check_join_map(JoinMap{b2, b2, {0, 0, 0, 0}}));
  CHECK(check_join_map(JoinMap{b2, b2, {0, 2, 1, 3}}));
  CHECK_FALSE(check_join_map(JoinMap{b2, b2, {0, 1, 2, 1}}));
  CHECK_FALSE(check_join_map(JoinMap{b2, b2, {1, 1, 3, 3}}));
}

TEST_CASE("all join maps") {
  CHECK(all_join_maps(chain(2), chain(2)).size() == 6);
  CHECK(all_join_maps(chain(1), chain(2)).size() == 3);
  CHECK(all_join_maps(chain(1), chain(1)).size() == 2);
  // Join maps out of B2 are pairs of images of the atoms.
  CHECK(all_join_maps(boolean_lattice(2), chain(2)).size() == 9);
  for (const auto& f : all_join_maps(m3(), n5())) CHECK(check_join_map(f));
}

TEST_CASE("adjoint on opposite lattices") {
  const JoinMap f{chain(2), chain(1), {0, 1, 1}};
  const JoinMap fo = adjoint_op(f);
  CHECK(fo(0) == 0);
  CHECK(fo(1) == 2);
  const JoinMap id = adjoint_op(identity_map(n5()));
  CHECK(id.images == identity_map(n5()).images);
}

TEST_CASE("pi of a tuple") {
  const auto b2 = boolean_lattice(2);
  const JoinMap p = pi_of_tuple(ChainTuple{b2, {1}, ChainTuple::Kind::lower});
  CHECK(p.images == std::vector<Element>{0, 0, 1, 1});
  const auto c3 = chain(3);
  CHECK(pi_of_tuple(ChainTuple{c3, {0, 1, 2}, ChainTuple::Kind::lower}).images == identity_map(c3).images);
  CHECK(pi_of_tuple(ChainTuple{n5(), {}, ChainTuple::Kind::lower}).images == std::vector<Element>(5, 0));
}

TEST_CASE("lambda of a tuple") {
  const auto l = lambda_of_tuple(ChainTuple{n5(), {1, 2}, ChainTuple::Kind::upper});
  CHECK(l.images == std::vector<Element>{0, 1, 2});
}

TEST_CASE("j of a tuple") {
  const auto t = n5();
  const LinMorphism j0 = j_of_tuple(ChainTuple{t, {}, ChainTuple::Kind::lower});
  CHECK(j0 == single(chain(0), t, {0}));
  // On the one-step chain: j^(0) = id - const.
  const auto c1 = chain(1);
  const LinMorphism j1 = j_of_tuple(ChainTuple{c1, {0}, ChainTuple::Kind::lower});
  CHECK(j1 == single(c1, c1, {0, 1}) - single(c1, c1, {0, 0}));
}

TEST_CASE("rho_Y") {
  CHECK(rho_y(3, 0b1110).images == std::vector<Element>{0, 1, 2, 3});
  CHECK(rho_y(1, 0).images == std::vector<Element>{0, 0});
  CHECK(rho_y(3, 0b0100).images == std::vector<Element>{0, 0, 2, 2});
}

TEST_CASE("e_T on chains is the identity") {
  for (std::size_t n = 0; n <= 4; ++n) CHECK(e_t(chain(n)) == LinMorphism::identity(chain(n)));
}

TEST_CASE("e_T on M3 is not the identity") {
  const LinMorphism e = e_t(m3());
  CHECK_FALSE(e == LinMorphism::identity(m3()));
  CHECK(e * e == e);
}

TEST_CASE("beta on small chains") {
  const auto c1 = chain(1);
  CHECK(beta(1, 0) == single(c1, c1, {0, 0}));
  CHECK(epsilon(1) == single(c1, c1, {0, 1}) - single(c1, c1, {0, 0}));
  CHECK(beta(2, 0) + beta(2, 1) + beta(2, 2) == LinMorphism::identity(chain(2)));
}

TEST_CASE("tot basis") {
  CHECK(tot_basis(chain(2)).size() == 6);
  // M3: 1 + 3*3 + 0 chains of length 2 below the top... lengths 0, 1, 2.
  std::size_t want = 0;
  for (std::size_t n = 0; n <= height(*m3()); ++n) {
    const std::size_t c = lower_tuples(m3(), n).size();
    CHECK(c == upper_tuples(m3(), n).size());
    want += c * c;
  }
  CHECK(tot_basis(m3()).size() == want);
}

TEST_CASE("linear coordinates") {
  const auto c2 = chain(2);
  const auto basis = all_join_maps(c2, c2);
  const auto zero = lin_to_vector(LinMorphism(c2, c2), basis);
  CHECK(zero.size() == 6);
  CHECK(zero.isZero());
  const auto id = lin_to_vector(LinMorphism::identity(c2), basis);
  CHECK(id.sum() == 1);
  const auto c1 = chain(1);
  CHECK_THROWS_AS(lin_to_vector(LinMorphism::identity(c2), all_join_maps(c1, c1)), std::invalid_argument);
}

TEST_CASE("upsilon sections") {
  CHECK(find_upsilon_section(boolean_lattice(2)).has_value());
  CHECK(find_upsilon_section(chain(3)).has_value());
  CHECK_FALSE(find_upsilon_section(m3()).has_value());
  CHECK_FALSE(find_upsilon_section(n5()).has_value());
  const auto s = find_upsilon_section(chain(2));
  REQUIRE(s.has_value());
  CHECK(check_join_map(*s));
}
