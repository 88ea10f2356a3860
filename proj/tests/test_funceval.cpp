#include <doctest.h>

#include <random>

#include "cfl/catalog.hpp"
#include "cfl/funceval.hpp"

using namespace cfl;
using exalg::Ring;

namespace {

// Surjections from a k-set onto an n-set, by inclusion-exclusion.
Integer surjections(std::size_t k, std::size_t n) {
  Integer s = 0;
  Integer binom = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    Integer term = binom * boost::multiprecision::pow(Integer(n - i), static_cast<unsigned>(k));
    s += (i % 2 ? -term : term);
    binom = binom * (n - i) / (i + 1);
  }
  return s;
}

}  // namespace

TEST_CASE("function indexing") {
  const auto t = chain(2);
  CHECK(function_count(3, 2) == 9);
  CHECK(function_count(5, 0) == 1);
  CHECK_THROWS_AS(function_count(10, 5), std::length_error);
  const LatticeFunction f = decode_function(t, 3, 5);
  CHECK(f.values == std::vector<Element>{2, 1, 0});
  CHECK(f.index() == 5);
}

TEST_CASE("correspondence action") {
  const auto t = m3();
  const LatticeFunction phi{t, {1, 2}};
  const auto r = Correspondence::from_pairs(3, 2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(act(r, phi).values == std::vector<Element>{4, 2, 0});
  CHECK(act(Correspondence::identity(2), phi) == phi);
}

TEST_CASE("star action") {
  const auto t = chain(2);
  const LatticeFunction psi{opposite(t), {1, 2}};
  const auto q = Correspondence::from_pairs(2, 2, {{0, 0}, {0, 1}});
  const LatticeFunction out = star_act(q, psi);
  CHECK(out.values[0] == 1);
  CHECK(out.values[1] == 2);  // empty row -> top of T
}

TEST_CASE("gamma correspondence") {
  const LatticeFunction phi{chain(2), {2}};
  const Correspondence g = gamma_corr(phi);
  // Irreducibles 1, 2 are E indices 0, 1.
  CHECK(g.pairs() == std::vector<std::pair<Element, Element>>{{0, 0}, {0, 1}});
}

TEST_CASE("quotient basis") {
  CHECK(h_quotient_basis(chain(1), 2).size() == 3);
  CHECK(h_quotient_basis(boolean_lattice(3), 2).empty());
  CHECK(h_quotient_basis(boolean_lattice(3), 3).size() == 6);
  CHECK(h_quotient_basis(m3(), 3).size() == 6);
}

TEST_CASE("retraction") {
  const Poset e = Poset::from_leq(2, {{0, 1}});
  CHECK(retraction_exists(e, e.relation()));
  const Poset anti = Poset::antichain(2);
  Correspondence full(1, 2);
  full.set_row(0, 0b11);
  CHECK_FALSE(retraction_exists(anti, full));
  const auto u = retraction(e, e.relation());
  REQUIRE(u.has_value());
  CHECK(*u * e.relation() == e.relation());
}

TEST_CASE("six conditions at the edges") {
  const ThetaFrame one = theta_frame(chain(1));
  const ThetaConditions all = theta_conditions(one, {1}, {0b1});
  CHECK(all.a);
  CHECK(all.agree());
  const ThetaFrame f = theta_frame(boolean_lattice(2));
  const ThetaConditions none = theta_conditions(f, {3, 1}, {0, 0});
  CHECK_FALSE(none.a);
  CHECK_FALSE(none.b);
  CHECK_FALSE(none.c);
  CHECK_FALSE(none.d);
  CHECK_FALSE(none.e);
  CHECK_FALSE(none.f);
}

TEST_CASE("pairing") {
  const auto t = n5();
  CHECK(pairing(*t, {2, 3}, {2, 3}));
  CHECK_FALSE(pairing(*t, {2}, {3}));
  exalg::IntMatrix want(2, 2);
  want << 1, 1, 0, 1;
  CHECK(pairing_matrix(*chain(1), 1) == want);
}

TEST_CASE("dual basis examples") {
  const auto t = chain(1);
  const ModVec s = dual_star(LatticeFunction{t, {1}});
  CHECK(s.coeffs(0) == -1);
  CHECK(s.coeffs(1) == 1);
  const ModVec z = dual_star(LatticeFunction{t, {0}});
  CHECK(z.coeffs(0) == 1);
  CHECK(z.coeffs(1) == 0);
}

TEST_CASE("gamma on a chain") {
  // gamma for chain 2 at E = {1, 2}: (1,2) - (0,2) - (1,1) + (0,1).
  const ModVec g = gamma_t(chain(2));
  auto coeff = [&](Element a, Element b) { return g.coeffs(static_cast<exalg::Index>(a + 3 * b)); };
  CHECK(coeff(1, 2) == 1);
  CHECK(coeff(0, 2) == -1);
  CHECK(coeff(1, 1) == -1);
  CHECK(coeff(0, 1) == 1);
  CHECK(g.coeffs.cwiseAbs().sum() == 4);
}

TEST_CASE("theta rank on chains against surjection counts") {
  // On a chain the quotient functions are the maps hitting 1..n, and the
  // rank is the number of surjections onto an n-set plus the ones onto n+1.
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t x = 0; x <= 4; ++x) {
      const Integer want = surjections(x, n) + surjections(x, n + 1);
      CHECK(Integer(theta_rank(chain(n), x)) == want);
      CHECK(total_rank_formula(n, x) == want);
    }
  CHECK(total_rank_formula(2, 2) == 2);
  CHECK(total_rank_formula(1, 2) == 3);
  CHECK(total_rank_formula(0, 3) == 1);
}

TEST_CASE("theta and gamma agree in both rings") {
  const Ring p = Ring::prime(exalg::random_large_prime(5));
  for (const auto& t : {boolean_lattice(2), chain(2), m3()}) {
    const LatticePtr dual = ideal_lattice(irreducibles(*t).order.opposite()).lattice;
    for (std::size_t x = 0; x <= 2; ++x) {
      CHECK(gamma_span_rank(dual, x) == theta_rank(t, x));
      CHECK(theta_rank(t, x, p) == theta_rank(t, x));
    }
  }
}

TEST_CASE("orthogonality examples") {
  CHECK(orth_check(chain(1), 2).equal);
  CHECK(orth_check(boolean_lattice(2), 2).equal);
  CHECK(orth_check(m3(), 1).equal);
}

TEST_CASE("fundamental action examples") {
  const Correspondence r = Correspondence::identity(2);
  const FundElement e = FundElement::basis(2, 0);
  CHECK(fund_act(r, Correspondence::identity(2), e) == e);
  CHECK(fund_act(r, Correspondence::full(2, 2), e) == FundElement::zero(2));
  CHECK(fund_act(r, delta(Permutation({1, 0})), e) == FundElement::basis(2, 1));
  CHECK(permutation_index(Permutation({2, 1, 0})) == 5);
}

TEST_CASE("fixed rank examples") {
  CHECK(fixed_rank(chain(1), Poset::antichain(1)) == 2);
  CHECK(fixed_rank(chain(2), Poset::antichain(1)) == 3);
  CHECK(fixed_rank(boolean_lattice(2), Poset::antichain(2)) == 16);
}
