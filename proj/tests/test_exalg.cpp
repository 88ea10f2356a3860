#include <doctest.h>

#include <random>

#include <Eigen/LU>

#include "cfl/exalg.hpp"

using namespace cfl;
using namespace cfl::exalg;

TEST_CASE("rank small examples") {
  CHECK(rank(IntMatrix::Identity(3, 3)) == 3);
  CHECK(rank(IntMatrix::Zero(3, 4)) == 0);
  IntMatrix ones = IntMatrix::Ones(2, 2);
  CHECK(rank(ones) == 1);
  CHECK(rank(ones, Ring::prime(7)) == 1);
  CHECK(rank(IntMatrix(0, 5)) == 0);
}

TEST_CASE("rank depends on the characteristic") {
  IntMatrix m(2, 2);
  m << 1, 1, 1, 3;  // det 2
  CHECK(rank(m) == 2);
  CHECK(rank(m, Ring::prime(2)) == 1);
  CHECK(rank(m, Ring::prime(1000003)) == 2);
}

TEST_CASE("rank agrees with floating LU on small random matrices") {
  std::mt19937_64 g(11);
  for (int s = 0; s < 200; ++s) {
    const Index r = 1 + g() % 6, c = 1 + g() % 6;
    IntMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = (g() % 3 == 0) ? static_cast<long>(g() % 5) - 2 : 0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m.cast<double>());
    const auto want = static_cast<std::size_t>(lu.rank());
    CHECK(rank(m) == want);
    CHECK(rank(m, Ring::prime(random_large_prime(s))) == want);
  }
}

TEST_CASE("nullspace") {
  Matrix<Rational> id = Matrix<Rational>::Identity(3, 3);
  CHECK(nullspace(id).cols() == 0);
  Matrix<Rational> row(1, 2);
  row << 1, -1;
  const Matrix<Rational> n = nullspace(row);
  REQUIRE(n.cols() == 1);
  Matrix<Rational> want(2, 1);
  want << 1, 1;
  CHECK(subspace_equal(n, want));
  CHECK((row * n).isZero());
}

TEST_CASE("subspace equality") {
  Matrix<Rational> a(2, 1), b(2, 1), c(2, 1);
  a << 1, 0;
  b << 2, 0;
  c << 0, 1;
  CHECK(subspace_equal(a, a));
  CHECK(subspace_equal(a, b));
  CHECK_FALSE(subspace_equal(a, c));
}

TEST_CASE("determinant") {
  IntMatrix m(3, 3);
  m << 2, 0, 1, 1, 3, 2, 1, 1, 1;
  // 2*(3-2) - 0 + 1*(1-3) = 0
  CHECK(determinant(m) == 0);
  m(2, 2) = 2;
  CHECK(determinant(m) == 6);
  Matrix<Rational> h(2, 2);
  h << Rational(1, 2), 1, 0, 3;
  CHECK(determinant(h) == Rational(3, 2));
  IntMatrix up(2, 2);
  up << 1, 1, 0, 1;
  CHECK(determinant(up) == 1);
}

TEST_CASE("primes and rings") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));
  const std::uint64_t p = random_large_prime(3);
  CHECK(is_prime(p));
  CHECK(p >= (std::uint64_t{1} << 61));
  CHECK(p < (std::uint64_t{1} << 62));
  CHECK(random_large_prime(3) == p);

  CHECK(Ring::parse("rat") == Ring::rational());
  CHECK(Ring::parse("p:7") == Ring::prime(7));
  CHECK(Ring::parse("p:7").name() == "p:7");
  CHECK_THROWS_AS(Ring::parse("p:8"), std::invalid_argument);
  CHECK_THROWS_AS(Ring::parse("real"), std::invalid_argument);
}

TEST_CASE("ModP arithmetic") {
  ModP::Scope scope(7);
  const ModP a(3), b(5);
  CHECK(a + b == ModP(1));
  CHECK(a - b == ModP(5));
  CHECK(a * b == ModP(1));
  CHECK(a * a.inverse() == ModP(1));
  CHECK(ModP(-1) == ModP(6));
}
