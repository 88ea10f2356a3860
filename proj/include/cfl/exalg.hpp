#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cfl/scalar.hpp"

namespace cfl::exalg {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<std::int64_t>;
using Index = Eigen::Index;

inline constexpr std::uint64_t kDefaultPrime = 1000003;

bool is_prime(std::uint64_t p);

// Element of Z/p.  The modulus is per thread and set with ModP::Scope.
class ModP {
 public:
  class Scope {
   public:
    explicit Scope(std::uint64_t p);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint64_t saved_;
  };

  ModP() = default;
  ModP(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit ModP(const Integer& v);
  explicit ModP(const Rational& v);

  static std::uint64_t modulus();
  std::uint64_t value() const { return v_; }

  ModP operator+(ModP o) const { return raw(v_ + o.v_ >= modulus() ? v_ + o.v_ - modulus() : v_ + o.v_); }
  ModP operator-(ModP o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  ModP operator*(ModP o) const {
    return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % modulus()));
  }
  ModP operator/(ModP o) const { return *this * o.inverse(); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  ModP inverse() const;

  bool operator==(ModP o) const { return v_ == o.v_; }
  bool operator!=(ModP o) const { return v_ != o.v_; }

 private:
  static ModP raw(std::uint64_t v) {
    ModP m;
    m.v_ = v;
    return m;
  }
  std::uint64_t v_ = 0;
};

}  // namespace cfl::exalg

namespace Eigen {
template <>
struct NumTraits<cfl::exalg::ModP> : GenericNumTraits<cfl::exalg::ModP> {
  using Real = cfl::exalg::ModP;
  using NonInteger = cfl::exalg::ModP;
  using Nested = cfl::exalg::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
};
}  // namespace Eigen

namespace cfl::exalg {

// Coefficient ring for rank and kernel computations.
struct Ring {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint64_t p = 0;

  static Ring rational() { return {}; }
  static Ring prime(std::uint64_t p);
  // "rat" or "p:PRIME".
  static Ring parse(const std::string& text);
  std::string name() const;

  bool operator==(const Ring&) const = default;
};

// A prime drawn from [2^61, 2^62) by a seeded generator.
std::uint64_t random_large_prime(std::uint64_t seed);

namespace detail {

template <class S>
inline constexpr bool is_rational_v = std::is_same_v<S, Rational>;

template <class Derived>
Matrix<Integer> to_integer_rows(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Matrix<Integer> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    if constexpr (is_rational_v<S>) {
      // Clear denominators row by row; rank is unchanged.
      Integer l = 1;
      for (Index j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
      for (Index j = 0; j < m.cols(); ++j)
        out(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    } else {
      for (Index j = 0; j < m.cols(); ++j) out(i, j) = Integer(m(i, j));
    }
  }
  return out;
}

template <class F, class Derived>
Matrix<F> to_field(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Matrix<F> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<S, F>)
        out(i, j) = m(i, j);
      else if constexpr (std::is_same_v<F, ModP> && std::is_integral_v<S>)
        out(i, j) = ModP(static_cast<std::int64_t>(m(i, j)));
      else
        out(i, j) = F(m(i, j));
    }
  return out;
}

// Fraction-free elimination; m is destroyed.  Pivots are the first nonzero
// entry at or below the current row.  Returns (rank, signed last pivot).
std::pair<std::size_t, Integer> bareiss(Matrix<Integer>& m);

}  // namespace detail

// Reduced row echelon form over a field, first-nonzero pivoting.
template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

template <class F>
Echelon<F> rref(Matrix<F> m) {
  Echelon<F> out;
  const F zero(0);
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && m(p, col) == zero) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const F inv = F(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == zero) continue;
      const F factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t field_rank(Matrix<F> m) {
  const F zero(0);
  std::size_t rank = 0;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && m(p, col) == zero) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const F inv = F(1) / m(row, col);
    for (Index i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == zero) continue;
      const F factor = m(i, col) * inv;
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Rank over the ring: fraction-free integer elimination for the rationals,
// Gaussian elimination for Z/p.  Entries must be integers or rationals.
template <class Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m, const Ring& ring = Ring::rational()) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (ring.kind == Ring::Kind::rational) {
    Matrix<Integer> work = detail::to_integer_rows(m);
    return detail::bareiss(work).first;
  }
  ModP::Scope scope(ring.p);
  return field_rank(detail::to_field<ModP>(m));
}

// Exact determinant of a square integer or rational matrix.
template <class Derived>
Rational determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  using S = typename Derived::Scalar;
  Rational scale = 1;
  if constexpr (detail::is_rational_v<S>) {
    for (Index i = 0; i < m.rows(); ++i) {
      Integer l = 1;
      for (Index j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
      scale /= Rational(l);
    }
  }
  Matrix<Integer> work = detail::to_integer_rows(m);
  auto [r, last] = detail::bareiss(work);
  if (r < static_cast<std::size_t>(m.rows())) return Rational(0);
  return Rational(last) * scale;
}

// Kernel {v : m v = 0} over a field.  Columns form the echelon basis: one
// column per free variable, with a 1 there and 0 at the other free variables.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
  Echelon<F> e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Matrix<F> basis = Matrix<F>::Constant(n, static_cast<Index>(free.size()), F(0));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    basis(f, static_cast<Index>(k)) = F(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], static_cast<Index>(k)) = -e.reduced(static_cast<Index>(r), f);
  }
  return basis;
}

// Column spans of a and b coincide.
template <class F>
bool subspace_equal(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("subspaces of different spaces");
  Matrix<F> both(a.rows(), a.cols() + b.cols());
  both << a, b;
  const std::size_t ra = field_rank(a);
  return ra == field_rank(b) && ra == field_rank(both);
}

// Plain triple-loop product; works for any exact scalar.
template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  const F zero(0);
  Matrix<F> out = Matrix<F>::Constant(a.rows(), b.cols(), zero);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == zero) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (b(k, j) != zero) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

// Calls fn.template operator()<F>() with F = Rational or ModP (modulus in scope).
template <class Fn>
decltype(auto) with_field(const Ring& ring, Fn&& fn) {
  if (ring.kind == Ring::Kind::rational) return fn.template operator()<Rational>();
  ModP::Scope scope(ring.p);
  return fn.template operator()<ModP>();
}

}  // namespace cfl::exalg
