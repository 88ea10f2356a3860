#include "cfl/exalg.hpp"

#include <random>

namespace cfl::exalg {

namespace {

thread_local std::uint64_t current_modulus = kDefaultPrime;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

ModP::Scope::Scope(std::uint64_t p) : saved_(current_modulus) { current_modulus = p; }
ModP::Scope::~Scope() { current_modulus = saved_; }

std::uint64_t ModP::modulus() { return current_modulus; }

ModP::ModP(std::int64_t v) {
  const auto p = static_cast<std::int64_t>(modulus());
  std::int64_t r = v % p;
  if (r < 0) r += p;
  v_ = static_cast<std::uint64_t>(r);
}

ModP::ModP(const Integer& v) {
  Integer r = v % Integer(modulus());
  if (r < 0) r += modulus();
  v_ = r.convert_to<std::uint64_t>();
}

ModP::ModP(const Rational& v) {
  *this = ModP(numerator(v)) / ModP(denominator(v));
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero modulo p");
  return raw(powmod(v_, modulus() - 2, modulus()));
}

Ring Ring::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 63) || !is_prime(p))
    throw std::invalid_argument("not a usable prime: " + std::to_string(p));
  return Ring{Kind::prime, p};
}

Ring Ring::parse(const std::string& text) {
  if (text == "rat" || text == "rational" || text == "Q") return rational();
  if (text.rfind("p:", 0) == 0) {
    const std::string digits = text.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad prime in ring spec: " + text);
    if (digits.size() > 19) throw std::invalid_argument("prime too large: " + text);
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("unknown ring '" + text + "' (use rat or p:PRIME)");
}

std::string Ring::name() const {
  return kind == Kind::rational ? std::string("rat") : "p:" + std::to_string(p);
}

std::uint64_t random_large_prime(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 61,
                                                    (std::uint64_t{1} << 62) - 1);
  for (;;) {
    const std::uint64_t c = dist(gen) | 1u;
    if (is_prime(c)) return c;
  }
}

namespace detail {

std::pair<std::size_t, Integer> bareiss(Matrix<Integer>& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Integer prev = 1;
  Integer t;
  int sign = 1;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index p = row;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != row) {
      m.row(p).swap(m.row(row));
      sign = -sign;
    }
    mpz_srcptr piv = m(row, col).backend().data();
    mpz_srcptr den = prev.backend().data();
    const bool unit_step = mpz_cmp(piv, den) == 0;
    for (Index i = row + 1; i < rows; ++i) {
      mpz_srcptr lead = m(i, col).backend().data();
      const bool lead_zero = mpz_sgn(lead) == 0;
      if (lead_zero && unit_step) continue;
      for (Index j = col + 1; j < cols; ++j) {
        mpz_ptr a = m(i, j).backend().data();
        mpz_srcptr b = m(row, j).backend().data();
        if (lead_zero || mpz_sgn(b) == 0) {
          if (mpz_sgn(a) == 0 || unit_step) continue;
          mpz_mul(t.backend().data(), a, piv);
          mpz_divexact(a, t.backend().data(), den);
          continue;
        }
        mpz_mul(t.backend().data(), a, piv);
        mpz_submul(t.backend().data(), lead, b);
        mpz_divexact(a, t.backend().data(), den);
      }
      m(i, col) = 0;
    }
    prev = m(row, col);
    ++row;
  }
  return {static_cast<std::size_t>(row), sign < 0 ? Integer(-prev) : prev};
}

}  // namespace detail

}  // namespace cfl::exalg
