#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace cfl {

using Mask = std::uint64_t;
using Element = std::uint32_t;

// Rows are single machine words, so every finite set here has at most 64 points.
inline constexpr std::size_t kMaxSetSize = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }

void check_set_size(std::size_t n);

// A bijection of {0..n-1}; images[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Element> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  Element operator()(std::size_t i) const { return images_[i]; }
  const std::vector<Element>& images() const { return images_; }
  Permutation inverse() const;
  // Advances to the next permutation in lexicographic order; false after the last.
  bool next();

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Element> images_;
};

// (*this * other)(i) = (*this)(other(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

std::vector<Permutation> all_permutations(std::size_t n);

// A subset R of Y x X, stored as |Y| rows of bits over X.  A pair (y, x) reads
// "x is sent to y", so R is a correspondence from X to Y.
class Correspondence {
 public:
  Correspondence() = default;
  Correspondence(std::size_t dst, std::size_t src);

  static Correspondence identity(std::size_t n);
  static Correspondence full(std::size_t dst, std::size_t src);
  static Correspondence from_pairs(std::size_t dst, std::size_t src,
                                   const std::vector<std::pair<Element, Element>>& pairs);

  std::size_t dst_size() const { return dst_; }
  std::size_t src_size() const { return src_; }

  bool contains(std::size_t y, std::size_t x) const { return (rows_[y] >> x) & 1u; }
  void insert(std::size_t y, std::size_t x) { rows_[y] |= bit(x); }
  void erase(std::size_t y, std::size_t x) { rows_[y] &= ~bit(x); }

  Mask row(std::size_t y) const { return rows_[y]; }
  void set_row(std::size_t y, Mask m) { rows_[y] = m & low_bits(src_); }
  Mask column(std::size_t x) const;
  const std::vector<Mask>& rows() const { return rows_; }

  std::size_t pair_count() const;
  std::vector<std::pair<Element, Element>> pairs() const;

  bool operator==(const Correspondence&) const = default;

 private:
  std::size_t dst_ = 0;
  std::size_t src_ = 0;
  std::vector<Mask> rows_;
};

// Composite r s: (z, x) is in it iff (z, y) in r and (y, x) in s for some y.
Correspondence compose(const Correspondence& r, const Correspondence& s);
inline Correspondence operator*(const Correspondence& r, const Correspondence& s) {
  return compose(r, s);
}

Correspondence opposite(const Correspondence& r);
Correspondence operator|(const Correspondence& a, const Correspondence& b);
Correspondence operator&(const Correspondence& a, const Correspondence& b);
bool is_subset(const Correspondence& a, const Correspondence& b);

// {(sigma(x), x)}.
Correspondence delta(const Permutation& sigma);
// delta(sigma) r delta(sigma)^-1.
Correspondence conjugate(const Permutation& sigma, const Correspondence& r);

// The graph {(f(x), x)} of a map f: X -> Y.
Correspondence graph(const std::vector<Element>& f, std::size_t dst);

struct OrderFlags {
  bool reflexive = false;
  bool transitive = false;
  bool antisymmetric = false;

  bool preorder() const { return reflexive && transitive; }
  bool order() const { return preorder() && antisymmetric; }
};

OrderFlags order_flags(const Correspondence& r);

// Smallest reflexive transitive relation containing r.
Correspondence reflexive_transitive_closure(const Correspondence& r);

struct PreorderQuotient {
  std::vector<Element> class_of;  // point -> class index, classes numbered by first member
  Correspondence order;           // induced order on the classes
};

PreorderQuotient preorder_quotient(const Correspondence& r);

}  // namespace cfl
