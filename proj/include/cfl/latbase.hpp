#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfl/relcore.hpp"
#include "cfl/scalar.hpp"

namespace cfl {

class LatticeError : public std::runtime_error {
 public:
  enum class Kind { empty, not_antisymmetric, no_join, no_meet, too_large };

  LatticeError(Kind kind, Element a, Element b);

  Kind kind() const { return kind_; }
  Element a() const { return a_; }
  Element b() const { return b_; }

 private:
  Kind kind_;
  Element a_;
  Element b_;
};

// A finite partial order.  leq(a, b) means a <= b; row a of the relation holds
// the elements above a.
class Poset {
 public:
  Poset() = default;
  // The relation must already be a partial order.
  explicit Poset(Correspondence leq);
  // Reflexive-transitive closure of the given pairs, then antisymmetry check.
  static Poset from_leq(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return leq_.dst_size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_.contains(a, b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  Mask up(std::size_t a) const { return leq_.row(a); }
  Mask down(std::size_t a) const { return down_[a]; }
  const Correspondence& relation() const { return leq_; }

  Poset opposite() const;
  // Induced order on the listed elements, renumbered 0..k-1.
  Poset restrict_to(const std::vector<Element>& elements) const;
  bool is_down_set(Mask m) const;
  bool is_up_set(Mask m) const;

  bool operator==(const Poset& other) const { return leq_ == other.leq_; }

 private:
  Correspondence leq_;
  std::vector<Mask> down_;
};

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

class Lattice {
 public:
  static LatticePtr make(Poset order, std::vector<std::string> names = {});
  static LatticePtr from_leq(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs,
                             std::vector<std::string> names = {});

  std::size_t size() const { return order_.size(); }
  const Poset& poset() const { return order_; }
  bool leq(std::size_t a, std::size_t b) const { return order_.leq(a, b); }
  bool less(std::size_t a, std::size_t b) const { return order_.less(a, b); }
  Mask up(std::size_t a) const { return order_.up(a); }
  Mask down(std::size_t a) const { return order_.down(a); }
  Element join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  Element meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  Element join_all(Mask m) const;
  Element meet_all(Mask m) const;
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_chain() const;

  // Same size and the same order on indices.
  bool operator==(const Lattice& other) const { return order_ == other.order_; }

 private:
  Lattice() = default;

  Poset order_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::string> names_;
};

bool same_lattice(const LatticePtr& a, const LatticePtr& b);

// An order-preserving map that is meant to preserve finite joins; validity is
// checked by check_join_map.
struct JoinMap {
  LatticePtr src;
  LatticePtr dst;
  std::vector<Element> images;

  Element operator()(std::size_t t) const { return images[t]; }
};

// Elements other than the bottom that are not the join of strictly smaller ones,
// in increasing index order, with the induced order.
struct Irreducibles {
  std::vector<Element> elements;
  Poset order;
};

Irreducibles irreducibles(const Lattice& t);

// Join of everything strictly below t.
Element r_of(const Lattice& t, Element e);

enum class IdealKind { lower, upper };

// Lattice of down-sets (or up-sets) ordered by inclusion.  Element i is the set
// ideals[i]; the masks are sorted ascending as integers.
struct IdealLattice {
  LatticePtr lattice;
  std::vector<Mask> ideals;

  Element index_of(Mask m) const;
};

IdealLattice ideal_lattice(const Poset& p, IdealKind kind = IdealKind::lower);

// e -> index of the principal down-set of e in ideal_lattice(p, lower).
std::vector<Element> principal_embed(const Poset& p, const IdealLattice& lower);

bool is_distributive(const Lattice& t);

class MobiusTable {
 public:
  explicit MobiusTable(const Poset& p);

  std::size_t size() const { return n_; }
  // Zero when a is not below b.
  const Integer& operator()(std::size_t a, std::size_t b) const { return values_[a * n_ + b]; }
  void set(std::size_t a, std::size_t b, Integer v) { values_[a * n_ + b] = std::move(v); }

 private:
  std::size_t n_;
  std::vector<Integer> values_;
};

inline MobiusTable mobius(const Lattice& t) { return MobiusTable(t.poset()); }

// A -> join of A, from the lower sets of the irreducibles onto t.
JoinMap canonical_surjection(const LatticePtr& t);

LatticePtr opposite(const LatticePtr& t);

inline constexpr std::size_t kMaxBooleanBase = 6;

// Subsets of the elements of t, with the join map A -> join of A.
struct BooleanCover {
  LatticePtr boolean;
  JoinMap upsilon;
};

BooleanCover boolean_cover(const LatticePtr& t);

// Named lattices.  chain(n) has elements 0 < 1 < ... < n.
LatticePtr chain(std::size_t n);
// Subsets of {0..k-1}; element index equals the subset mask.
LatticePtr boolean_lattice(std::size_t k);
// Bottom 0, atoms 1 2 3, top 4.
LatticePtr m3();
// Bottom 0, 1 < 2 on one side, 3 on the other, top 4.
LatticePtr n5();
// Pairs (a, b) numbered a * |B| + b, ordered componentwise.
LatticePtr product(const LatticePtr& a, const LatticePtr& b);

}  // namespace cfl
