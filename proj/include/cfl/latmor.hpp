#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cfl/exalg.hpp"
#include "cfl/latbase.hpp"

namespace cfl {

// f(bottom) = bottom and f(a v b) = f(a) v f(b) for all a, b.
bool check_join_map(const JoinMap& f);

JoinMap identity_map(const LatticePtr& t);
// g after f.
JoinMap compose(const JoinMap& g, const JoinMap& f);
inline JoinMap operator*(const JoinMap& g, const JoinMap& f) { return compose(g, f); }
bool operator==(const JoinMap& a, const JoinMap& b);

// Every join map src -> dst, ordered lexicographically by the images of the
// irreducibles of src.
std::vector<JoinMap> all_join_maps(const LatticePtr& src, const LatticePtr& dst);

// The right adjoint read on opposite lattices: f^op(t) = join of all x with
// f(x) <= t, as a join map dst^op -> src^op.
JoinMap adjoint_op(const JoinMap& f, const LatticePtr& dst_op, const LatticePtr& src_op);
JoinMap adjoint_op(const JoinMap& f);

// Formal linear combination of join maps src -> dst with integer coefficients.
// Terms are kept sorted by image vector with zero coefficients removed.
class LinMorphism {
 public:
  using Terms = std::map<std::vector<Element>, Integer>;

  LinMorphism(LatticePtr src, LatticePtr dst);
  explicit LinMorphism(const JoinMap& f);
  static LinMorphism identity(const LatticePtr& t);

  const LatticePtr& src() const { return src_; }
  const LatticePtr& dst() const { return dst_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::vector<Element>& images, const Integer& c);
  LinMorphism& operator+=(const LinMorphism& o);
  LinMorphism& operator-=(const LinMorphism& o);
  LinMorphism& operator*=(const Integer& c);

  bool operator==(const LinMorphism& o) const;

 private:
  LatticePtr src_;
  LatticePtr dst_;
  Terms terms_;
};

LinMorphism operator+(LinMorphism a, const LinMorphism& b);
LinMorphism operator-(LinMorphism a, const LinMorphism& b);
LinMorphism operator*(const Integer& c, LinMorphism a);
// g after f, extended bilinearly.
LinMorphism compose(const LinMorphism& g, const LinMorphism& f);
inline LinMorphism operator*(const LinMorphism& g, const LinMorphism& f) { return compose(g, f); }

// Strictly increasing tuples in a lattice.  Lower tuples avoid the top and are
// read as (b_0, ..., b_{n-1}) with b_n = top; upper tuples avoid the bottom and
// are read as (v_1, ..., v_n).
struct ChainTuple {
  enum class Kind { lower, upper };

  LatticePtr lattice;
  std::vector<Element> entries;
  Kind kind = Kind::lower;

  std::size_t length() const { return entries.size(); }
  bool operator==(const ChainTuple& o) const {
    return kind == o.kind && entries == o.entries && same_lattice(lattice, o.lattice);
  }
};

// Lexicographic order on element indices.
std::vector<ChainTuple> lower_tuples(const LatticePtr& t, std::size_t n);
std::vector<ChainTuple> upper_tuples(const LatticePtr& t, std::size_t n);
// Longest strictly increasing chain minus one (the height).
std::size_t height(const Lattice& t);

// t -> least h with t <= b_h, as a join map t -> chain(n).
JoinMap pi_of_tuple(const ChainTuple& b);
// h -> v_h and 0 -> bottom, as a join map chain(n) -> t.
JoinMap lambda_of_tuple(const ChainTuple& v);
// (-1)^n times the Mobius-weighted sum of the maps h -> a_h with
// a_h in [b_{h-1}, b_h]; terms with zero weight are dropped.
LinMorphism j_of_tuple(const ChainTuple& b);
LinMorphism j_of_tuple(const ChainTuple& b, const MobiusTable& mu);
// j of d after pi of c; d and c must have equal length.
LinMorphism f_dc(const ChainTuple& d, const ChainTuple& c);
LinMorphism f_dc(const ChainTuple& d, const ChainTuple& c, const MobiusTable& mu);

// On chain(n): 0 -> 0, h -> h for h in y, h -> h - 1 otherwise.  y is a mask
// over 1..n (bit h for h).
JoinMap rho_y(std::size_t n, Mask y);

// Sum of f_dc(b, b) over lower tuples b of length m of chain(n).
LinMorphism beta(std::size_t n, std::size_t m);
inline LinMorphism epsilon(std::size_t n) { return beta(n, n); }

// Sum of f_dc(b, b) over all lower tuples of t.
LinMorphism e_t(const LatticePtr& t);
LinMorphism e_t(const LatticePtr& t, const MobiusTable& mu);

// lambda(v) after pi(u) over all lengths n, u lower and v upper of length n,
// ordered by n, then u, then v.
std::vector<JoinMap> tot_basis(const LatticePtr& t);

// A join map sigma: t -> B(t) with upsilon after sigma the identity, if one
// exists.  Candidates are searched through their values on irreducibles.
std::optional<JoinMap> find_upsilon_section(const LatticePtr& t);

// Coefficients of alpha against a list of distinct join maps.  Throws
// std::invalid_argument if alpha uses a map outside the list.
exalg::Vector<Integer> lin_to_vector(const LinMorphism& alpha, const std::vector<JoinMap>& basis);

}  // namespace cfl
