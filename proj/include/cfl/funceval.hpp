#pragma once

#include <optional>
#include <vector>

#include "cfl/exalg.hpp"
#include "cfl/latbase.hpp"
#include "cfl/latmor.hpp"

namespace cfl {

// Largest number of basis functions |T|^|X| allowed for one matrix dimension.
inline constexpr std::size_t kMaxDimension = 20000;

// |t|^points, or std::length_error past kMaxDimension.
std::size_t function_count(std::size_t lattice_size, std::size_t points);

// A map {0..points-1} -> T.  Basis index is sum values[i] * |T|^i.
struct LatticeFunction {
  LatticePtr lattice;
  std::vector<Element> values;

  std::size_t index() const;
  bool operator==(const LatticeFunction& o) const {
    return values == o.values && same_lattice(lattice, o.lattice);
  }
};

LatticeFunction decode_function(const LatticePtr& t, std::size_t points, std::size_t index);
void decode_values(std::size_t base, std::size_t index, std::vector<Element>& values);

// (r phi)(y) = join of phi(x) over (y, x) in r; the empty join is the bottom.
// With phi valued in an opposite lattice this is the meet action on T.
LatticeFunction act(const Correspondence& r, const LatticeFunction& phi);

// Star action on T^op-valued functions: (q * psi)(y) = meet in T of psi(x) over
// (y, x) in q.  psi.lattice must be the opposite of t; the empty meet is top(t).
LatticeFunction star_act(const Correspondence& q, const LatticeFunction& psi);

// Element of the free module on functions points -> lattice.
struct ModVec {
  LatticePtr lattice;
  std::size_t points = 0;
  exalg::Vector<Integer> coeffs;

  static ModVec zero(const LatticePtr& t, std::size_t points);
  static ModVec basis(const LatticeFunction& phi);
  bool operator==(const ModVec& o) const;
};

ModVec act_mod(const Correspondence& r, const ModVec& v);
// Applies f to values: phi -> sum of c (g after phi) over terms c g of f.
ModVec lin_apply(const LinMorphism& f, const ModVec& v);

// {(x, e) : e <= phi(x)} as a correspondence from the irreducibles to X.
Correspondence gamma_corr(const LatticeFunction& phi, const Irreducibles& irr);
Correspondence gamma_corr(const LatticeFunction& phi);

// Sum over rho <= phi of prod_x mu(rho(x), phi(x)) rho, read in F_{T^op}(X).
ModVec dual_star(const LatticeFunction& phi, const LatticePtr& t_op);
ModVec dual_star(const LatticeFunction& phi, const LatticePtr& t_op, const MobiusTable& mu);
ModVec dual_star(const LatticeFunction& phi);

// Signed sum over subsets A of the irreducibles of the maps eta_A, where
// eta_A(e) = r(e) on A and e elsewhere, read in F_{T^op}(E).
ModVec gamma_t(const LatticePtr& t, const LatticePtr& t_op);
ModVec gamma_t(const LatticePtr& t);

// The inclusion of the irreducibles, as a function on E.
LatticeFunction iota(const LatticePtr& t);

// Indices of the functions whose image contains every irreducible.
std::vector<std::size_t> h_quotient_basis(const LatticePtr& t, std::size_t points);

// For s in C(X, E) with s r = s, some u in C(E, X) with u s = r, if one exists.
// r is the order of e (pairs (e, f) with e <= f).
std::optional<Correspondence> retraction(const Poset& e, const Correspondence& s);
inline bool retraction_exists(const Poset& e, const Correspondence& s) {
  return retraction(e, s).has_value();
}

// 0/1 matrix with bit-packed rows.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= bit(j % 64); }
  bool row_zero(std::size_t i) const;
  bool col_zero(std::size_t j) const;
  std::size_t ones() const;

  template <class S>
  exalg::Matrix<S> dense() const {
    exalg::Matrix<S> m(static_cast<exalg::Index>(rows_), static_cast<exalg::Index>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(static_cast<exalg::Index>(i), static_cast<exalg::Index>(j)) = S(at(i, j) ? 1 : 0);
    return m;
  }

  // Drops zero rows and columns and repeated rows and columns; rank is kept.
  exalg::IntMatrix compressed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Mask> bits_;
};

std::size_t rank(const IncidenceMatrix& m, const exalg::Ring& ring = exalg::Ring::rational());

// The data indexing the rows of the theta matrix: upper sets of the
// irreducible poset of t, the row functions X -> upper sets being numbered
// like lattice functions.
struct ThetaFrame {
  LatticePtr t;
  Irreducibles irr;
  IdealLattice upper;
  std::vector<Mask> down_irr;  // element -> irreducibles below it, as a mask over E
};

ThetaFrame theta_frame(const LatticePtr& t);

// Rows psi: X -> upper sets, columns phi: X -> t, entry 1 iff
// Gamma_psi^op Gamma_phi equals the opposite order on E.
IncidenceMatrix theta_matrix(const ThetaFrame& frame, std::size_t points);
inline IncidenceMatrix theta_matrix(const LatticePtr& t, std::size_t points) {
  return theta_matrix(theta_frame(t), points);
}
std::size_t theta_rank(const LatticePtr& t, std::size_t points,
                       const exalg::Ring& ring = exalg::Ring::rational());

// The six equivalent descriptions of a theta entry; psi maps points to upper
// sets of the irreducible poset, as masks over E.
struct ThetaConditions {
  bool a = false;
  bool b = false;
  bool c = false;
  bool d = false;
  bool e = false;
  bool f = false;

  bool agree() const { return a == b && b == c && c == d && d == e && e == f; }
};

ThetaConditions theta_conditions(const ThetaFrame& frame, const std::vector<Element>& phi,
                                 const std::vector<Mask>& psi);

// 1 iff phi <= psi pointwise in t.
bool pairing(const Lattice& t, const std::vector<Element>& phi, const std::vector<Element>& psi);
// Rows phi: X -> t, columns psi: X -> t^op, both in basis order.
exalg::IntMatrix pairing_matrix(const Lattice& t, std::size_t points);
// (v, w) with v in F_t(X) and w in F_{t^op}(X).
Integer pair_vectors(const Lattice& t, const ModVec& v, const ModVec& w);

// Distinct nonzero vectors s * gamma_t over all s in C(X, E), as columns in
// F_{t^op}(X).
exalg::Matrix<Integer> gamma_span_vectors(const LatticePtr& t, std::size_t points);
std::size_t gamma_span_rank(const LatticePtr& t, std::size_t points,
                            const exalg::Ring& ring = exalg::Ring::rational());

struct OrthResult {
  bool equal = false;
  std::size_t kernel_dim = 0;      // of the theta matrix
  std::size_t complement_dim = 0;  // of the gamma span under the pairing
};

OrthResult orth_check(const LatticePtr& t, std::size_t points,
                      const exalg::Ring& ring = exalg::Ring::rational());

// Fundamental module on an order r of E: coefficients over the basis
// delta_sigma f_r, sigma running through permutations of E in lexicographic order.
struct FundElement {
  std::size_t points = 0;
  exalg::Vector<Integer> coeffs;

  static FundElement zero(std::size_t points);
  static FundElement basis(std::size_t points, std::size_t sigma_index);
  bool operator==(const FundElement& o) const;
};

std::size_t permutation_index(const Permutation& p);
FundElement fund_act(const Correspondence& r, const Correspondence& q, const FundElement& v);

// Rank of the operator r^op on F_{t}(E) for an order r on E.
std::size_t fixed_rank(const LatticePtr& t, const Poset& r,
                       const exalg::Ring& ring = exalg::Ring::rational());

// sum_{i=0}^{n} (-1)^{n-i} C(n, i) (i+1)^points.
Integer total_rank_formula(std::size_t n, std::size_t points);

}  // namespace cfl
