#include "cfl/funceval.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace cfl {

using exalg::Index;

std::size_t function_count(std::size_t lattice_size, std::size_t points) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < points; ++i) {
    n *= lattice_size;
    if (n > kMaxDimension)
      throw std::length_error(std::to_string(lattice_size) + "^" + std::to_string(points) +
                              " basis functions exceed the limit of " +
                              std::to_string(kMaxDimension));
  }
  return n;
}

std::size_t LatticeFunction::index() const {
  std::size_t idx = 0;
  for (std::size_t i = values.size(); i-- > 0;) idx = idx * lattice->size() + values[i];
  return idx;
}

void decode_values(std::size_t base, std::size_t index, std::vector<Element>& values) {
  for (auto& v : values) {
    v = static_cast<Element>(index % base);
    index /= base;
  }
}

LatticeFunction decode_function(const LatticePtr& t, std::size_t points, std::size_t index) {
  LatticeFunction f{t, std::vector<Element>(points)};
  decode_values(t->size(), index, f.values);
  return f;
}

LatticeFunction act(const Correspondence& r, const LatticeFunction& phi) {
  if (r.src_size() != phi.values.size()) throw std::invalid_argument("act: source size mismatch");
  const Lattice& t = *phi.lattice;
  LatticeFunction out{phi.lattice, std::vector<Element>(r.dst_size())};
  for (std::size_t y = 0; y < r.dst_size(); ++y) {
    Element acc = t.bottom();
    for (Mask m = r.row(y); m; m &= m - 1) acc = t.join(acc, phi.values[__builtin_ctzll(m)]);
    out.values[y] = acc;
  }
  return out;
}

// Joins in the opposite lattice are meets in t and its bottom is top(t).
LatticeFunction star_act(const Correspondence& q, const LatticeFunction& psi) { return act(q, psi); }

ModVec ModVec::zero(const LatticePtr& t, std::size_t points) {
  const auto n = static_cast<Index>(function_count(t->size(), points));
  return ModVec{t, points, exalg::Vector<Integer>::Zero(n)};
}

ModVec ModVec::basis(const LatticeFunction& phi) {
  ModVec v = zero(phi.lattice, phi.values.size());
  v.coeffs(static_cast<Index>(phi.index())) = 1;
  return v;
}

bool ModVec::operator==(const ModVec& o) const {
  return points == o.points && same_lattice(lattice, o.lattice) && coeffs == o.coeffs;
}

ModVec act_mod(const Correspondence& r, const ModVec& v) {
  if (r.src_size() != v.points) throw std::invalid_argument("act_mod: source size mismatch");
  ModVec out = ModVec::zero(v.lattice, r.dst_size());
  LatticeFunction phi{v.lattice, std::vector<Element>(v.points)};
  for (Index i = 0; i < v.coeffs.size(); ++i) {
    if (v.coeffs(i) == 0) continue;
    decode_values(v.lattice->size(), static_cast<std::size_t>(i), phi.values);
    out.coeffs(static_cast<Index>(act(r, phi).index())) += v.coeffs(i);
  }
  return out;
}

ModVec lin_apply(const LinMorphism& f, const ModVec& v) {
  if (!same_lattice(f.src(), v.lattice)) throw std::invalid_argument("lin_apply: lattice mismatch");
  ModVec out = ModVec::zero(f.dst(), v.points);
  LatticeFunction phi{v.lattice, std::vector<Element>(v.points)};
  LatticeFunction img{f.dst(), std::vector<Element>(v.points)};
  for (Index i = 0; i < v.coeffs.size(); ++i) {
    if (v.coeffs(i) == 0) continue;
    decode_values(v.lattice->size(), static_cast<std::size_t>(i), phi.values);
    for (const auto& [g, c] : f.terms()) {
      for (std::size_t x = 0; x < v.points; ++x) img.values[x] = g[phi.values[x]];
      out.coeffs(static_cast<Index>(img.index())) += v.coeffs(i) * c;
    }
  }
  return out;
}

Correspondence gamma_corr(const LatticeFunction& phi, const Irreducibles& irr) {
  Correspondence g(phi.values.size(), irr.elements.size());
  for (std::size_t x = 0; x < phi.values.size(); ++x)
    for (std::size_t e = 0; e < irr.elements.size(); ++e)
      if (phi.lattice->leq(irr.elements[e], phi.values[x])) g.insert(x, e);
  return g;
}

Correspondence gamma_corr(const LatticeFunction& phi) {
  return gamma_corr(phi, irreducibles(*phi.lattice));
}

ModVec dual_star(const LatticeFunction& phi) { return dual_star(phi, opposite(phi.lattice)); }

ModVec dual_star(const LatticeFunction& phi, const LatticePtr& t_op) {
  return dual_star(phi, t_op, mobius(*phi.lattice));
}

ModVec dual_star(const LatticeFunction& phi, const LatticePtr& t_op, const MobiusTable& mu) {
  const Lattice& t = *phi.lattice;
  const std::size_t points = phi.values.size();
  ModVec out = ModVec::zero(t_op, points);
  std::vector<std::vector<Element>> below(points);
  for (std::size_t x = 0; x < points; ++x)
    for (Mask m = t.down(phi.values[x]); m; m &= m - 1)
      if (mu(__builtin_ctzll(m), phi.values[x]) != 0) below[x].push_back(__builtin_ctzll(m));
  std::vector<std::size_t> pick(points, 0);
  LatticeFunction rho{t_op, std::vector<Element>(points)};
  for (;;) {
    Integer w = 1;
    for (std::size_t x = 0; x < points; ++x) {
      rho.values[x] = below[x][pick[x]];
      w *= mu(rho.values[x], phi.values[x]);
    }
    out.coeffs(static_cast<Index>(rho.index())) += w;
    std::size_t pos = 0;
    while (pos < points && ++pick[pos] == below[pos].size()) pick[pos++] = 0;
    if (pos == points) return out;
  }
}

LatticeFunction iota(const LatticePtr& t) { return LatticeFunction{t, irreducibles(*t).elements}; }

ModVec gamma_t(const LatticePtr& t) { return gamma_t(t, opposite(t)); }

ModVec gamma_t(const LatticePtr& t, const LatticePtr& t_op) {
  const Irreducibles irr = irreducibles(*t);
  const std::size_t k = irr.elements.size();
  ModVec out = ModVec::zero(t_op, k);
  LatticeFunction eta{t_op, std::vector<Element>(k)};
  for (Mask a = 0; a < (Mask{1} << k); ++a) {
    for (std::size_t e = 0; e < k; ++e)
      eta.values[e] = (a & bit(e)) ? r_of(*t, irr.elements[e]) : irr.elements[e];
    out.coeffs(static_cast<Index>(eta.index())) += popcount(a) % 2 == 0 ? 1 : -1;
  }
  return out;
}

std::vector<std::size_t> h_quotient_basis(const LatticePtr& t, std::size_t points) {
  const std::size_t n = function_count(t->size(), points);
  Mask irr_mask = 0;
  for (Element e : irreducibles(*t).elements) irr_mask |= bit(e);
  std::vector<std::size_t> out;
  std::vector<Element> values(points);
  for (std::size_t i = 0; i < n; ++i) {
    decode_values(t->size(), i, values);
    Mask image = 0;
    for (Element v : values) image |= bit(v);
    if ((irr_mask & ~image) == 0) out.push_back(i);
  }
  return out;
}

std::optional<Correspondence> retraction(const Poset& e, const Correspondence& s) {
  if (s.src_size() != e.size()) throw std::invalid_argument("retraction: shape mismatch");
  if (!(s * e.relation() == s)) throw std::invalid_argument("retraction: s r must equal s");
  Correspondence u(e.size(), s.dst_size());
  // Taking every admissible x for each row gives the largest candidate.
  for (std::size_t a = 0; a < e.size(); ++a) {
    const Mask target = e.up(a);
    Mask covered = 0;
    for (std::size_t x = 0; x < s.dst_size(); ++x) {
      if ((s.row(x) & ~target) == 0) {
        u.insert(a, x);
        covered |= s.row(x);
      }
    }
    if (covered != target) return std::nullopt;
  }
  return u;
}

IncidenceMatrix::IncidenceMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

bool IncidenceMatrix::row_zero(std::size_t i) const {
  for (std::size_t w = 0; w < words_; ++w)
    if (bits_[i * words_ + w]) return false;
  return true;
}

bool IncidenceMatrix::col_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (at(i, j)) return false;
  return true;
}

std::size_t IncidenceMatrix::ones() const {
  std::size_t n = 0;
  for (Mask w : bits_) n += popcount(w);
  return n;
}

exalg::IntMatrix IncidenceMatrix::compressed() const {
  std::set<std::vector<Mask>> seen_rows;
  std::vector<std::size_t> keep_rows;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (row_zero(i)) continue;
    std::vector<Mask> key(bits_.begin() + static_cast<std::ptrdiff_t>(i * words_),
                          bits_.begin() + static_cast<std::ptrdiff_t>((i + 1) * words_));
    if (seen_rows.insert(std::move(key)).second) keep_rows.push_back(i);
  }
  std::set<std::vector<Mask>> seen_cols;
  std::vector<std::size_t> keep_cols;
  const std::size_t cw = (keep_rows.size() + 63) / 64;
  for (std::size_t j = 0; j < cols_; ++j) {
    std::vector<Mask> key(cw, 0);
    bool any = false;
    for (std::size_t r = 0; r < keep_rows.size(); ++r)
      if (at(keep_rows[r], j)) {
        key[r / 64] |= bit(r % 64);
        any = true;
      }
    if (any && seen_cols.insert(std::move(key)).second) keep_cols.push_back(j);
  }
  exalg::IntMatrix m(static_cast<Index>(keep_rows.size()), static_cast<Index>(keep_cols.size()));
  for (std::size_t r = 0; r < keep_rows.size(); ++r)
    for (std::size_t c = 0; c < keep_cols.size(); ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = at(keep_rows[r], keep_cols[c]) ? 1 : 0;
  return m;
}

std::size_t rank(const IncidenceMatrix& m, const exalg::Ring& ring) {
  return exalg::rank(m.compressed(), ring);
}

ThetaFrame theta_frame(const LatticePtr& t) {
  ThetaFrame f{t, irreducibles(*t), {}, std::vector<Mask>(t->size(), 0)};
  f.upper = ideal_lattice(f.irr.order, IdealKind::upper);
  for (std::size_t x = 0; x < t->size(); ++x)
    for (std::size_t e = 0; e < f.irr.elements.size(); ++e)
      if (t->leq(f.irr.elements[e], x)) f.down_irr[x] |= bit(e);
  return f;
}

IncidenceMatrix theta_matrix(const ThetaFrame& frame, std::size_t points) {
  const std::size_t nu = frame.upper.ideals.size();
  const std::size_t nt = frame.t->size();
  const std::size_t rows = function_count(nu, points);
  const std::size_t cols = function_count(nt, points);
  const std::size_t k = frame.irr.elements.size();
  IncidenceMatrix m(rows, cols);

  std::vector<Mask> col_down(cols * points);
  std::vector<Element> values(points);
  for (std::size_t c = 0; c < cols; ++c) {
    decode_values(nt, c, values);
    for (std::size_t x = 0; x < points; ++x) col_down[c * points + x] = frame.down_irr[values[x]];
  }
  std::vector<Mask> target(k);
  for (std::size_t f = 0; f < k; ++f) target[f] = frame.irr.order.down(f);

  std::vector<Mask> psi(points);
  std::vector<Mask> prod(k);
  for (std::size_t r = 0; r < rows; ++r) {
    decode_values(nu, r, values);
    for (std::size_t x = 0; x < points; ++x) psi[x] = frame.upper.ideals[values[x]];
    for (std::size_t c = 0; c < cols; ++c) {
      std::fill(prod.begin(), prod.end(), 0);
      const Mask* d = &col_down[c * points];
      for (std::size_t x = 0; x < points; ++x)
        for (Mask s = psi[x]; s; s &= s - 1) prod[__builtin_ctzll(s)] |= d[x];
      bool hit = true;
      for (std::size_t f = 0; f < k && hit; ++f) hit = prod[f] == target[f];
      if (hit) m.set(r, c);
    }
  }
  return m;
}

std::size_t theta_rank(const LatticePtr& t, std::size_t points, const exalg::Ring& ring) {
  return rank(theta_matrix(t, points), ring);
}

ThetaConditions theta_conditions(const ThetaFrame& frame, const std::vector<Element>& phi,
                                 const std::vector<Mask>& psi) {
  const Lattice& t = *frame.t;
  const Poset& order = frame.irr.order;
  const std::vector<Element>& iot = frame.irr.elements;
  const std::size_t k = iot.size();
  const std::size_t points = phi.size();
  if (psi.size() != points) throw std::invalid_argument("theta_conditions: size mismatch");
  for (Mask m : psi)
    if ((m & ~low_bits(k)) || !order.is_up_set(m))
      throw std::invalid_argument("theta_conditions: psi value is not an upper set");

  // Gamma_psi^op in C(E, X) and Gamma_phi in C(X, E).
  Correspondence gpsi_op(k, points);
  for (std::size_t x = 0; x < points; ++x)
    for (Mask s = psi[x]; s; s &= s - 1) gpsi_op.insert(__builtin_ctzll(s), x);
  Correspondence gphi(points, k);
  for (std::size_t x = 0; x < points; ++x) gphi.set_row(x, frame.down_irr[phi[x]]);
  const Correspondence prod = gpsi_op * gphi;
  const Correspondence r_op = opposite(order.relation());

  ThetaConditions out;
  {
    bool ok = true;
    for (std::size_t e = 0; e < k && ok; ++e) {
      Element acc = t.bottom();
      for (Mask s = gpsi_op.row(e); s; s &= s - 1) acc = t.join(acc, phi[__builtin_ctzll(s)]);
      ok = acc == iot[e];
    }
    out.a = ok;
  }
  {
    bool ok = true;
    for (std::size_t f = 0; f < k && ok; ++f) {
      Element acc = t.bottom();
      for (Mask s = prod.row(f); s; s &= s - 1) acc = t.join(acc, iot[__builtin_ctzll(s)]);
      ok = acc == iot[f];
    }
    out.b = ok;
  }
  out.c = is_subset(Correspondence::identity(k), prod) && is_subset(prod, r_op);
  out.d = prod == r_op;
  {
    bool ok = true;
    for (std::size_t x = 0; x < points && ok; ++x) {
      Element m = t.top();
      for (Mask s = psi[x]; s; s &= s - 1) m = t.meet(m, iot[__builtin_ctzll(s)]);
      ok = t.leq(phi[x], m);
    }
    for (std::size_t e = 0; e < k && ok; ++e) {
      bool found = false;
      for (std::size_t x = 0; x < points && !found; ++x)
        found = phi[x] == iot[e] && psi[x] == order.up(e);
      ok = found;
    }
    out.e = ok;
  }
  {
    bool ok = true;
    for (std::size_t v = 0; v < t.size() && ok; ++v) {
      Mask allowed = 0;
      for (std::size_t e = 0; e < k; ++e)
        if (t.leq(v, iot[e])) allowed |= bit(e);
      Mask got = 0;
      for (std::size_t x = 0; x < points; ++x)
        if (phi[x] == v) got |= psi[x];
      ok = (got & ~allowed) == 0;
    }
    for (std::size_t e = 0; e < k && ok; ++e) {
      Mask got = 0;
      for (std::size_t x = 0; x < points; ++x)
        if (phi[x] == iot[e]) got |= psi[x];
      ok = got == order.up(e);
    }
    out.f = ok;
  }
  return out;
}

bool pairing(const Lattice& t, const std::vector<Element>& phi, const std::vector<Element>& psi) {
  if (phi.size() != psi.size()) throw std::invalid_argument("pairing: size mismatch");
  for (std::size_t x = 0; x < phi.size(); ++x)
    if (!t.leq(phi[x], psi[x])) return false;
  return true;
}

exalg::IntMatrix pairing_matrix(const Lattice& t, std::size_t points) {
  const std::size_t n = function_count(t.size(), points);
  exalg::IntMatrix m(static_cast<Index>(n), static_cast<Index>(n));
  std::vector<Element> phi(points);
  std::vector<Element> psi(points);
  for (std::size_t i = 0; i < n; ++i) {
    decode_values(t.size(), i, phi);
    for (std::size_t j = 0; j < n; ++j) {
      decode_values(t.size(), j, psi);
      m(static_cast<Index>(i), static_cast<Index>(j)) = pairing(t, phi, psi) ? 1 : 0;
    }
  }
  return m;
}

Integer pair_vectors(const Lattice& t, const ModVec& v, const ModVec& w) {
  if (v.points != w.points) throw std::invalid_argument("pair_vectors: size mismatch");
  Integer sum = 0;
  std::vector<Element> phi(v.points);
  std::vector<Element> psi(w.points);
  for (Index i = 0; i < v.coeffs.size(); ++i) {
    if (v.coeffs(i) == 0) continue;
    decode_values(t.size(), static_cast<std::size_t>(i), phi);
    for (Index j = 0; j < w.coeffs.size(); ++j) {
      if (w.coeffs(j) == 0) continue;
      decode_values(t.size(), static_cast<std::size_t>(j), psi);
      if (pairing(t, phi, psi)) sum += v.coeffs(i) * w.coeffs(j);
    }
  }
  return sum;
}

exalg::Matrix<Integer> gamma_span_vectors(const LatticePtr& t, std::size_t points) {
  const Irreducibles irr = irreducibles(*t);
  const std::size_t k = irr.elements.size();
  const std::size_t dim = function_count(t->size(), points);
  if (points * k > 24) throw std::length_error("gamma span: too many correspondences to enumerate");
  const std::size_t subsets = std::size_t{1} << k;

  // meet_val[row * subsets + a]: meet over e in row of eta_a(e).
  std::vector<Element> meet_val(subsets * subsets);
  for (std::size_t a = 0; a < subsets; ++a) {
    std::vector<Element> eta(k);
    for (std::size_t e = 0; e < k; ++e)
      eta[e] = (a & bit(e)) ? r_of(*t, irr.elements[e]) : irr.elements[e];
    for (std::size_t row = 0; row < subsets; ++row) {
      Element m = t->top();
      for (Mask s = row; s; s &= s - 1) m = t->meet(m, eta[__builtin_ctzll(s)]);
      meet_val[row * subsets + a] = m;
    }
  }

  std::set<std::vector<std::pair<std::size_t, std::int64_t>>> distinct;
  std::map<std::size_t, std::int64_t> acc;
  const std::size_t total = std::size_t{1} << (points * k);
  for (std::size_t s = 0; s < total; ++s) {
    acc.clear();
    for (std::size_t a = 0; a < subsets; ++a) {
      std::size_t idx = 0;
      for (std::size_t x = points; x-- > 0;) {
        const std::size_t row = (s >> (x * k)) & (subsets - 1);
        idx = idx * t->size() + meet_val[row * subsets + a];
      }
      acc[idx] += popcount(a) % 2 == 0 ? 1 : -1;
    }
    std::vector<std::pair<std::size_t, std::int64_t>> v;
    for (auto [i, c] : acc)
      if (c != 0) v.emplace_back(i, c);
    if (!v.empty()) distinct.insert(std::move(v));
  }
  exalg::Matrix<Integer> out =
      exalg::Matrix<Integer>::Zero(static_cast<Index>(dim), static_cast<Index>(distinct.size()));
  Index col = 0;
  for (const auto& v : distinct) {
    for (auto [i, c] : v) out(static_cast<Index>(i), col) = c;
    ++col;
  }
  return out;
}

std::size_t gamma_span_rank(const LatticePtr& t, std::size_t points, const exalg::Ring& ring) {
  return exalg::rank(gamma_span_vectors(t, points).transpose(), ring);
}

OrthResult orth_check(const LatticePtr& t, std::size_t points, const exalg::Ring& ring) {
  const IncidenceMatrix theta = theta_matrix(t, points);
  const exalg::Matrix<Integer> w = gamma_span_vectors(t, points);
  const exalg::IntMatrix p = pairing_matrix(*t, points);
  return exalg::with_field(ring, [&]<class F>() {
    const exalg::Matrix<F> kernel = exalg::nullspace(theta.dense<F>());
    const exalg::Matrix<F> pw =
        exalg::multiply(exalg::detail::to_field<F>(p), exalg::detail::to_field<F>(w));
    const exalg::Matrix<F> complement = exalg::nullspace<F>(pw.transpose());
    OrthResult r;
    r.kernel_dim = static_cast<std::size_t>(kernel.cols());
    r.complement_dim = static_cast<std::size_t>(complement.cols());
    r.equal = exalg::subspace_equal(kernel, complement);
    return r;
  });
}

FundElement FundElement::zero(std::size_t points) {
  std::size_t n = 1;
  for (std::size_t i = 2; i <= points; ++i) n *= i;
  return FundElement{points, exalg::Vector<Integer>::Zero(static_cast<Index>(n))};
}

FundElement FundElement::basis(std::size_t points, std::size_t sigma_index) {
  FundElement v = zero(points);
  v.coeffs(static_cast<Index>(sigma_index)) = 1;
  return v;
}

bool FundElement::operator==(const FundElement& o) const {
  return points == o.points && coeffs == o.coeffs;
}

std::size_t permutation_index(const Permutation& p) {
  // Lehmer code in lexicographic order.
  const std::size_t n = p.size();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p(j) < p(i)) ++smaller;
    idx = idx * (n - i) + smaller;
  }
  return idx;
}

FundElement fund_act(const Correspondence& r, const Correspondence& q, const FundElement& v) {
  const std::size_t n = r.dst_size();
  if (q.dst_size() != n || q.src_size() != n || v.points != n)
    throw std::invalid_argument("fund_act: size mismatch");
  const std::vector<Permutation> perms = all_permutations(n);
  const Correspondence id = Correspondence::identity(n);
  FundElement out = FundElement::zero(n);
  for (std::size_t s = 0; s < perms.size(); ++s) {
    const Integer& c = v.coeffs(static_cast<Index>(s));
    if (c == 0) continue;
    const Correspondence conj = conjugate(perms[s], r);
    const Permutation* tau = nullptr;
    for (const Permutation& t : perms) {
      const Correspondence m = delta(t.inverse()) * q;
      if (is_subset(id, m) && is_subset(m, conj)) {
        if (tau != nullptr) throw std::logic_error("fund_act: the permutation is not unique");
        tau = &t;
      }
    }
    if (tau != nullptr) out.coeffs(static_cast<Index>(permutation_index(*tau * perms[s]))) += c;
  }
  return out;
}

std::size_t fixed_rank(const LatticePtr& t, const Poset& r, const exalg::Ring& ring) {
  const std::size_t points = r.size();
  const std::size_t n = function_count(t->size(), points);
  const Correspondence r_op = opposite(r.relation());
  IncidenceMatrix m(n, n);
  LatticeFunction phi{t, std::vector<Element>(points)};
  for (std::size_t c = 0; c < n; ++c) {
    decode_values(t->size(), c, phi.values);
    m.set(act(r_op, phi).index(), c);
  }
  return rank(m, ring);
}

Integer total_rank_formula(std::size_t n, std::size_t points) {
  Integer sum = 0;
  Integer binom = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    Integer term = binom * boost::multiprecision::pow(Integer(i + 1), static_cast<unsigned>(points));
    if ((n - i) % 2 == 0)
      sum += term;
    else
      sum -= term;
    binom = binom * (n - i) / (i + 1);
  }
  return sum;
}

}  // namespace cfl
