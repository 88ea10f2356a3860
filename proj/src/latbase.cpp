#include "cfl/latbase.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cfl {

namespace {

std::string error_text(LatticeError::Kind kind, Element a, Element b) {
  const std::string pair = "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
  switch (kind) {
    case LatticeError::Kind::empty: return "a lattice needs at least one element";
    case LatticeError::Kind::not_antisymmetric: return "not antisymmetric at " + pair;
    case LatticeError::Kind::no_join: return "no join for " + pair;
    case LatticeError::Kind::no_meet: return "no meet for " + pair;
    case LatticeError::Kind::too_large: return "more than 64 elements";
  }
  return "lattice error";
}

// Indices in an order compatible with <=.
std::vector<Element> linear_extension(const Poset& p) {
  std::vector<Element> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Element>(i);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return popcount(p.down(a)) < popcount(p.down(b));
  });
  return order;
}

}  // namespace

LatticeError::LatticeError(Kind kind, Element a, Element b)
    : std::runtime_error(error_text(kind, a, b)), kind_(kind), a_(a), b_(b) {}

Poset::Poset(Correspondence leq) : leq_(std::move(leq)) {
  const std::size_t n = leq_.dst_size();
  if (leq_.src_size() != n) throw std::invalid_argument("order relation must be square");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq_.contains(a, b) && leq_.contains(b, a))
        throw LatticeError(LatticeError::Kind::not_antisymmetric, static_cast<Element>(a),
                           static_cast<Element>(b));
  if (!order_flags(leq_).order()) throw std::invalid_argument("relation is not a partial order");
  down_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) down_[a] = leq_.column(a);
}

Poset Poset::from_leq(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs) {
  check_set_size(n);
  return Poset(reflexive_transitive_closure(Correspondence::from_pairs(n, n, pairs)));
}

Poset Poset::antichain(std::size_t n) { return Poset(Correspondence::identity(n)); }

Poset Poset::opposite() const { return Poset(cfl::opposite(leq_)); }

Poset Poset::restrict_to(const std::vector<Element>& elements) const {
  Correspondence r(elements.size(), elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (leq(elements[i], elements[j])) r.insert(i, j);
  return Poset(std::move(r));
}

bool Poset::is_down_set(Mask m) const {
  for (Mask rest = m; rest; rest &= rest - 1)
    if (down_[__builtin_ctzll(rest)] & ~m) return false;
  return true;
}

bool Poset::is_up_set(Mask m) const {
  for (Mask rest = m; rest; rest &= rest - 1)
    if (up(__builtin_ctzll(rest)) & ~m) return false;
  return true;
}

LatticePtr Lattice::make(Poset order, std::vector<std::string> names) {
  const std::size_t n = order.size();
  if (n == 0) throw LatticeError(LatticeError::Kind::empty, 0, 0);
  if (!names.empty() && names.size() != n)
    throw std::invalid_argument("names must match the number of elements");
  std::shared_ptr<Lattice> t(new Lattice());
  t->order_ = std::move(order);
  t->names_ = std::move(names);
  t->join_.assign(n * n, 0);
  t->meet_.assign(n * n, 0);
  const Poset& p = t->order_;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Mask ub = p.up(a) & p.up(b);
      const Mask lb = p.down(a) & p.down(b);
      int j = -1;
      int m = -1;
      for (Mask rest = ub; rest && j < 0; rest &= rest - 1) {
        const int u = __builtin_ctzll(rest);
        if ((ub & ~p.up(u)) == 0) j = u;
      }
      for (Mask rest = lb; rest && m < 0; rest &= rest - 1) {
        const int l = __builtin_ctzll(rest);
        if ((lb & ~p.down(l)) == 0) m = l;
      }
      if (j < 0)
        throw LatticeError(LatticeError::Kind::no_join, static_cast<Element>(a),
                           static_cast<Element>(b));
      if (m < 0)
        throw LatticeError(LatticeError::Kind::no_meet, static_cast<Element>(a),
                           static_cast<Element>(b));
      t->join_[a * n + b] = t->join_[b * n + a] = static_cast<Element>(j);
      t->meet_[a * n + b] = t->meet_[b * n + a] = static_cast<Element>(m);
    }
  }
  Element bottom = 0;
  Element top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bottom = t->meet(bottom, a);
    top = t->join(top, a);
  }
  t->bottom_ = bottom;
  t->top_ = top;
  return t;
}

LatticePtr Lattice::from_leq(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs,
                             std::vector<std::string> names) {
  if (n == 0) throw LatticeError(LatticeError::Kind::empty, 0, 0);
  if (n > kMaxSetSize) throw LatticeError(LatticeError::Kind::too_large, 0, 0);
  return make(Poset::from_leq(n, pairs), std::move(names));
}

Element Lattice::join_all(Mask m) const {
  Element acc = bottom_;
  for (; m; m &= m - 1) acc = join(acc, __builtin_ctzll(m));
  return acc;
}

Element Lattice::meet_all(Mask m) const {
  Element acc = top_;
  for (; m; m &= m - 1) acc = meet(acc, __builtin_ctzll(m));
  return acc;
}

bool Lattice::is_chain() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) { return a == b || *a == *b; }

Element r_of(const Lattice& t, Element e) { return t.join_all(t.down(e) & ~bit(e)); }

Irreducibles irreducibles(const Lattice& t) {
  Irreducibles out;
  for (std::size_t e = 0; e < t.size(); ++e)
    if (e != t.bottom() && r_of(t, static_cast<Element>(e)) != e)
      out.elements.push_back(static_cast<Element>(e));
  out.order = t.poset().restrict_to(out.elements);
  return out;
}

Element IdealLattice::index_of(Mask m) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), m);
  if (it == ideals.end() || *it != m) throw std::out_of_range("not an ideal of this lattice");
  return static_cast<Element>(it - ideals.begin());
}

IdealLattice ideal_lattice(const Poset& p, IdealKind kind) {
  const std::size_t n = p.size();
  std::set<Mask> found{0};
  std::vector<Mask> work{0};
  while (!work.empty()) {
    const Mask cur = work.back();
    work.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if (cur & bit(x)) continue;
      const Mask need = (kind == IdealKind::lower ? p.down(x) : p.up(x)) & ~bit(x);
      if ((need & ~cur) != 0) continue;
      const Mask next = cur | bit(x);
      if (found.insert(next).second) {
        if (found.size() > kMaxSetSize) throw LatticeError(LatticeError::Kind::too_large, 0, 0);
        work.push_back(next);
      }
    }
  }
  IdealLattice out;
  out.ideals.assign(found.begin(), found.end());
  const std::size_t m = out.ideals.size();
  Correspondence inc(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if ((out.ideals[i] & ~out.ideals[j]) == 0) inc.insert(i, j);
  out.lattice = Lattice::make(Poset(std::move(inc)));
  return out;
}

std::vector<Element> principal_embed(const Poset& p, const IdealLattice& lower) {
  std::vector<Element> out(p.size());
  for (std::size_t e = 0; e < p.size(); ++e) out[e] = lower.index_of(p.down(e));
  return out;
}

bool is_distributive(const Lattice& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t.meet(a, t.join(b, c)) != t.join(t.meet(a, b), t.meet(a, c))) return false;
  return true;
}

MobiusTable::MobiusTable(const Poset& p) : n_(p.size()), values_(p.size() * p.size()) {
  const std::vector<Element> ext = linear_extension(p);
  for (std::size_t a = 0; a < n_; ++a) {
    for (Element b : ext) {
      if (!p.leq(a, b)) continue;
      if (b == a) {
        values_[a * n_ + b] = 1;
        continue;
      }
      Integer sum = 0;
      for (Mask m = p.up(a) & p.down(b) & ~bit(b); m; m &= m - 1)
        sum += values_[a * n_ + __builtin_ctzll(m)];
      values_[a * n_ + b] = -sum;
    }
  }
}

JoinMap canonical_surjection(const LatticePtr& t) {
  const Irreducibles irr = irreducibles(*t);
  const IdealLattice lower = ideal_lattice(irr.order, IdealKind::lower);
  JoinMap f{lower.lattice, t, std::vector<Element>(lower.ideals.size())};
  for (std::size_t i = 0; i < lower.ideals.size(); ++i) {
    Element acc = t->bottom();
    for (Mask m = lower.ideals[i]; m; m &= m - 1)
      acc = t->join(acc, irr.elements[__builtin_ctzll(m)]);
    f.images[i] = acc;
  }
  return f;
}

LatticePtr opposite(const LatticePtr& t) { return Lattice::make(t->poset().opposite(), t->names()); }

LatticePtr chain(std::size_t n) {
  if (n + 1 > kMaxSetSize) throw LatticeError(LatticeError::Kind::too_large, 0, 0);
  Correspondence r(n + 1, n + 1);
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = a; b <= n; ++b) r.insert(a, b);
  return Lattice::make(Poset(std::move(r)));
}

LatticePtr boolean_lattice(std::size_t k) {
  if (k > kMaxBooleanBase) throw LatticeError(LatticeError::Kind::too_large, 0, 0);
  const std::size_t n = std::size_t{1} << k;
  Correspondence r(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((a & ~b) == 0) r.insert(a, b);
  return Lattice::make(Poset(std::move(r)));
}

LatticePtr m3() { return Lattice::from_leq(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

LatticePtr n5() { return Lattice::from_leq(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

LatticePtr product(const LatticePtr& a, const LatticePtr& b) {
  const std::size_t na = a->size();
  const std::size_t nb = b->size();
  if (na * nb > kMaxSetSize) throw LatticeError(LatticeError::Kind::too_large, 0, 0);
  Correspondence r(na * nb, na * nb);
  for (std::size_t i = 0; i < na * nb; ++i)
    for (std::size_t j = 0; j < na * nb; ++j)
      if (a->leq(i / nb, j / nb) && b->leq(i % nb, j % nb)) r.insert(i, j);
  return Lattice::make(Poset(std::move(r)));
}

BooleanCover boolean_cover(const LatticePtr& t) {
  if (t->size() > kMaxBooleanBase) throw LatticeError(LatticeError::Kind::too_large, 0, 0);
  BooleanCover out;
  out.boolean = boolean_lattice(t->size());
  out.upsilon = JoinMap{out.boolean, t, std::vector<Element>(out.boolean->size())};
  for (std::size_t a = 0; a < out.boolean->size(); ++a) out.upsilon.images[a] = t->join_all(a);
  return out;
}

}  // namespace cfl
