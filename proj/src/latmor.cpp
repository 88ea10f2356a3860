#include "cfl/latmor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfl {

namespace {

void require_same(const LatticePtr& a, const LatticePtr& b, const char* what) {
  if (!same_lattice(a, b)) throw std::invalid_argument(std::string(what) + ": lattices differ");
}

}  // namespace

bool check_join_map(const JoinMap& f) {
  const Lattice& s = *f.src;
  const Lattice& d = *f.dst;
  if (f.images.size() != s.size()) return false;
  for (Element v : f.images)
    if (v >= d.size()) return false;
  if (f(s.bottom()) != d.bottom()) return false;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (f(s.join(a, b)) != d.join(f(a), f(b))) return false;
  return true;
}

JoinMap identity_map(const LatticePtr& t) {
  JoinMap f{t, t, std::vector<Element>(t->size())};
  for (std::size_t i = 0; i < t->size(); ++i) f.images[i] = static_cast<Element>(i);
  return f;
}

JoinMap compose(const JoinMap& g, const JoinMap& f) {
  require_same(g.src, f.dst, "compose");
  JoinMap h{f.src, g.dst, std::vector<Element>(f.images.size())};
  for (std::size_t t = 0; t < f.images.size(); ++t) h.images[t] = g(f(t));
  return h;
}

bool operator==(const JoinMap& a, const JoinMap& b) {
  return a.images == b.images && same_lattice(a.src, b.src) && same_lattice(a.dst, b.dst);
}

std::vector<JoinMap> all_join_maps(const LatticePtr& src, const LatticePtr& dst) {
  const Irreducibles irr = irreducibles(*src);
  const std::size_t k = irr.elements.size();
  std::vector<JoinMap> out;
  std::vector<Element> choice(k, 0);
  // Each join map is determined by its values on irreducibles.
  for (;;) {
    JoinMap f{src, dst, std::vector<Element>(src->size(), dst->bottom())};
    for (std::size_t t = 0; t < src->size(); ++t) {
      Element acc = dst->bottom();
      for (std::size_t i = 0; i < k; ++i)
        if (src->leq(irr.elements[i], t)) acc = dst->join(acc, choice[i]);
      f.images[t] = acc;
    }
    bool consistent = true;
    for (std::size_t i = 0; i < k && consistent; ++i)
      consistent = f.images[irr.elements[i]] == choice[i];
    if (consistent && check_join_map(f)) out.push_back(std::move(f));
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++choice[pos] < dst->size()) break;
      choice[pos] = 0;
      if (pos == 0) return out;
    }
    if (k == 0) return out;
  }
}

JoinMap adjoint_op(const JoinMap& f, const LatticePtr& dst_op, const LatticePtr& src_op) {
  const Lattice& s = *f.src;
  JoinMap g{dst_op, src_op, std::vector<Element>(f.dst->size())};
  for (std::size_t t = 0; t < f.dst->size(); ++t) {
    Mask below = 0;
    for (std::size_t x = 0; x < s.size(); ++x)
      if (f.dst->leq(f(x), t)) below |= bit(x);
    g.images[t] = s.join_all(below);
  }
  return g;
}

JoinMap adjoint_op(const JoinMap& f) { return adjoint_op(f, opposite(f.dst), opposite(f.src)); }

LinMorphism::LinMorphism(LatticePtr src, LatticePtr dst)
    : src_(std::move(src)), dst_(std::move(dst)) {}

LinMorphism::LinMorphism(const JoinMap& f) : src_(f.src), dst_(f.dst) { terms_[f.images] = 1; }

LinMorphism LinMorphism::identity(const LatticePtr& t) { return LinMorphism(identity_map(t)); }

void LinMorphism::add(const std::vector<Element>& images, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(images, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LinMorphism& LinMorphism::operator+=(const LinMorphism& o) {
  require_same(src_, o.src_, "add");
  require_same(dst_, o.dst_, "add");
  for (const auto& [img, c] : o.terms_) add(img, c);
  return *this;
}

LinMorphism& LinMorphism::operator-=(const LinMorphism& o) {
  require_same(src_, o.src_, "subtract");
  require_same(dst_, o.dst_, "subtract");
  for (const auto& [img, c] : o.terms_) add(img, -c);
  return *this;
}

LinMorphism& LinMorphism::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [img, v] : terms_) v *= c;
  return *this;
}

bool LinMorphism::operator==(const LinMorphism& o) const {
  return terms_ == o.terms_ && same_lattice(src_, o.src_) && same_lattice(dst_, o.dst_);
}

LinMorphism operator+(LinMorphism a, const LinMorphism& b) { return a += b; }
LinMorphism operator-(LinMorphism a, const LinMorphism& b) { return a -= b; }
LinMorphism operator*(const Integer& c, LinMorphism a) { return a *= c; }

LinMorphism compose(const LinMorphism& g, const LinMorphism& f) {
  require_same(g.src(), f.dst(), "compose");
  LinMorphism out(f.src(), g.dst());
  std::vector<Element> img(f.src()->size());
  for (const auto& [gi, gc] : g.terms()) {
    for (const auto& [fi, fc] : f.terms()) {
      for (std::size_t t = 0; t < fi.size(); ++t) img[t] = gi[fi[t]];
      out.add(img, gc * fc);
    }
  }
  return out;
}

namespace {

void extend_tuples(const LatticePtr& t, std::size_t n, Element excluded, std::vector<Element>& cur,
                   ChainTuple::Kind kind, std::vector<ChainTuple>& out) {
  if (cur.size() == n) {
    out.push_back(ChainTuple{t, cur, kind});
    return;
  }
  for (std::size_t e = 0; e < t->size(); ++e) {
    if (e == excluded) continue;
    if (!cur.empty() && !t->less(cur.back(), e)) continue;
    cur.push_back(static_cast<Element>(e));
    extend_tuples(t, n, excluded, cur, kind, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ChainTuple> lower_tuples(const LatticePtr& t, std::size_t n) {
  std::vector<ChainTuple> out;
  std::vector<Element> cur;
  extend_tuples(t, n, t->top(), cur, ChainTuple::Kind::lower, out);
  return out;
}

std::vector<ChainTuple> upper_tuples(const LatticePtr& t, std::size_t n) {
  std::vector<ChainTuple> out;
  std::vector<Element> cur;
  extend_tuples(t, n, t->bottom(), cur, ChainTuple::Kind::upper, out);
  return out;
}

std::size_t height(const Lattice& t) {
  // Longest chain ending at each element, processed along a linear extension.
  std::vector<Element> order(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) order[i] = static_cast<Element>(i);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return popcount(t.down(a)) < popcount(t.down(b));
  });
  std::vector<std::size_t> len(t.size(), 0);
  std::size_t best = 0;
  for (Element b : order) {
    for (Mask m = t.down(b) & ~bit(b); m; m &= m - 1)
      len[b] = std::max(len[b], len[__builtin_ctzll(m)] + 1);
    best = std::max(best, len[b]);
  }
  return best;
}

namespace {

void require_kind(const ChainTuple& b, ChainTuple::Kind kind, const char* what) {
  if (b.kind != kind) throw std::invalid_argument(std::string(what) + ": wrong tuple kind");
}

}  // namespace

JoinMap pi_of_tuple(const ChainTuple& b) {
  require_kind(b, ChainTuple::Kind::lower, "pi_of_tuple");
  const Lattice& t = *b.lattice;
  const std::size_t n = b.length();
  JoinMap f{b.lattice, chain(n), std::vector<Element>(t.size())};
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::size_t h = 0;
    while (h < n && !t.leq(x, b.entries[h])) ++h;
    f.images[x] = static_cast<Element>(h);
  }
  return f;
}

JoinMap lambda_of_tuple(const ChainTuple& v) {
  require_kind(v, ChainTuple::Kind::upper, "lambda_of_tuple");
  const std::size_t n = v.length();
  JoinMap f{chain(n), v.lattice, std::vector<Element>(n + 1)};
  f.images[0] = v.lattice->bottom();
  for (std::size_t h = 1; h <= n; ++h) f.images[h] = v.entries[h - 1];
  return f;
}

LinMorphism j_of_tuple(const ChainTuple& b) { return j_of_tuple(b, mobius(*b.lattice)); }

LinMorphism j_of_tuple(const ChainTuple& b, const MobiusTable& mu) {
  require_kind(b, ChainTuple::Kind::lower, "j_of_tuple");
  const Lattice& t = *b.lattice;
  const std::size_t n = b.length();
  LinMorphism out(chain(n), b.lattice);
  // Candidates a_h in [b_{h-1}, b_h] with nonzero weight, b_n = top.
  std::vector<std::vector<std::pair<Element, Integer>>> choices(n);
  for (std::size_t h = 1; h <= n; ++h) {
    const Element lo = b.entries[h - 1];
    const Element hi = h < n ? b.entries[h] : t.top();
    for (Mask m = t.up(lo) & t.down(hi); m; m &= m - 1) {
      const Element a = __builtin_ctzll(m);
      if (mu(lo, a) != 0) choices[h - 1].emplace_back(a, mu(lo, a));
    }
  }
  std::vector<std::size_t> pick(n, 0);
  for (const auto& c : choices)
    if (c.empty()) return out;
  std::vector<Element> img(n + 1);
  img[0] = t.bottom();
  const Integer sign = n % 2 == 0 ? 1 : -1;
  for (;;) {
    Integer w = sign;
    for (std::size_t h = 0; h < n; ++h) {
      img[h + 1] = choices[h][pick[h]].first;
      w *= choices[h][pick[h]].second;
    }
    out.add(img, w);
    std::size_t pos = n;
    bool more = false;
    while (pos > 0) {
      --pos;
      if (++pick[pos] < choices[pos].size()) {
        more = true;
        break;
      }
      pick[pos] = 0;
    }
    if (!more) return out;
  }
}

LinMorphism f_dc(const ChainTuple& d, const ChainTuple& c) { return f_dc(d, c, mobius(*d.lattice)); }

LinMorphism f_dc(const ChainTuple& d, const ChainTuple& c, const MobiusTable& mu) {
  if (d.length() != c.length()) throw std::invalid_argument("f_dc: tuples of different length");
  return j_of_tuple(d, mu) * LinMorphism(pi_of_tuple(c));
}

JoinMap rho_y(std::size_t n, Mask y) {
  const LatticePtr c = chain(n);
  JoinMap f{c, c, std::vector<Element>(n + 1)};
  f.images[0] = 0;
  for (std::size_t h = 1; h <= n; ++h)
    f.images[h] = static_cast<Element>((y & bit(h)) ? h : h - 1);
  return f;
}

LinMorphism beta(std::size_t n, std::size_t m) {
  const LatticePtr c = chain(n);
  const MobiusTable mu = mobius(*c);
  LinMorphism out(c, c);
  for (const ChainTuple& b : lower_tuples(c, m)) out += f_dc(b, b, mu);
  return out;
}

LinMorphism e_t(const LatticePtr& t) { return e_t(t, mobius(*t)); }

LinMorphism e_t(const LatticePtr& t, const MobiusTable& mu) {
  LinMorphism out(t, t);
  for (std::size_t n = 0; n <= height(*t); ++n)
    for (const ChainTuple& b : lower_tuples(t, n)) out += f_dc(b, b, mu);
  return out;
}

std::vector<JoinMap> tot_basis(const LatticePtr& t) {
  std::vector<JoinMap> out;
  for (std::size_t n = 0; n <= height(*t); ++n) {
    const auto us = lower_tuples(t, n);
    const auto vs = upper_tuples(t, n);
    std::vector<JoinMap> pis;
    std::vector<JoinMap> lambdas;
    for (const auto& u : us) pis.push_back(pi_of_tuple(u));
    for (const auto& v : vs) lambdas.push_back(lambda_of_tuple(v));
    for (const auto& pi : pis)
      for (const auto& la : lambdas) out.push_back(la * pi);
  }
  return out;
}

std::optional<JoinMap> find_upsilon_section(const LatticePtr& t) {
  const BooleanCover cover = boolean_cover(t);
  const Irreducibles irr = irreducibles(*t);
  const std::size_t k = irr.elements.size();
  // sigma(e) lies below e in B(t) and joins to e.
  std::vector<std::vector<Mask>> cands(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Element e = irr.elements[i];
    const Mask below = t->down(e);
    for (Mask a = below;; a = (a - 1) & below) {
      if (t->join_all(a) == e) cands[i].push_back(a);
      if (a == 0) break;
    }
  }
  std::vector<std::size_t> pick(k, 0);
  JoinMap sigma{t, cover.boolean, std::vector<Element>(t->size())};
  for (;;) {
    for (std::size_t x = 0; x < t->size(); ++x) {
      Mask m = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (t->leq(irr.elements[i], x)) m |= cands[i][pick[i]];
      sigma.images[x] = static_cast<Element>(m);
    }
    if (check_join_map(sigma) && compose(cover.upsilon, sigma) == identity_map(t)) return sigma;
    std::size_t pos = 0;
    while (pos < k && ++pick[pos] == cands[pos].size()) pick[pos++] = 0;
    if (pos == k) return std::nullopt;
  }
}

exalg::Vector<Integer> lin_to_vector(const LinMorphism& alpha, const std::vector<JoinMap>& basis) {
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].images, i);
  exalg::Vector<Integer> v = exalg::Vector<Integer>::Zero(static_cast<exalg::Index>(basis.size()));
  for (const auto& [img, c] : alpha.terms()) {
    auto it = index.find(img);
    if (it == index.end()) throw std::invalid_argument("lin_to_vector: term outside the basis");
    v(static_cast<exalg::Index>(it->second)) += c;
  }
  return v;
}

}  // namespace cfl
