#include "cfl/catalog.hpp"

#include <algorithm>
#include <map>

namespace cfl {

namespace {

void extend_poset(std::size_t n, std::vector<Mask>& up, const std::function<void(const Poset&)>& fn) {
  const std::size_t k = up.size();
  if (k == n) {
    Correspondence r(n, n);
    for (std::size_t a = 0; a < n; ++a) r.set_row(a, up[a]);
    fn(Poset(std::move(r)));
    return;
  }
  std::vector<Mask> down(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (up[a] & bit(b)) down[b] |= bit(a);
  const Mask all = low_bits(k);
  // New element k goes above the down-set d and below the up-set u, with d < u.
  for (Mask d = 0; d <= all; ++d) {
    bool closed = true;
    for (Mask s = d; s && closed; s &= s - 1) closed = (down[__builtin_ctzll(s)] & ~d) == 0;
    if (!closed) continue;
    Mask above_all_d = all;
    for (Mask s = d; s; s &= s - 1) above_all_d &= up[__builtin_ctzll(s)];
    const Mask free = above_all_d & ~d;
    for (Mask u = free;; u = (u - 1) & free) {
      bool up_closed = true;
      for (Mask s = u; s && up_closed; s &= s - 1) up_closed = (up[__builtin_ctzll(s)] & ~u) == 0;
      if (up_closed) {
        std::vector<Mask> next = up;
        for (Mask s = d; s; s &= s - 1) next[__builtin_ctzll(s)] |= bit(k);
        next.push_back(u | bit(k));
        extend_poset(n, next, fn);
      }
      if (u == 0) break;
    }
    if (d == all) break;
  }
}

}  // namespace

void for_each_labeled_poset(std::size_t n, const std::function<void(const Poset&)>& fn) {
  check_set_size(n);
  std::vector<Mask> up;
  extend_poset(n, up, fn);
}

std::vector<LatticePtr> enumerate_lattices(std::size_t max_n) {
  std::vector<LatticePtr> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_labeled_poset(n, [&](const Poset& p) {
      int minimal = 0;
      int maximal = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (p.down(a) == bit(a)) ++minimal;
        if (p.up(a) == bit(a)) ++maximal;
      }
      if (minimal != 1 || maximal != 1) return;
      try {
        out.push_back(Lattice::make(p));
      } catch (const LatticeError&) {
      }
    });
  }
  return out;
}

std::vector<Mask> canonical_form(const Lattice& t) {
  const std::size_t n = t.size();
  if (n > 8) throw std::length_error("canonical_form: more than 8 elements");
  std::vector<Element> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Element>(i);
  std::vector<Mask> best;
  std::vector<Mask> cur(n);
  do {
    // perm maps new labels to old ones.
    for (std::size_t a = 0; a < n; ++a) {
      Mask row = 0;
      for (std::size_t b = 0; b < n; ++b)
        if (t.leq(perm[a], perm[b])) row |= bit(b);
      cur[a] = row;
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Lattice& a, const Lattice& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

LatticeCatalog::LatticeCatalog(std::size_t exhaustive_max) : exhaustive_max_(exhaustive_max) {
  for (std::size_t n = 0; n <= 6; ++n) named_.push_back({"chain" + std::to_string(n), chain(n)});
  named_.push_back({"B2", boolean_lattice(2)});
  named_.push_back({"B3", boolean_lattice(3)});
  named_.push_back({"M3", m3()});
  named_.push_back({"N5", n5()});
  named_.push_back({"chain2xchain3", product(chain(2), chain(3))});
  labeled_ = enumerate_lattices(exhaustive_max);

  std::map<std::vector<Mask>, bool> seen;
  for (const auto& e : named_) {
    if (e.lattice->size() <= 8) {
      if (!seen.emplace(canonical_form(*e.lattice), true).second) continue;
    }
    types_.push_back(e);
  }
  std::map<std::size_t, int> counter;
  for (const auto& t : labeled_) {
    if (!seen.emplace(canonical_form(*t), true).second) continue;
    const std::size_t n = t->size();
    types_.push_back({"lattice" + std::to_string(n) + "_" + std::to_string(++counter[n]), t});
  }
}

std::vector<CatalogEntry> LatticeCatalog::representatives(std::size_t max_size) const {
  std::vector<CatalogEntry> out;
  for (const auto& e : types_)
    if (e.lattice->size() <= max_size) out.push_back(e);
  return out;
}

std::vector<LatticePtr> LatticeCatalog::labeled_up_to(std::size_t max_size) const {
  std::vector<LatticePtr> out;
  for (const auto& t : labeled_)
    if (t->size() <= max_size) out.push_back(t);
  return out;
}

const CatalogEntry* LatticeCatalog::find(const std::string& name) const {
  for (const auto& e : named_)
    if (e.name == name) return &e;
  for (const auto& e : types_)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace cfl
