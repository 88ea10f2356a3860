#include "cfl/relcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cfl {

void check_set_size(std::size_t n) {
  if (n > kMaxSetSize)
    throw std::length_error("set of size " + std::to_string(n) + " exceeds the limit of " +
                            std::to_string(kMaxSetSize) + " points");
}

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  check_set_size(images_.size());
  Mask seen = 0;
  for (Element e : images_) {
    if (e >= images_.size() || (seen & bit(e))) throw std::invalid_argument("not a permutation");
    seen |= bit(e);
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), Element{0});
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<Element> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i]] = static_cast<Element>(i);
  return Permutation(std::move(v));
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<Element> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(i));
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(n);
  do out.push_back(p);
  while (p.next());
  return out;
}

Correspondence::Correspondence(std::size_t dst, std::size_t src)
    : dst_(dst), src_(src), rows_(dst, 0) {
  check_set_size(dst);
  check_set_size(src);
}

Correspondence Correspondence::identity(std::size_t n) {
  Correspondence r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.rows_[i] = bit(i);
  return r;
}

Correspondence Correspondence::full(std::size_t dst, std::size_t src) {
  Correspondence r(dst, src);
  for (auto& row : r.rows_) row = low_bits(src);
  return r;
}

Correspondence Correspondence::from_pairs(std::size_t dst, std::size_t src,
                                          const std::vector<std::pair<Element, Element>>& pairs) {
  Correspondence r(dst, src);
  for (auto [y, x] : pairs) {
    if (y >= dst || x >= src) throw std::out_of_range("pair outside the correspondence");
    r.insert(y, x);
  }
  return r;
}

Mask Correspondence::column(std::size_t x) const {
  Mask m = 0;
  for (std::size_t y = 0; y < dst_; ++y)
    if (contains(y, x)) m |= bit(y);
  return m;
}

std::size_t Correspondence::pair_count() const {
  std::size_t n = 0;
  for (Mask row : rows_) n += popcount(row);
  return n;
}

std::vector<std::pair<Element, Element>> Correspondence::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t y = 0; y < dst_; ++y)
    for (std::size_t x = 0; x < src_; ++x)
      if (contains(y, x)) out.emplace_back(static_cast<Element>(y), static_cast<Element>(x));
  return out;
}

Correspondence compose(const Correspondence& r, const Correspondence& s) {
  if (r.src_size() != s.dst_size()) throw std::invalid_argument("compose: inner sets differ");
  Correspondence out(r.dst_size(), s.src_size());
  for (std::size_t z = 0; z < r.dst_size(); ++z) {
    Mask acc = 0;
    for (Mask m = r.row(z); m; m &= m - 1) acc |= s.row(__builtin_ctzll(m));
    out.set_row(z, acc);
  }
  return out;
}

Correspondence opposite(const Correspondence& r) {
  Correspondence out(r.src_size(), r.dst_size());
  for (std::size_t y = 0; y < r.dst_size(); ++y)
    for (Mask m = r.row(y); m; m &= m - 1) out.insert(__builtin_ctzll(m), y);
  return out;
}

namespace {
void require_same_shape(const Correspondence& a, const Correspondence& b) {
  if (a.dst_size() != b.dst_size() || a.src_size() != b.src_size())
    throw std::invalid_argument("correspondences have different shapes");
}
}  // namespace

Correspondence operator|(const Correspondence& a, const Correspondence& b) {
  require_same_shape(a, b);
  Correspondence out = a;
  for (std::size_t y = 0; y < a.dst_size(); ++y) out.set_row(y, a.row(y) | b.row(y));
  return out;
}

Correspondence operator&(const Correspondence& a, const Correspondence& b) {
  require_same_shape(a, b);
  Correspondence out = a;
  for (std::size_t y = 0; y < a.dst_size(); ++y) out.set_row(y, a.row(y) & b.row(y));
  return out;
}

bool is_subset(const Correspondence& a, const Correspondence& b) {
  require_same_shape(a, b);
  for (std::size_t y = 0; y < a.dst_size(); ++y)
    if (a.row(y) & ~b.row(y)) return false;
  return true;
}

Correspondence delta(const Permutation& sigma) {
  Correspondence out(sigma.size(), sigma.size());
  for (std::size_t x = 0; x < sigma.size(); ++x) out.insert(sigma(x), x);
  return out;
}

Correspondence conjugate(const Permutation& sigma, const Correspondence& r) {
  return delta(sigma) * r * delta(sigma.inverse());
}

Correspondence graph(const std::vector<Element>& f, std::size_t dst) {
  Correspondence out(dst, f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= dst) throw std::out_of_range("graph: image outside target");
    out.insert(f[x], x);
  }
  return out;
}

OrderFlags order_flags(const Correspondence& r) {
  OrderFlags flags;
  if (r.dst_size() != r.src_size()) return flags;
  const std::size_t n = r.dst_size();
  flags.reflexive = true;
  for (std::size_t i = 0; i < n; ++i) flags.reflexive = flags.reflexive && r.contains(i, i);
  flags.transitive = is_subset(r * r, r);
  flags.antisymmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r.contains(i, j) && r.contains(j, i)) flags.antisymmetric = false;
  return flags;
}

Correspondence reflexive_transitive_closure(const Correspondence& r) {
  if (r.dst_size() != r.src_size()) throw std::invalid_argument("closure needs a square relation");
  const std::size_t n = r.dst_size();
  Correspondence c = r | Correspondence::identity(n);
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (c.contains(i, k)) c.set_row(i, c.row(i) | c.row(k));
  return c;
}

PreorderQuotient preorder_quotient(const Correspondence& r) {
  if (!order_flags(r).preorder()) throw std::invalid_argument("preorder_quotient: not a preorder");
  const std::size_t n = r.dst_size();
  PreorderQuotient q;
  q.class_of.assign(n, 0);
  std::vector<Element> rep;
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t c = 0; c < rep.size() && !found; ++c) {
      if (r.contains(i, rep[c]) && r.contains(rep[c], i)) {
        q.class_of[i] = static_cast<Element>(c);
        found = true;
      }
    }
    if (!found) {
      q.class_of[i] = static_cast<Element>(rep.size());
      rep.push_back(static_cast<Element>(i));
    }
  }
  q.order = Correspondence(rep.size(), rep.size());
  for (std::size_t a = 0; a < rep.size(); ++a)
    for (std::size_t b = 0; b < rep.size(); ++b)
      if (r.contains(rep[a], rep[b])) q.order.insert(a, b);
  return q;
}

}  // namespace cfl
