#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cfl/latbase.hpp"

namespace cfl {

// Calls fn on every partial order of {0..n-1}, each exactly once.
void for_each_labeled_poset(std::size_t n, const std::function<void(const Poset&)>& fn);

// Every lattice on {0..k-1} for 1 <= k <= max_n, one per order relation,
// by size and then in generation order.
std::vector<LatticePtr> enumerate_lattices(std::size_t max_n);

// Lexicographically least relabelled order rows; equal iff isomorphic.
// Limited to 8 elements.
std::vector<Mask> canonical_form(const Lattice& t);
bool isomorphic(const Lattice& a, const Lattice& b);

struct CatalogEntry {
  std::string name;
  LatticePtr lattice;
};

class LatticeCatalog {
 public:
  // Named lattices plus all labelled lattices with at most exhaustive_max elements.
  explicit LatticeCatalog(std::size_t exhaustive_max = 5);

  const std::vector<CatalogEntry>& named() const { return named_; }
  const std::vector<LatticePtr>& labeled() const { return labeled_; }
  std::size_t exhaustive_max() const { return exhaustive_max_; }

  // One lattice per isomorphism type with at most max_size elements: named
  // entries first, then the remaining types from the labelled tier.
  std::vector<CatalogEntry> representatives(std::size_t max_size) const;
  // Labelled lattices with at most max_size elements.
  std::vector<LatticePtr> labeled_up_to(std::size_t max_size) const;
  const CatalogEntry* find(const std::string& name) const;

 private:
  std::size_t exhaustive_max_;
  std::vector<CatalogEntry> named_;
  std::vector<LatticePtr> labeled_;
  std::vector<CatalogEntry> types_;  // named first, then new types by size
};

}  // namespace cfl
