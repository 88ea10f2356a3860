#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfl/catalog.hpp"
#include "cfl/exalg.hpp"
#include "cfl/funceval.hpp"

namespace cfl {

struct SuiteLimits {
  std::size_t max_lattice = 5;  // largest lattice size examined
  std::size_t max_points = 3;   // largest |X|
  std::size_t samples = 500;    // random cases per sampled check
  std::size_t max_tuple = 3;    // longest chain tuple in the idempotent checks
};

// Test hooks that corrupt intermediate data so that failures can be observed.
struct FaultInjection {
  bool mobius = false;  // bump one Mobius value in every lattice with an atom
};

enum class CheckStatus { pass, fail, skipped };
const char* status_name(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  nlohmann::json witness;

  static CheckOutcome pass(std::string detail = {});
  static CheckOutcome fail(std::string detail, nlohmann::json witness);
};

class SuiteContext {
 public:
  SuiteContext(SuiteLimits limits, std::uint64_t seed, exalg::Ring ring, FaultInjection fault,
               const LatticeCatalog& catalog);

  const SuiteLimits& limits() const { return limits_; }
  std::uint64_t seed() const { return seed_; }
  const exalg::Ring& ring() const { return ring_; }
  const LatticeCatalog& catalog() const { return catalog_; }
  std::uint64_t check_prime() const { return check_prime_; }

  // Generator seeded from the suite seed and a per-check salt.
  std::mt19937_64 rng(const std::string& salt) const;
  // Catalog isomorphism types with at most min(bound, max_lattice) elements.
  std::vector<CatalogEntry> lattices(std::size_t bound = SIZE_MAX) const;
  MobiusTable mobius(const Lattice& t) const;

  // Rank in the active ring, cross-checked against the rationals and a large
  // random prime.  Throws RankMismatch when they disagree.
  std::size_t rank(const exalg::IntMatrix& m) const;
  std::size_t rank(const exalg::Matrix<Integer>& m) const;
  std::size_t rank(const IncidenceMatrix& m) const;
  std::size_t theta_rank(const LatticePtr& t, std::size_t points) const;
  std::size_t gamma_span_rank(const LatticePtr& t, std::size_t points) const;

 private:
  template <class M>
  std::size_t checked_rank(const M& m) const;

  SuiteLimits limits_;
  std::uint64_t seed_;
  exalg::Ring ring_;
  FaultInjection fault_;
  const LatticeCatalog& catalog_;
  std::uint64_t check_prime_;
};

class RankMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckSpec {
  std::string name;
  std::string suite;
  std::string anchor;  // the statement being replayed
  std::function<CheckOutcome(const SuiteContext&)> run;
};

const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(const std::string& name);
// Suite names in registry order, followed by "all".
std::vector<std::string> suite_names();

struct CheckResult {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  nlohmann::json witness;
  double elapsed_ms = 0;
};

CheckResult run_check(const CheckSpec& spec, const SuiteContext& ctx);

struct PropertyReport {
  std::string suite;
  exalg::Ring ring;
  std::uint64_t seed = 0;
  SuiteLimits limits;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;

  bool passed() const;
  // With timing off every elapsed_ms is written as 0, so equal inputs give
  // byte-identical output.
  nlohmann::json to_json(bool timing = true) const;
  std::string to_text(bool timing = true) const;
};

// Throws std::invalid_argument for an unknown suite name.
PropertyReport run_suite(const std::string& name, const SuiteLimits& limits, std::uint64_t seed,
                         const exalg::Ring& ring, const FaultInjection& fault = {});

}  // namespace cfl
