#include "cfl/propsuite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "cfl/lattice_json.hpp"

namespace cfl {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

CheckOutcome CheckOutcome::pass(std::string detail) {
  return CheckOutcome{CheckStatus::pass, std::move(detail), nullptr};
}

CheckOutcome CheckOutcome::fail(std::string detail, nlohmann::json witness) {
  return CheckOutcome{CheckStatus::fail, std::move(detail), std::move(witness)};
}

SuiteContext::SuiteContext(SuiteLimits limits, std::uint64_t seed, exalg::Ring ring,
                           FaultInjection fault, const LatticeCatalog& catalog)
    : limits_(limits),
      seed_(seed),
      ring_(ring),
      fault_(fault),
      catalog_(catalog),
      check_prime_(exalg::random_large_prime(seed ^ 0x9e3779b97f4a7c15ull)) {}

std::mt19937_64 SuiteContext::rng(const std::string& salt) const {
  return std::mt19937_64(seed_ ^ fnv1a(salt));
}

std::vector<CatalogEntry> SuiteContext::lattices(std::size_t bound) const {
  return catalog_.representatives(std::min(bound, limits_.max_lattice));
}

MobiusTable SuiteContext::mobius(const Lattice& t) const {
  MobiusTable mu(t.poset());
  if (fault_.mobius) {
    for (std::size_t a = 0; a < t.size(); ++a) {
      if (a != t.bottom() && t.down(a) == (bit(a) | bit(t.bottom()))) {
        mu.set(t.bottom(), a, mu(t.bottom(), a) + 1);
        break;
      }
    }
  }
  return mu;
}

template <class M>
std::size_t SuiteContext::checked_rank(const M& m) const {
  const std::size_t main = exalg::rank(m, ring_);
  const std::size_t rat =
      ring_.kind == exalg::Ring::Kind::rational ? main : exalg::rank(m, exalg::Ring::rational());
  const std::size_t mod = exalg::rank(m, exalg::Ring::prime(check_prime_));
  if (main != rat || rat != mod) {
    std::ostringstream os;
    os << "rank disagreement on a " << m.rows() << "x" << m.cols() << " matrix: " << ring_.name()
       << " gives " << main << ", rat gives " << rat << ", p:" << check_prime_ << " gives " << mod;
    throw RankMismatch(os.str());
  }
  return main;
}

std::size_t SuiteContext::rank(const exalg::IntMatrix& m) const { return checked_rank(m); }
std::size_t SuiteContext::rank(const exalg::Matrix<Integer>& m) const { return checked_rank(m); }
std::size_t SuiteContext::rank(const IncidenceMatrix& m) const { return checked_rank(m.compressed()); }

std::size_t SuiteContext::theta_rank(const LatticePtr& t, std::size_t points) const {
  return rank(theta_matrix(t, points));
}

std::size_t SuiteContext::gamma_span_rank(const LatticePtr& t, std::size_t points) const {
  const exalg::Matrix<Integer> rows = gamma_span_vectors(t, points).transpose();
  return rank(rows);
}

const CheckSpec* find_check(const std::string& name) {
  for (const auto& c : check_registry())
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& c : check_registry())
    if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
  out.push_back("all");
  return out;
}

CheckResult run_check(const CheckSpec& spec, const SuiteContext& ctx) {
  CheckResult r{spec.name, spec.anchor, CheckStatus::pass, {}, nullptr, 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    CheckOutcome o = spec.run(ctx);
    r.status = o.status;
    r.detail = std::move(o.detail);
    r.witness = std::move(o.witness);
  } catch (const RankMismatch& e) {
    r.status = CheckStatus::fail;
    r.detail = e.what();
  } catch (const std::length_error& e) {
    r.status = CheckStatus::skipped;
    r.detail = std::string("cap: ") + e.what();
  } catch (const std::exception& e) {
    r.status = CheckStatus::fail;
    r.detail = std::string("exception: ") + e.what();
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

bool PropertyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

nlohmann::json PropertyReport::to_json(bool timing) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["ring"] = ring.name();
  j["seed"] = seed;
  j["limits"] = {{"max_lattice", limits.max_lattice},
                 {"max_points", limits.max_points},
                 {"samples", limits.samples},
                 {"max_tuple", limits.max_tuple}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["paper_anchor"] = c.anchor;
    e["status"] = status_name(c.status);
    e["detail"] = c.detail;
    if (!c.witness.is_null()) e["witness"] = c.witness;
    e["elapsed_ms"] = timing ? c.elapsed_ms : 0.0;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  j["passed"] = passed();
  j["elapsed_ms"] = timing ? elapsed_ms : 0.0;
  return j;
}

std::string PropertyReport::to_text(bool timing) const {
  std::ostringstream os;
  os << "suite " << suite << "  ring " << ring.name() << "  seed " << seed << "  max-lattice "
     << limits.max_lattice << "  max-points " << limits.max_points << "  samples " << limits.samples
     << "\n";
  std::size_t fails = 0;
  for (const auto& c : checks) {
    std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
    os << "  " << tag << "  " << c.name;
    if (!c.detail.empty()) os << "  -- " << c.detail;
    if (timing) os << "  (" << static_cast<long long>(c.elapsed_ms) << " ms)";
    os << "\n";
    if (c.status == CheckStatus::fail) {
      ++fails;
      if (!c.witness.is_null()) os << "        witness: " << c.witness.dump() << "\n";
    }
  }
  os << (fails == 0 ? "OK" : "FAILED") << ": " << checks.size() - fails << "/" << checks.size()
     << " checks without failure";
  if (timing) os << " in " << static_cast<long long>(elapsed_ms) << " ms";
  os << "\n";
  return os.str();
}

PropertyReport run_suite(const std::string& name, const SuiteLimits& limits, std::uint64_t seed,
                         const exalg::Ring& ring, const FaultInjection& fault) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  const auto t0 = std::chrono::steady_clock::now();
  const LatticeCatalog catalog(std::clamp<std::size_t>(limits.max_lattice, 1, 6));
  const SuiteContext ctx(limits, seed, ring, fault, catalog);
  PropertyReport report;
  report.suite = name;
  report.ring = ring;
  report.seed = seed;
  report.limits = limits;
  for (const auto& spec : check_registry())
    if (name == "all" || spec.suite == name) report.checks.push_back(run_check(spec, ctx));
  report.elapsed_ms = ms_since(t0);
  return report;
}

}  // namespace cfl
