// One line per acceptance criterion: PASS or FAIL, then the elapsed time.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cfl/propsuite.hpp"

using namespace cfl;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  std::vector<std::string> checks;
  SuiteLimits limits;
  double budget_ms;  // 0 for no time bound
};

SuiteLimits limits(std::size_t lattice, std::size_t points, std::size_t samples = 500, std::size_t tuple = 3) {
  SuiteLimits l;
  l.max_lattice = lattice;
  l.max_points = points;
  l.samples = samples;
  l.max_tuple = tuple;
  return l;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1", "rank formula on chains, n <= 4, |X| <= 5", {"rank-formula"}, limits(5, 5), 60000},
      {"C2", "decomposition identity, n <= 4, |X| <= 4", {"decomposition-identity"}, limits(5, 4), 10000},
      {"C3", "idempotent calculus on lattices <= 6, tuples <= 3",
       {"f-dc-matrix-units", "pi-j-expansion", "beta-central-idempotents"}, limits(6, 0, 500, 3), 120000},
      {"C4", "End(n) count n <= 6 and f-family rank n <= 4", {"end-chain-count"}, limits(7, 0), 0},
      {"C5", "theta rank invariance M3/B3 and N5, |X| <= 3", {"rank-isomorphism-invariance"}, limits(5, 3), 0},
      {"C6", "gamma span rank equals theta rank, lattices <= 5, |X| <= 3", {"gamma-span-rank"}, limits(5, 3), 0},
      {"C7", "dual basis, unimodular pairing, gamma = iota*, |T| <= 5, |X| <= 2",
       {"dual-basis", "pairing-unimodular", "gamma-equals-iota-star"}, limits(5, 2), 0},
      {"C8", "orthogonal of the gamma span equals ker Theta", {"orthogonality"}, limits(5, 2), 0},
      {"C9", "distributive iff upsilon has a section, all labelled lattices <= 5",
       {"distributive-iff-section"}, limits(5, 0), 0},
      {"C10", "six-condition equivalence, 10^4 pairs per lattice <= 6", {"six-conditions"},
       limits(6, 3, 10000), 0},
      {"C11", "fundamental module associativity and rank |E|!", {"fundamental-action", "fundamental-rank"},
       limits(5, 3, 1000), 0},
      {"C12", "chain-summand census, lattices <= 6, |X| <= 3", {"chain-census"}, limits(6, 3), 0},
  };
  // C4 also needs the f-family rank on chains n <= 4.
  const std::vector<std::pair<std::string, SuiteLimits>> c4_extra = {{"f-family-basis", limits(5, 0)}};

  const exalg::Ring ring = exalg::Ring::rational();
  const std::uint64_t seed = 1;
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const LatticeCatalog catalog(std::min<std::size_t>(c.limits.max_lattice, 6));
    bool ok = true;
    std::string detail;
    auto run = [&](const std::string& name, const SuiteLimits& l) {
      const CheckSpec* spec = find_check(name);
      if (!spec) {
        ok = false;
        detail += " [" + name + ": missing]";
        return;
      }
      const SuiteContext ctx(l, seed, ring, {}, catalog);
      const CheckResult r = run_check(*spec, ctx);
      detail += " [" + name + ": " + r.detail;
      if (r.status != CheckStatus::pass) {
        ok = false;
        detail += std::string(" -- ") + status_name(r.status);
        if (!r.witness.is_null()) detail += " witness " + r.witness.dump();
      }
      detail += "]";
    };
    for (const auto& name : c.checks) run(name, c.limits);
    if (c.id == "C4")
      for (const auto& [name, l] : c4_extra) run(name, l);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_ms > 0 && ms > c.budget_ms) {
      ok = false;
      detail += " [over the " + std::to_string(static_cast<long>(c.budget_ms)) + " ms budget]";
    }
    if (!ok) ++failures;
    std::printf("%s %s %s (%.0f ms)%s\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), ms, detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
