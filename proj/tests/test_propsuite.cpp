#include <doctest.h>

#include <set>

#include "cfl/propsuite.hpp"

using namespace cfl;
using exalg::Ring;

namespace {

SuiteLimits small() {
  SuiteLimits l;
  l.max_lattice = 4;
  l.max_points = 2;
  l.samples = 50;
  l.max_tuple = 2;
  return l;
}

}  // namespace

TEST_CASE("registry") {
  std::set<std::string> names;
  for (const auto& c : check_registry()) {
    CHECK(names.insert(c.name).second);
    CHECK_FALSE(c.anchor.empty());
    CHECK(find_check(c.name) == &c);
  }
  CHECK(find_check("no-such-check") == nullptr);
  const auto suites = suite_names();
  CHECK(suites.back() == "all");
  CHECK(std::find(suites.begin(), suites.end(), "duality") != suites.end());
  CHECK_THROWS_AS(run_suite("nonsense", small(), 1, Ring::rational()), std::invalid_argument);
}

TEST_CASE("small full run passes") {
  const PropertyReport r = run_suite("all", small(), 3, Ring::rational());
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status != CheckStatus::fail);
  }
  CHECK(r.passed());
}

TEST_CASE("idempotents suite at five elements") {
  SuiteLimits l;
  l.max_lattice = 5;
  const PropertyReport r = run_suite("idempotents", l, 1, Ring::rational());
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == CheckStatus::pass);
  }
}

TEST_CASE("ranks suite at three points") {
  SuiteLimits l;
  l.max_points = 3;
  l.max_lattice = 4;
  const PropertyReport r = run_suite("ranks", l, 1, Ring::prime(1000003));
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status != CheckStatus::fail);
  }
}

TEST_CASE("mobius fault is detected with a witness") {
  FaultInjection f;
  f.mobius = true;
  const PropertyReport r = run_suite("lattices", small(), 1, Ring::rational(), f);
  CHECK_FALSE(r.passed());
  bool found = false;
  for (const auto& c : r.checks)
    if (c.name == "mobius-identity") {
      found = true;
      CHECK(c.status == CheckStatus::fail);
      CHECK(c.witness.contains("lattice"));
    }
  CHECK(found);
}

TEST_CASE("reports are reproducible") {
  const auto a = run_suite("theta", small(), 42, Ring::rational()).to_json(false).dump();
  const auto b = run_suite("theta", small(), 42, Ring::rational()).to_json(false).dump();
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["suite"] == "theta");
  CHECK(j["seed"] == 42);
  CHECK(j["checks"][0].contains("paper_anchor"));
  CHECK(j["elapsed_ms"] == 0.0);
}
