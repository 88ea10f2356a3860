#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfl/catalog.hpp"
#include "cfl/funceval.hpp"
#include "cfl/lattice_json.hpp"
#include "cfl/propsuite.hpp"

using namespace cfl;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kPropertyFailure = 2;

std::string describe(const LatticeError& e) {
  using K = LatticeError::Kind;
  switch (e.kind()) {
    case K::empty: return "the lattice has no elements";
    case K::not_antisymmetric:
      return "order is not antisymmetric: " + std::to_string(e.a()) + " <= " + std::to_string(e.b()) +
             " and " + std::to_string(e.b()) + " <= " + std::to_string(e.a());
    case K::no_join: return "no least upper bound for the pair (" + std::to_string(e.a()) + ", " + std::to_string(e.b()) + ")";
    case K::no_meet: return "no greatest lower bound for the pair (" + std::to_string(e.a()) + ", " + std::to_string(e.b()) + ")";
    case K::too_large: return "more elements than supported (" + std::to_string(kMaxSetSize) + ")";
  }
  return "invalid lattice";
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string join_list(const std::vector<Element>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int lattice_check(const LatticePtr& t, bool as_json) {
  const Irreducibles irr = irreducibles(*t);
  const bool d = is_distributive(*t);
  json j = lattice_to_json(*t);
  j["height"] = height(*t);
  std::ostringstream os;
  os << "lattice with " << t->size() << " elements, bottom " << t->bottom() << ", top " << t->top() << "\n"
     << (d ? "distributive" : "not distributive") << ", " << irr.elements.size() << " irreducibles: "
     << join_list(irr.elements) << "\n"
     << "height " << height(*t) << "\n";
  emit(as_json, j, os.str());
  return kOk;
}

int lattice_ideals(const LatticePtr& t, bool upper, bool as_json) {
  const Irreducibles irr = irreducibles(*t);
  const IdealLattice il = ideal_lattice(irr.order, upper ? IdealKind::upper : IdealKind::lower);
  json sets = json::array();
  std::ostringstream os;
  os << il.ideals.size() << (upper ? " upper" : " lower") << " sets of the irreducibles\n";
  for (std::size_t i = 0; i < il.ideals.size(); ++i) {
    std::vector<Element> members;
    for (std::size_t e = 0; e < irr.elements.size(); ++e)
      if (il.ideals[i] & bit(e)) members.push_back(irr.elements[e]);
    sets.push_back(members);
    os << "  " << i << ": {" << join_list(members) << "}\n";
  }
  json j{{"kind", upper ? "upper" : "lower"},
         {"irreducibles", irr.elements},
         {"sets", sets},
         {"lattice", lattice_to_json(*il.lattice)},
         {"isomorphic_to_input", isomorphic(*il.lattice, *t)}};
  emit(as_json, j, os.str());
  return kOk;
}

int lattice_mobius(const LatticePtr& t, bool as_json) {
  const MobiusTable mu = mobius(*t);
  json rows = json::array();
  std::ostringstream os;
  for (std::size_t a = 0; a < t->size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < t->size(); ++b) {
      row.push_back(mu(a, b).str());
      os << (b ? " " : "") << mu(a, b);
    }
    rows.push_back(row);
    os << "\n";
  }
  emit(as_json, json{{"mobius", rows}}, os.str());
  return kOk;
}

int lattice_endo(const LatticePtr& t, bool as_json) {
  json counts = json::array();
  std::size_t dim = 0;
  std::ostringstream os;
  for (std::size_t n = 0; n <= height(*t); ++n) {
    const std::size_t c = lower_tuples(t, n).size();
    counts.push_back(c);
    dim += c * c;
    os << "|P_" << n << "| = " << c << "\n";
  }
  const std::size_t tb = tot_basis(t).size();
  const std::size_t terms = e_t(t).terms().size();
  os << "chain-image basis: " << tb << "\ne_T terms: " << terms << "\nsum |P_n|^2: " << dim << "\n";
  emit(as_json, json{{"tuple_counts", counts}, {"tot_basis", tb}, {"e_t_terms", terms}, {"dimension", dim}},
       os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correspondence functors on finite lattices"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string ring_text = "rat";
  if (const char* env = std::getenv("CFL_RING")) ring_text = env;

  auto* lat = app.add_subcommand("lattice", "Inspect a lattice file");
  lat->require_subcommand(1);
  std::string lat_file;
  bool upper = false;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", lat_file, "Lattice JSON file")->required(); };
  auto* l_check = lat->add_subcommand("check", "Validate and summarise");
  auto* l_ideals = lat->add_subcommand("ideals", "Lower (or upper) sets of the irreducibles");
  auto* l_mobius = lat->add_subcommand("mobius", "Mobius function table");
  auto* l_endo = lat->add_subcommand("endo", "Chain tuple counts and the chain-image dimension");
  for (auto* s : {l_check, l_ideals, l_mobius, l_endo}) add_file(s);
  l_ideals->add_flag("--upper", upper, "Upper sets instead of lower sets");

  auto* rk = app.add_subcommand("rank", "Rank of S_{E,R}(X) for the irreducibles of a lattice");
  std::string rank_file;
  std::string rank_lattice;
  std::size_t points = 0;
  std::string method = "theta";
  rk->add_option("file", rank_file, "Lattice JSON file");
  rk->add_option("--lattice", rank_lattice, "Lattice JSON file");
  rk->add_option("--points,-k", points, "|X|")->required();
  rk->add_option("--method", method, "theta, gamma or formula")
      ->check(CLI::IsMember({"theta", "gamma", "formula"}));
  rk->add_option("--ring", ring_text, "rat or p:PRIME");

  auto* vf = app.add_subcommand("verify", "Run property suites");
  std::string suite = "all";
  SuiteLimits limits;
  std::uint64_t seed = 1;
  bool list = false;
  std::string fault;
  bool deterministic = false;
  vf->add_option("--suite", suite, "Suite name or all");
  vf->add_option("--max-lattice", limits.max_lattice, "Largest lattice size")->check(CLI::Range(1, 6));
  vf->add_option("--max-points", limits.max_points, "Largest |X|")->check(CLI::Range(0, 6));
  vf->add_option("--samples", limits.samples, "Random cases per sampled check");
  vf->add_option("--max-tuple", limits.max_tuple, "Longest chain tuple")->check(CLI::Range(0, 6));
  vf->add_option("--seed", seed, "Random seed");
  vf->add_option("--ring", ring_text, "rat or p:PRIME");
  vf->add_flag("--list", list, "List checks and exit");
  vf->add_option("--inject-fault", fault, "Test hook")->check(CLI::IsMember({"mobius"}));
  vf->add_flag("--deterministic", deterministic, "Omit timings from the report");

  auto* cat = app.add_subcommand("catalog", "List catalog lattices");
  std::size_t cat_max = 5;
  cat->add_option("--max-size", cat_max, "Largest size")->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const exalg::Ring ring = exalg::Ring::parse(ring_text);

    if (lat->parsed()) {
      const LatticePtr t = read_lattice_file(lat_file);
      if (l_check->parsed()) return lattice_check(t, as_json);
      if (l_ideals->parsed()) return lattice_ideals(t, upper, as_json);
      if (l_mobius->parsed()) return lattice_mobius(t, as_json);
      return lattice_endo(t, as_json);
    }

    if (rk->parsed()) {
      if (rank_file.empty() == rank_lattice.empty())
        throw std::invalid_argument("give exactly one lattice file");
      const LatticePtr t = read_lattice_file(rank_file.empty() ? rank_lattice : rank_file);
      std::string value;
      if (method == "theta") {
        value = std::to_string(theta_rank(t, points, ring));
      } else if (method == "gamma") {
        const Irreducibles irr = irreducibles(*t);
        const LatticePtr dual = ideal_lattice(irr.order.opposite(), IdealKind::lower).lattice;
        value = std::to_string(gamma_span_rank(dual, points, ring));
      } else {
        if (!t->is_chain()) throw std::invalid_argument("--method formula needs a chain");
        value = total_rank_formula(t->size() - 1, points).str();
      }
      emit(as_json, json{{"method", method}, {"points", points}, {"ring", ring.name()}, {"rank", value}},
           value + "\n");
      return kOk;
    }

    if (vf->parsed()) {
      if (list) {
        json checks = json::array();
        std::ostringstream os;
        for (const auto& c : check_registry()) {
          checks.push_back({{"name", c.name}, {"suite", c.suite}, {"paper_anchor", c.anchor}});
          os << c.suite << "  " << c.name << "  -- " << c.anchor << "\n";
        }
        emit(as_json, checks, os.str());
        return kOk;
      }
      FaultInjection inject;
      inject.mobius = fault == "mobius";
      const PropertyReport report = run_suite(suite, limits, seed, ring, inject);
      emit(as_json, report.to_json(!deterministic), report.to_text(!deterministic));
      return report.passed() ? kOk : kPropertyFailure;
    }

    if (cat->parsed()) {
      const LatticeCatalog catalog(cat_max);
      json out = json::array();
      std::ostringstream os;
      for (const auto& e : catalog.representatives(cat_max)) {
        out.push_back({{"name", e.name}, {"lattice", lattice_to_json(*e.lattice)}});
        os << e.name << "  size " << e.lattice->size() << (is_distributive(*e.lattice) ? "  distributive" : "")
           << "  irreducibles " << irreducibles(*e.lattice).elements.size() << "\n";
      }
      os << catalog.labeled_up_to(cat_max).size() << " labelled lattices\n";
      emit(as_json, out, os.str());
      return kOk;
    }
  } catch (const LatticeError& e) {
    std::cerr << "error: " << describe(e) << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
