#include "cfl/lattice_json.hpp"

#include <fstream>
#include <sstream>

namespace cfl {

namespace {

std::vector<std::pair<Element, Element>> read_pairs(const nlohmann::json& j, std::size_t n) {
  std::vector<std::pair<Element, Element>> pairs;
  if (!j.contains("leq")) return pairs;
  const auto& leq = j.at("leq");
  if (!leq.is_array()) throw std::invalid_argument("\"leq\" must be an array of pairs");
  for (const auto& p : leq) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw std::invalid_argument("each \"leq\" entry must be a pair of element indices");
    const auto a = p[0].get<std::size_t>();
    const auto b = p[1].get<std::size_t>();
    if (a >= n || b >= n)
      throw std::invalid_argument("element index out of range in \"leq\": [" + std::to_string(a) +
                                  ", " + std::to_string(b) + "]");
    pairs.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
  }
  return pairs;
}

std::size_t read_size(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("size") || !j.at("size").is_number_unsigned())
    throw std::invalid_argument("expected an object with a nonnegative integer \"size\"");
  const auto n = j.at("size").get<std::size_t>();
  if (n > kMaxSetSize) throw LatticeError(LatticeError::Kind::too_large, 0, 0);
  return n;
}

std::vector<std::string> read_names(const nlohmann::json& j, std::size_t n) {
  if (!j.contains("names")) return {};
  auto names = j.at("names").get<std::vector<std::string>>();
  if (names.size() != n) throw std::invalid_argument("\"names\" must have one entry per element");
  return names;
}

}  // namespace

Poset poset_from_json(const nlohmann::json& j) {
  const std::size_t n = read_size(j);
  return Poset::from_leq(n, read_pairs(j, n));
}

LatticePtr lattice_from_json(const nlohmann::json& j) {
  const std::size_t n = read_size(j);
  if (n == 0) throw LatticeError(LatticeError::Kind::empty, 0, 0);
  return Lattice::from_leq(n, read_pairs(j, n), read_names(j, n));
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

LatticePtr read_lattice_file(const std::string& path) { return lattice_from_json(read_json_file(path)); }

nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json j;
  j["size"] = p.size();
  nlohmann::json leq = nlohmann::json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(a, b)) leq.push_back({a, b});
  j["leq"] = leq;
  return j;
}

nlohmann::json lattice_to_json(const Lattice& t) {
  nlohmann::json j = poset_to_json(t.poset());
  if (!t.names().empty()) j["names"] = t.names();
  j["bottom"] = t.bottom();
  j["top"] = t.top();
  j["distributive"] = is_distributive(t);
  j["irreducibles"] = irreducibles(t).elements;
  return j;
}

}  // namespace cfl
