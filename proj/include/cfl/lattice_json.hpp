#pragma once

#include <string>

#include <json.hpp>

#include "cfl/latbase.hpp"

namespace cfl {

// {"size": n, "leq": [[a, b], ...], "names": [...]} with the closure applied.
Poset poset_from_json(const nlohmann::json& j);
LatticePtr lattice_from_json(const nlohmann::json& j);
LatticePtr read_lattice_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

// Strict pairs a < b only.
nlohmann::json poset_to_json(const Poset& p);
// Adds bottom, top, distributive and irreducibles.
nlohmann::json lattice_to_json(const Lattice& t);

}  // namespace cfl
