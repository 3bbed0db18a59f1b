#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "thh/closed_forms.hpp"
#include "thh/cyclic_algebra.hpp"
#include "thh/local_rings.hpp"
#include "thh/number_ring_global.hpp"

namespace thh::app {

using Json = nlohmann::ordered_json;

// Malformed or mode-incompatible input (exit code 2).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// TOML text -> JSON object (tables, arrays, integers, strings, booleans).
Json toml_to_json(const std::string& text);

// Tower: {p, r, eisenstein = [[c_0], ..., [1]], n, precision, gen_exp}; precision 0 or absent means automatic.
TowerSpec tower_from_json(const Json& j);
// Global: {center = [...], ramification = [{p, factor_index, e, local_eisenstein}]}.
GlobalAlgebraSpec global_from_json(const Json& j);

using Problem = std::variant<TowerSpec, GlobalAlgebraSpec, StructureAlgebra>;
// JSON text (first non-space character '{') is a structure algebra; anything else is TOML.
Problem parse_problem(const std::string& text);
std::string read_file(const std::string& path);

std::string residue_field_name(i64 p, int r);
Json module_json(int degree, const LocalModule& m, i64 p, int r);
Json group_json(int degree, const AbelianGroupFG& g);
Json tower_parameters(const TowerSpec& s);
Json global_parameters(const GlobalAlgebraSpec& g);

}  // namespace thh::app
