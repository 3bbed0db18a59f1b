#include "thh_app/problem_io.hpp"

#include <fstream>
#include <sstream>

#include <toml.hpp>

namespace thh::app {

namespace {

Json node_to_json(const toml::node& n) {
    if (auto* t = n.as_table()) {
        Json j = Json::object();
        for (auto&& [k, v] : *t) j[std::string(k.str())] = node_to_json(v);
        return j;
    }
    if (auto* a = n.as_array()) {
        Json j = Json::array();
        for (auto&& v : *a) j.push_back(node_to_json(v));
        return j;
    }
    if (auto* v = n.as_integer()) return v->get();
    if (auto* v = n.as_string()) return v->get();
    if (auto* v = n.as_boolean()) return v->get();
    throw input_error("unsupported TOML value (only tables, arrays, integers, strings and booleans)");
}

i64 get_int(const Json& j, const char* key, std::optional<i64> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw input_error(std::string("missing key '") + key + "'");
    }
    if (!j[key].is_number_integer()) throw input_error(std::string("key '") + key + "' must be an integer");
    return j[key].get<i64>();
}

std::vector<i64> int_array(const Json& j, const std::string& what) {
    if (!j.is_array()) throw input_error(what + " must be an array of integers");
    std::vector<i64> out;
    for (const Json& x : j) {
        if (!x.is_number_integer()) throw input_error(what + " must be an array of integers");
        out.push_back(x.get<i64>());
    }
    return out;
}

std::vector<std::vector<i64>> poly_array(const Json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw input_error(what + " must be a nonempty array");
    std::vector<std::vector<i64>> out;
    for (const Json& c : j) out.push_back(c.is_number_integer() ? std::vector<i64>{c.get<i64>()} : int_array(c, what + " entry"));
    return out;
}

}  // namespace

Json toml_to_json(const std::string& text) {
    try {
        toml::table t = toml::parse(text);
        return node_to_json(t);
    } catch (const toml::parse_error& e) {
        std::ostringstream s;
        s << "TOML parse error: " << e.description() << " at line " << e.source().begin.line;
        throw input_error(s.str());
    }
}

TowerSpec tower_from_json(const Json& j) {
    TowerSpec s;
    s.p = get_int(j, "p");
    s.r = static_cast<int>(get_int(j, "r", 1));
    s.n = static_cast<int>(get_int(j, "n"));
    s.K = static_cast<int>(get_int(j, "precision", 0));
    s.gen_exp = static_cast<int>(get_int(j, "gen_exp", 1));
    if (!j.contains("eisenstein")) throw input_error("missing key 'eisenstein'");
    s.eisenstein = poly_array(j["eisenstein"], "eisenstein");
    if (!is_prime(s.p)) throw input_error("p must be prime");
    if (s.r < 1 || s.n < 1 || s.K < 0) throw input_error("r and n must be >= 1 and precision >= 0");
    return s;
}

GlobalAlgebraSpec global_from_json(const Json& j) {
    GlobalAlgebraSpec g;
    if (!j.contains("center")) throw input_error("missing key 'center'");
    g.center.f = int_array(j["center"], "center");
    if (j.contains("ramification")) {
        if (!j["ramification"].is_array()) throw input_error("ramification must be an array of tables");
        for (const Json& r : j["ramification"]) {
            RamifiedPrime rp;
            rp.id.p = get_int(r, "p");
            rp.id.index = static_cast<int>(get_int(r, "factor_index", 0));
            rp.e = static_cast<int>(get_int(r, "e"));
            if (r.contains("local_eisenstein")) rp.local_eisenstein = poly_array(r["local_eisenstein"], "local_eisenstein");
            if (!is_prime(rp.id.p)) throw input_error("ramified prime must be prime");
            g.ramification.push_back(std::move(rp));
        }
    }
    return g;
}

Problem parse_problem(const std::string& text) {
    size_t k = text.find_first_not_of(" \t\r\n");
    if (k != std::string::npos && text[k] == '{') {
        try {
            return algebra_from_json(text);
        } catch (const std::invalid_argument& e) {
            throw input_error(e.what());
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("algebra JSON: ") + e.what());
        }
    }
    Json j = toml_to_json(text);
    if (j.contains("center")) return global_from_json(j);
    if (j.contains("eisenstein")) return tower_from_json(j);
    throw input_error("problem is neither a tower (eisenstein = ...) nor a global algebra (center = ...)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string residue_field_name(i64 p, int r) {
    return "F_{" + std::to_string(p) + "^" + std::to_string(r) + "}";
}

Json module_json(int degree, const LocalModule& m, i64 p, int r) {
    Json j;
    j["degree"] = degree;
    j["free_rank"] = m.at_cap;
    j["torsion"] = {{"residue_field", residue_field_name(p, r)}, {"pi_lengths", m.pi_lengths}};
    return j;
}

Json group_json(int degree, const AbelianGroupFG& g) {
    Json j;
    j["degree"] = degree;
    j["free_rank"] = g.free_rank;
    Json t = Json::array();
    for (const auto& [q, e] : g.prime_powers()) t.push_back(q.get_str() + "^" + std::to_string(e));
    j["torsion"] = t;
    return j;
}

Json tower_parameters(const TowerSpec& s) {
    Json j;
    j["p"] = s.p;
    j["r"] = s.r;
    j["eisenstein"] = s.eisenstein;
    j["n"] = s.n;
    j["gen_exp"] = s.gen_exp;
    return j;
}

Json global_parameters(const GlobalAlgebraSpec& g) {
    Json j;
    j["center"] = g.center.f;
    Json r = Json::array();
    for (const RamifiedPrime& rp : g.ramification) {
        Json e;
        e["p"] = rp.id.p;
        e["factor_index"] = rp.id.index;
        e["e"] = rp.e;
        if (rp.local_eisenstein) e["local_eisenstein"] = *rp.local_eisenstein;
        r.push_back(e);
    }
    j["ramification"] = r;
    return j;
}

}  // namespace thh::app
