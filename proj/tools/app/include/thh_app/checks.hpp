#pragma once

#include <string>
#include <vector>

#include "thh/local_rings.hpp"
#include "thh/number_ring_global.hpp"

namespace thh::app {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Fixture {
    std::string name;  // "A" .. "D"
    TowerSpec spec;
};

std::vector<Fixture> local_fixtures();
TowerSpec local_fixture(const std::string& name);
GlobalAlgebraSpec fixture_E();
GlobalAlgebraSpec fixture_F();

// Precision with d*K >= 8, never below the automatic default.
Tower integral_tower(const TowerSpec& spec);

// Oracle degree bounds from the algebra dimension: 5 up to dim 8, 3 up to dim 20, else 2.
int oracle_degree(int algebra_dim);

std::vector<Check> check_oracle(const Tower& t, bool plain_cross_check);
std::vector<Check> check_integral_hh(const Tower& t);
std::vector<Check> check_resolution(const Tower& t);
std::vector<Check> check_brun(const Tower& t, int max_total = 10);
std::vector<Check> check_uct(const Tower& t, int max_i = 12);
// notes receives informational lines that are not pass/fail.
std::vector<Check> check_induced_maps(const Tower& t, std::vector<std::string>* notes = nullptr);
std::vector<Check> check_global_E();
std::vector<Check> check_global_F();
std::vector<Check> check_global_consistency(const GlobalAlgebraSpec& g, int max_i);
std::vector<Check> check_properties(const Tower& t);

bool all_ok(const std::vector<Check>& c);

}  // namespace thh::app
