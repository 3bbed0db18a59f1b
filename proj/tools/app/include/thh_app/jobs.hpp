#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "thh_app/checks.hpp"
#include "thh_app/problem_io.hpp"

namespace thh::app {

enum class VerifyLevel { none, oracle, full };

struct JobSpec {
    std::string mode;     // local-hh, local-thh, local-thh-modp, global-thh, global-hh, oracle, verify
    std::string problem;  // TOML or algebra JSON text; empty for the fixture matrix in verify mode
    int max_degree = 10;
    int precision = 0;  // 0: automatic
    VerifyLevel verify = VerifyLevel::none;
};

struct JobResult {
    Json doc;
    int exit_code = 0;
    std::string error;  // diagnostic text for nonzero exit codes
};

constexpr int exit_ok = 0, exit_input = 2, exit_verification = 3, exit_not_maximal = 4;

VerifyLevel parse_verify_level(const std::string& s);
const std::vector<std::string>& modes();

JobResult run(const JobSpec& job);

struct MatrixRow {
    std::string fixture, check;
    bool ok = false;
    double seconds = 0;
    std::string detail;
};

// Acceptance suite over fixtures A..F. Timing goes only to the table stream.
std::vector<MatrixRow> verify_matrix();
// Document for the matrix: one check per row, no timings.
JobResult matrix_result(const std::vector<MatrixRow>& rows);
void print_matrix(std::ostream& os, const std::vector<MatrixRow>& rows);

std::string dump(const Json& doc);  // canonical output text, newline terminated

}  // namespace thh::app
