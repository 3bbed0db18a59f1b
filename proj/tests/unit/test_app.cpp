#include <doctest.h>

#include "thh_app/jobs.hpp"

using namespace thh;
using namespace thh::app;

namespace {

std::string data(const std::string& name) { return read_file(std::string(THH_DATA_DIR) + "/" + name); }

JobResult job(const std::string& mode, const std::string& file, int max_degree = 10, int precision = 0,
              VerifyLevel v = VerifyLevel::none) {
    JobSpec j;
    j.mode = mode;
    j.problem = data(file);
    j.max_degree = max_degree;
    j.precision = precision;
    j.verify = v;
    return run(j);
}

}  // namespace

TEST_CASE("toml parsing") {
    TowerSpec s = std::get<TowerSpec>(parse_problem(data("fix_b.toml")));
    CHECK(s.p == 3);
    CHECK(s.n == 2);
    CHECK(s.eisenstein == std::vector<std::vector<i64>>{{-3}, {0}, {1}});
    GlobalAlgebraSpec g = std::get<GlobalAlgebraSpec>(parse_problem(data("fix_e.toml")));
    CHECK(g.center.f == std::vector<i64>{0, 1});
    REQUIRE(g.ramification.size() == 1);
    CHECK(g.ramification[0].e == 2);
    CHECK(std::holds_alternative<StructureAlgebra>(parse_problem(data("fix_a_algebra.json"))));
    CHECK_THROWS_AS(parse_problem(data("bad_syntax.toml")), input_error);
    CHECK_THROWS_AS(parse_problem("p = 3\nn = 2\n"), input_error);
    CHECK_THROWS_AS(parse_problem("p = 3.5\n"), input_error);
    // scalar coefficients are accepted as constant polynomials
    TowerSpec t = std::get<TowerSpec>(parse_problem("p = 2\nn = 2\neisenstein = [-2, 1]\n"));
    CHECK(t.eisenstein == std::vector<std::vector<i64>>{{-2}, {1}});
}

TEST_CASE("global-thh on FIX-E") {
    JobResult r = job("global-thh", "fix_e.toml", 6);
    CHECK(r.exit_code == 0);
    CHECK(r.doc["groups"][2] == Json::parse(R"({"degree": 2, "free_rank": 0, "torsion": ["2^1"]})"));
    CHECK(r.doc["groups"][0]["free_rank"] == 1);
    CHECK(r.doc["meta"]["mode"] == "global-thh");
}

TEST_CASE("local-thh on FIX-A") {
    JobResult r = job("local-thh", "fix_a.toml", 5);
    CHECK(r.exit_code == 0);
    const Json& g5 = r.doc["groups"][5];
    CHECK(g5["torsion"]["pi_lengths"] == Json::array({1}));
    CHECK(g5["torsion"]["residue_field"] == "F_{3^1}");
    CHECK(g5["free_rank"] == 0);
}

TEST_CASE("verify on FIX-A passes every check") {
    JobResult r = job("verify", "fix_a.toml", 10, 0, VerifyLevel::full);
    CHECK(r.exit_code == 0);
    CHECK(r.doc["checks"].size() > 10);
    for (const Json& c : r.doc["checks"]) CHECK(c["status"] == "ok");
}

TEST_CASE("precision escalation is recorded") {
    JobResult r = job("local-hh", "fix_d.toml", 6, 1);
    CHECK(r.exit_code == 0);
    CHECK(r.doc["meta"]["escalations"].size() >= 1);
    CHECK(r.doc["meta"]["escalations"][0]["from"] == 1);
    CHECK(r.doc["meta"]["precision_used"].get<int>() > 1);
}

TEST_CASE("exit codes") {
    CHECK(job("verify", "corrupt_algebra.json").exit_code == exit_verification);
    CHECK(job("oracle", "corrupt_algebra.json").exit_code == exit_verification);
    CHECK(job("global-thh", "not_maximal.toml").exit_code == exit_not_maximal);
    CHECK(job("global-thh", "uncertified.toml").exit_code == exit_not_maximal);
    CHECK(job("local-thh", "fix_e.toml").exit_code == exit_input);
    CHECK(job("global-hh", "fix_a.toml").exit_code == exit_input);
    CHECK(job("local-thh", "not_eisenstein.toml").exit_code == exit_input);
    CHECK(job("local-nope", "fix_a.toml").exit_code == exit_input);
    JobResult bad = job("local-thh", "bad_syntax.toml");
    CHECK(bad.exit_code == exit_input);
    CHECK(bad.error.find("line 3") != std::string::npos);
}

TEST_CASE("output is deterministic and round-trips") {
    for (auto [mode, file] : {std::pair<std::string, std::string>{"local-thh-modp", "fix_b.toml"},
                              {"global-thh", "fix_f.toml"},
                              {"oracle", "fix_a_algebra.json"}}) {
        const std::string a = dump(job(mode, file).doc), b = dump(job(mode, file).doc);
        CHECK(a == b);
        CHECK(dump(Json::parse(a)) == a);
    }
}

TEST_CASE("oracle mode on a tower compares with the small complex") {
    JobResult r = job("oracle", "fix_b.toml", 3);
    CHECK(r.exit_code == 0);
    CHECK(r.doc["groups"].size() == 4);
    CHECK(r.doc["groups"][0]["torsion"].size() == 3);
}
