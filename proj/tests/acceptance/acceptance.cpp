// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "thh_app/jobs.hpp"

using namespace thh;
using namespace thh::app;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<Check> checks;
    std::string extra;
};

void add(Criterion& c, const std::string& fixture, std::vector<Check> checks) {
    for (Check& k : checks) {
        k.name = fixture + "/" + k.name;
        c.checks.push_back(std::move(k));
    }
}

std::vector<Check> run_guarded(const std::function<std::vector<Check>()>& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return {{"exception", false, e.what()}};
    }
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    std::vector<Criterion> cs{{1, "oracle equivalence", {}, {}},   {2, "integral HH", {}, {}},
                              {3, "resolution exactness", {}, {}}, {4, "Brun engine equals closed form", {}, {}},
                              {5, "UCT rank accounting", {}, {}},  {6, "induced maps", {}, {}},
                              {7, "global groups", {}, {}},        {8, "property suites", {}, {}}};
    std::vector<std::string> notes;

    auto t0 = clock::now();
    for (const Fixture& f : local_fixtures()) {
        Tower t = Tower::make(f.spec);
        add(cs[0], f.name, run_guarded([&] { return check_oracle(t, true); }));
    }
    const double oracle_secs = std::chrono::duration<double>(clock::now() - t0).count();
    cs[0].checks.push_back({"budget_under_300s", oracle_secs < 300, std::to_string(oracle_secs) + " s"});

    for (const Fixture& f : local_fixtures()) {
        Tower t = Tower::make(f.spec);
        add(cs[1], f.name, run_guarded([&] { return check_integral_hh(integral_tower(f.spec)); }));
        add(cs[2], f.name, run_guarded([&] { return check_resolution(t); }));
        add(cs[3], f.name, run_guarded([&] { return check_brun(t, 10); }));
        add(cs[4], f.name, run_guarded([&] { return check_uct(t, 12); }));
        std::vector<std::string> fnotes;
        add(cs[5], f.name, run_guarded([&] { return check_induced_maps(t, &fnotes); }));
        for (const std::string& n : fnotes) notes.push_back("FIX-" + f.name + ": " + n);
        add(cs[7], f.name, run_guarded([&] { return check_properties(t); }));
        add(cs[7], f.name, run_guarded([&] {
                JobSpec j;
                j.mode = "local-thh";
                j.problem = "p = " + std::to_string(f.spec.p) + "\nn = " + std::to_string(f.spec.n) +
                            "\neisenstein = " + Json(f.spec.eisenstein).dump() + "\n";
                const std::string a = dump(run(j).doc), b = dump(run(j).doc);
                return std::vector<Check>{{"byte_identical_rerun", a == b, {}},
                                          {"json_round_trip", dump(Json::parse(a)) == a, {}}};
            }));
    }
    add(cs[6], "E", run_guarded(check_global_E));
    add(cs[6], "F", run_guarded(check_global_F));
    add(cs[6], "F", run_guarded([] { return check_global_consistency(fixture_F(), 8); }));

    bool all = true;
    for (const Criterion& c : cs) {
        const bool ok = all_ok(c.checks);
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << c.checks.size()
                  << " checks)\n";
        for (const Check& k : c.checks)
            if (!k.ok) std::cout << "    failed " << k.name << (k.detail.empty() ? "" : ": " + k.detail) << "\n";
    }
    for (const std::string& n : notes) std::cout << "NOTE " << n << "\n";
    return all ? 0 : 1;
}
