#include "thh_app/jobs.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>

#include "thh/brun_ss.hpp"
#include "thh/closed_forms.hpp"
#include "thh/cyclic_algebra.hpp"
#include "thh/hochschild.hpp"
#include "thh/small_complexes.hpp"

namespace thh::app {

namespace {

constexpr int max_precision = 64;

struct Escalated {
    Tower tower;
    std::vector<LocalModule> value;
};

// Compare a computation at K and K+1; double K until they agree.
Escalated escalate(TowerSpec spec, int requested, const std::function<std::vector<LocalModule>(const Tower&)>& f,
                   Json& escalations) {
    spec.K = requested;
    Tower t = Tower::make(spec);
    for (;;) {
        std::vector<LocalModule> a = f(t), b = f(t.with_precision(t.K() + 1));
        if (a == b) return {t, std::move(a)};
        const int next = 2 * t.K();
        if (next > max_precision) throw verification_error("precision escalation did not stabilize below K = 64");
        escalations.push_back({{"from", t.K()}, {"to", next}, {"reason", "results at K and K+1 differ"}});
        t = t.with_precision(next);
    }
}

Json checks_json(const std::vector<Check>& cs) {
    Json a = Json::array();
    for (const Check& c : cs) a.push_back({{"name", c.name}, {"status", c.ok ? "ok" : "fail"}});
    return a;
}

Json meta(const std::string& mode, Json parameters, Json precision, Json escalations) {
    Json m;
    m["mode"] = mode;
    m["parameters"] = std::move(parameters);
    m["precision_used"] = std::move(precision);
    m["escalations"] = std::move(escalations);
    return m;
}

std::vector<Check> tower_suite(const Tower& t, int max_degree, std::vector<std::string>* notes) {
    std::vector<Check> out;
    auto add = [&](std::vector<Check> c) { out.insert(out.end(), c.begin(), c.end()); };
    add(check_oracle(t, true));
    add(check_integral_hh(integral_tower(t.spec())));
    add(check_resolution(t));
    add(check_brun(t, std::max(10, max_degree)));
    add(check_uct(t, std::max(12, max_degree)));
    add(check_induced_maps(t, notes));
    add(check_properties(t));
    return out;
}

std::vector<Check> algebra_checks(const StructureAlgebra& a) {
    std::vector<Check> out{{"associative", check_associative(a), {}}, {"unital", check_unit(a), {}}};
    if (!a.weight.empty()) out.push_back({"weight_grading", check_weight_grading(a), {}});
    return out;
}

Json local_groups(const std::vector<LocalModule>& ms, const Tower& t) {
    Json g = Json::array();
    for (size_t i = 0; i < ms.size(); ++i) g.push_back(module_json(static_cast<int>(i), ms[i], t.p(), t.r()));
    return g;
}

JobResult run_local(const JobSpec& job, const TowerSpec& spec) {
    Json esc = Json::array();
    const int deg = job.max_degree;
    std::function<std::vector<LocalModule>(const Tower&)> f;
    std::function<LocalModule(const Tower&, int)> closed;
    if (job.mode == "local-hh") {
        f = [deg](const Tower& t) { return hh_A_via_small(t, Flavor::integral, deg); };
        closed = hh_A;
    } else if (job.mode == "local-thh") {
        f = [deg](const Tower& t) {
            std::vector<LocalModule> v;
            for (int i = 0; i <= deg; ++i) v.push_back(thh_A(t, i));
            return v;
        };
    } else {
        f = [deg](const Tower& t) {
            TwoRowPage page = build_E2(t, deg);
            return assemble(t, page, compute_Einfty(page)).degree;
        };
        closed = thh_A_modp;
    }
    Escalated e = escalate(spec, job.precision, f, esc);
    const Tower& t = e.tower;

    std::vector<Check> checks{{"precision_stable[K=" + std::to_string(t.K()) + "," + std::to_string(t.K() + 1) + "]", true, {}}};
    if (closed) {
        bool ok = true;
        for (int i = 0; i <= deg; ++i) ok = ok && e.value[i] == closed(t, i);
        checks.push_back({"closed_form_agreement", ok, {}});
    }
    std::vector<std::string> notes;
    if (job.verify == VerifyLevel::oracle) {
        auto c = check_oracle(t, false);
        checks.insert(checks.end(), c.begin(), c.end());
    } else if (job.verify == VerifyLevel::full) {
        auto c = tower_suite(t, deg, &notes);
        checks.insert(checks.end(), c.begin(), c.end());
    }

    JobResult r;
    r.doc["meta"] = meta(job.mode, tower_parameters(spec), t.K(), esc);
    if (!notes.empty()) r.doc["meta"]["notes"] = notes;
    r.doc["groups"] = local_groups(e.value, t);
    r.doc["checks"] = checks_json(checks);
    r.exit_code = all_ok(checks) ? exit_ok : exit_verification;
    return r;
}

JobResult run_global(const JobSpec& job, const GlobalAlgebraSpec& g) {
    validate(g);
    Json groups = Json::array();
    for (int i = 0; i <= job.max_degree; ++i)
        groups.push_back(group_json(i, job.mode == "global-thh" ? thh_U(g, i) : hh_U(g, i)));
    std::vector<Check> checks;
    if (job.verify != VerifyLevel::none) checks = check_global_consistency(g, std::max(1, job.max_degree));
    JobResult r;
    r.doc["meta"] = meta(job.mode, global_parameters(g), nullptr, Json::array());
    r.doc["groups"] = groups;
    r.doc["checks"] = checks_json(checks);
    r.exit_code = all_ok(checks) ? exit_ok : exit_verification;
    return r;
}

Json fp_groups(const std::vector<long long>& dims, i64 p) {
    Json g = Json::array();
    for (size_t i = 0; i < dims.size(); ++i)
        g.push_back(group_json(static_cast<int>(i), make_group(0, std::vector<mpz_class>(dims[i], mpz_class(p)))));
    return g;
}

JobResult run_oracle(const JobSpec& job, const Problem& prob) {
    JobResult r;
    if (const auto* a = std::get_if<StructureAlgebra>(&prob)) {
        std::vector<Check> checks = algebra_checks(*a);
        Json params = {{"p", a->p}, {"K", a->K}, {"dim", a->dim}};
        r.doc["meta"] = meta(job.mode, params, a->K, Json::array());
        if (!all_ok(checks)) {
            r.doc["groups"] = Json::array();
            r.doc["checks"] = checks_json(checks);
            r.exit_code = exit_verification;
            return r;
        }
        if (a->K != 1) throw input_error("oracle: the algebra must be over F_p (K = 1)");
        const int deg = std::min(job.max_degree, oracle_degree(a->dim));
        HochschildOptions opt;
        opt.use_frame = a->has_frame();
        HochschildReport rep = hochschild_homology(*a, deg, opt);
        r.doc["meta"]["parameters"]["max_degree_used"] = deg;
        r.doc["groups"] = fp_groups(rep.hh, a->p);
        r.doc["checks"] = checks_json(checks);
        return r;
    }
    if (const auto* s = std::get_if<TowerSpec>(&prob)) {
        TowerSpec spec = *s;
        spec.K = job.precision;
        Tower t = Tower::make(spec);
        SplitResult split = split_scalars(t);
        const int deg = std::min(job.max_degree, oracle_degree(split.algebra.dim * t.r()));
        HochschildOptions opt;
        HochschildReport rep = hochschild_homology(split.algebra, deg, opt);
        std::vector<long long> dims;
        for (long long h : rep.hh) dims.push_back(h * t.r());
        std::vector<Check> checks = algebra_checks(split.algebra);
        checks.push_back({"phi_isomorphism", split.phi_multiplicative && split.phi_bijective, {}});
        std::vector<long long> small;
        for (const LocalModule& m : hh_A_via_small(t, Flavor::modp, deg)) small.push_back(static_cast<long long>(t.r()) * m.length_sum());
        checks.push_back({"small_complex_agreement", dims == small, {}});
        Json params = tower_parameters(*s);
        params["max_degree_used"] = deg;
        r.doc["meta"] = meta(job.mode, params, t.K(), Json::array());
        r.doc["groups"] = fp_groups(dims, t.p());
        r.doc["checks"] = checks_json(checks);
        r.exit_code = all_ok(checks) ? exit_ok : exit_verification;
        return r;
    }
    throw input_error("oracle mode needs a tower TOML or a structure algebra JSON");
}

JobResult run_verify(const JobSpec& job, const Problem& prob) {
    JobResult r;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    if (const auto* a = std::get_if<StructureAlgebra>(&prob)) {
        checks = algebra_checks(*a);
        r.doc["meta"] = meta(job.mode, Json{{"p", a->p}, {"K", a->K}, {"dim", a->dim}}, a->K, Json::array());
    } else if (const auto* s = std::get_if<TowerSpec>(&prob)) {
        TowerSpec spec = *s;
        spec.K = job.precision;
        Tower t = Tower::make(spec);
        checks = tower_suite(t, job.max_degree, &notes);
        r.doc["meta"] = meta(job.mode, tower_parameters(*s), t.K(), Json::array());
    } else {
        const auto& g = std::get<GlobalAlgebraSpec>(prob);
        validate(g);
        checks = check_global_consistency(g, std::max(1, job.max_degree));
        r.doc["meta"] = meta(job.mode, global_parameters(g), nullptr, Json::array());
    }
    if (!notes.empty()) r.doc["meta"]["notes"] = notes;
    r.doc["groups"] = Json::array();
    r.doc["checks"] = checks_json(checks);
    r.exit_code = all_ok(checks) ? exit_ok : exit_verification;
    return r;
}

}  // namespace

JobResult matrix_result(const std::vector<MatrixRow>& rows) {
    Json checks = Json::array();
    bool ok = true;
    for (const MatrixRow& m : rows) {
        checks.push_back({{"name", m.fixture + "/" + m.check}, {"status", m.ok ? "ok" : "fail"}});
        ok = ok && m.ok;
    }
    JobResult r;
    r.doc["meta"] = meta("verify", Json{{"fixtures", {"A", "B", "C", "D", "E", "F"}}}, nullptr, Json::array());
    r.doc["groups"] = Json::array();
    r.doc["checks"] = checks;
    r.exit_code = ok ? exit_ok : exit_verification;
    return r;
}

namespace {

JobResult failure(int code, const std::string& what) {
    JobResult r;
    r.exit_code = code;
    r.error = what;
    return r;
}

}  // namespace

VerifyLevel parse_verify_level(const std::string& s) {
    if (s == "none") return VerifyLevel::none;
    if (s == "oracle") return VerifyLevel::oracle;
    if (s == "full") return VerifyLevel::full;
    throw input_error("--verify must be none, oracle or full");
}

const std::vector<std::string>& modes() {
    static const std::vector<std::string> m{"local-hh", "local-thh", "local-thh-modp", "global-thh",
                                            "global-hh", "oracle",   "verify"};
    return m;
}

JobResult run(const JobSpec& job) {
    try {
        if (std::find(modes().begin(), modes().end(), job.mode) == modes().end())
            throw input_error("unknown mode '" + job.mode + "'");
        if (job.max_degree < 0) throw input_error("--max-degree must be >= 0");
        if (job.precision < 0) throw input_error("--precision must be >= 1");
        if (job.mode == "verify" && job.problem.empty()) return matrix_result(verify_matrix());
        Problem prob = parse_problem(job.problem);
        if (job.mode == "oracle") return run_oracle(job, prob);
        if (job.mode == "verify") return run_verify(job, prob);
        if (job.mode.rfind("local-", 0) == 0) {
            const auto* s = std::get_if<TowerSpec>(&prob);
            if (!s) throw input_error(job.mode + " needs a tower problem (keys p, eisenstein, n)");
            return run_local(job, *s);
        }
        const auto* g = std::get_if<GlobalAlgebraSpec>(&prob);
        if (!g) throw input_error(job.mode + " needs a global problem (keys center, ramification)");
        return run_global(job, *g);
    } catch (const not_p_maximal& e) {
        return failure(exit_not_maximal, e.what());
    } catch (const uncertified& e) {
        return failure(exit_not_maximal, e.what());
    } catch (const verification_error& e) {
        return failure(exit_verification, e.what());
    } catch (const input_error& e) {
        return failure(exit_input, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(exit_input, e.what());
    } catch (const std::length_error& e) {
        return failure(exit_input, e.what());
    } catch (const std::exception& e) {
        return failure(exit_verification, std::string("internal error: ") + e.what());
    }
}

std::vector<MatrixRow> verify_matrix() {
    using clock = std::chrono::steady_clock;
    using Job = std::function<std::vector<Check>()>;
    struct Task {
        std::string fixture;
        Job job;
    };
    std::vector<Task> tasks;
    for (const Fixture& f : local_fixtures()) {
        Tower t = Tower::make(f.spec);
        tasks.push_back({f.name, [t] { return check_oracle(t, true); }});
        tasks.push_back({f.name, [s = f.spec] { return check_integral_hh(integral_tower(s)); }});
        tasks.push_back({f.name, [t] { return check_resolution(t); }});
        tasks.push_back({f.name, [t] { return check_brun(t, 10); }});
        tasks.push_back({f.name, [t] { return check_uct(t, 12); }});
        tasks.push_back({f.name, [t] { return check_induced_maps(t); }});
        tasks.push_back({f.name, [t] { return check_properties(t); }});
        tasks.push_back({f.name, [s = f.spec] {
                             JobSpec j;
                             j.mode = "local-thh-modp";
                             j.problem = "p = " + std::to_string(s.p) + "\nn = " + std::to_string(s.n) + "\neisenstein = " +
                                         Json(s.eisenstein).dump() + "\n";
                             const std::string a = dump(run(j).doc), b = dump(run(j).doc);
                             return std::vector<Check>{{"deterministic_output", a == b, {}}};
                         }});
    }
    tasks.push_back({"E", [] { return check_global_E(); }});
    tasks.push_back({"F", [] { return check_global_F(); }});
    tasks.push_back({"F", [] { return check_global_consistency(fixture_F(), 8); }});

    std::vector<std::future<std::pair<std::vector<Check>, double>>> futs;
    for (const Task& task : tasks)
        futs.push_back(std::async(std::launch::async, [job = task.job] {
            auto t0 = clock::now();
            std::vector<Check> c;
            try {
                c = job();
            } catch (const std::exception& e) {
                c = {{"exception", false, e.what()}};
            }
            return std::make_pair(std::move(c), std::chrono::duration<double>(clock::now() - t0).count());
        }));
    std::vector<MatrixRow> rows;
    for (size_t i = 0; i < tasks.size(); ++i) {
        auto [checks, secs] = futs[i].get();
        for (const Check& c : checks) rows.push_back({tasks[i].fixture, c.name, c.ok, secs, c.detail});
    }
    return rows;
}

void print_matrix(std::ostream& os, const std::vector<MatrixRow>& rows) {
    os << std::left << std::setw(8) << "fixture" << std::setw(52) << "check" << std::setw(7) << "status"
       << "seconds\n";
    for (const MatrixRow& r : rows) {
        os << std::setw(8) << r.fixture << std::setw(52) << r.check << std::setw(7) << (r.ok ? "ok" : "FAIL")
           << std::fixed << std::setprecision(3) << r.seconds << "\n";
        if (!r.ok && !r.detail.empty()) os << "        " << r.detail << "\n";
    }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace thh::app
