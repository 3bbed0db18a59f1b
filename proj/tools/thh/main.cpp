#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "thh_app/jobs.hpp"

int main(int argc, char** argv) {
    using namespace thh::app;
    CLI::App app{"Hochschild and topological Hochschild homology of maximal orders"};
    app.footer(
        "Problems are TOML (tower: p, r, eisenstein, n, precision, gen_exp; global: center, ramification) "
        "or a structure algebra JSON for the oracle.\n"
        "The oracle caps degrees by algebra dimension: dim <= 8 gives 0..5, dim <= 20 gives 0..3, larger gives 0..2.\n"
        "verify without an input runs the acceptance matrix over fixtures A..F; timings go to stderr.\n"
        "Exit codes: 0 success, 2 input error, 3 verification failure, 4 NOT_P_MAXIMAL or UNCERTIFIED.");

    std::string mode, input, out, verify = "none", precision = "auto";
    int max_degree = 10;
    app.add_option("mode", mode, "local-hh | local-thh | local-thh-modp | global-thh | global-hh | oracle | verify")
        ->required();
    app.add_option("input", input, "problem file (TOML or algebra JSON)");
    app.add_option("--max-degree", max_degree, "largest degree to report")->capture_default_str();
    app.add_option("--precision", precision, "precision K, or auto")->capture_default_str();
    app.add_option("--verify", verify, "none | oracle | full")->capture_default_str();
    app.add_option("--out", out, "output path (default stdout)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    JobSpec job;
    job.mode = mode;
    job.max_degree = max_degree;
    try {
        job.verify = parse_verify_level(verify);
        if (precision != "auto") {
            std::size_t used = 0;
            job.precision = std::stoi(precision, &used);
            if (used != precision.size() || job.precision < 1) throw input_error("");
        }
        if (!input.empty()) job.problem = read_file(input);
        else if (mode != "verify") throw input_error("an input file is required for mode " + mode);
    } catch (const input_error& e) {
        std::cerr << "error: " << (*e.what() ? e.what() : "--precision must be a positive integer or auto") << "\n";
        return exit_input;
    } catch (const std::exception&) {
        std::cerr << "error: --precision must be a positive integer or auto\n";
        return exit_input;
    }

    JobResult r;
    if (mode == "verify" && input.empty()) {
        std::vector<MatrixRow> rows = verify_matrix();
        print_matrix(std::cerr, rows);
        r = matrix_result(rows);
    } else {
        r = run(job);
    }
    if (!r.error.empty()) {
        std::cerr << "error: " << r.error << "\n";
        return r.exit_code;
    }
    const std::string text = dump(r.doc);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << out << "\n";
            return exit_input;
        }
        f << text;
    }
    return r.exit_code;
}
