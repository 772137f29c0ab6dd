#include <zetalin/jobspec.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"zetalin: decompose nested hypergeometric-type series into "
                 "multiple polylogarithms and multiple zeta values"};

    std::string input_path;
    bool at_one = false, generic_z = false, from_integral = false, verify = false;
    bool certificate = false, json_out = true;
    unsigned precision = 0;
    long cutoff = 0;

    app.add_option("job", input_path, "JobSpec JSON file ('-' for stdin)");
    app.add_flag("--at-one", at_one, "decompose at z = 1 into multiple zeta values");
    app.add_flag("--generic-z", generic_z, "decompose at generic z into polylogarithms");
    app.add_flag("--from-integral", from_integral, "convert an integral to its series");
    app.add_flag("--verify", verify, "run the numeric certification oracle");
    app.add_flag("--certificate", certificate, "emit the denominator certificate");
    app.add_flag("--json,!--no-json", json_out, "emit the JSON result document");
    app.add_option("--precision", precision, "working precision in bits");
    app.add_option("--cutoff", cutoff, "summation cutoff for numeric checks");

    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (input_path.empty() || input_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "cannot open " << input_path << "\n";
            return 1;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    try {
        zetalin::JobSpec job = zetalin::jobspec_from_json(text);
        if (at_one) job.mode = zetalin::JobMode::DecomposeAtOne;
        if (generic_z) job.mode = zetalin::JobMode::DecomposeGenericZ;
        if (from_integral) job.mode = zetalin::JobMode::FromIntegral;
        if (verify) job.verify = true;
        if (certificate) job.emit_certificate = true;
        if (precision) job.precision = precision;
        if (cutoff) job.cutoff = cutoff;

        zetalin::RunResult res = zetalin::run_job(job);
        if (json_out) std::cout << res.document << "\n";
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
