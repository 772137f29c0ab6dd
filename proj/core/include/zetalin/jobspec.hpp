#ifndef ZETALIN_JOBSPEC_HPP
#define ZETALIN_JOBSPEC_HPP

#include <zetalin/series.hpp>
#include <zetalin/sorokin.hpp>
#include <optional>
#include <string>
#include <vector>

namespace zetalin {

// Parser for numerator polynomials: variables k1..kp, integer/rational literals,
// operators + - * ^, parentheses, and poch(expr, len) for Pochhammer products.
MPoly parse_polynomial(const std::string& text, int p);

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : std::runtime_error(msg), position(pos) {}
};

enum class JobMode { DecomposeAtOne, DecomposeGenericZ, FromIntegral, Verify };

struct SeriesSpec {
    int p = 1;
    std::string numerator = "1";
    std::vector<int> A, n, r;
};

struct JobSpec {
    JobMode mode = JobMode::DecomposeAtOne;
    std::optional<SeriesSpec> series;
    std::optional<SorokinIntegral> integral;
    // "one", "symbolic", or explicit rationals per base variable.
    std::string z_kind = "one";
    std::vector<Rat> z_values;
    unsigned precision = 128;
    long cutoff = 4096;
    bool emit_certificate = false;
    bool verify = false;

    MultSeries build_series() const;
};

JobSpec jobspec_from_json(const std::string& text);
std::string jobspec_to_json(const JobSpec& job);

struct RunResult {
    int exit_code = 0;     // 0 ok, 2 classifier rejection, 3 verification failure
    std::string document;  // structured JSON text
};

// Execute a job and render the result document (stable key order, exact
// rationals as strings, no floats in decomposition output).
RunResult run_job(const JobSpec& job);

} // namespace zetalin

#endif
