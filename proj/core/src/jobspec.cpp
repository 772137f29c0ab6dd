#include <zetalin/jobspec.hpp>
#include <zetalin/at_one.hpp>
#include <zetalin/numeric.hpp>

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace zetalin {

namespace {

// ---------------------------------------------------------------------------
// Recursive-descent polynomial parser.
// ---------------------------------------------------------------------------

struct Parser {
    const std::string& text;
    size_t pos = 0;
    int p;

    explicit Parser(const std::string& t, int p_) : text(t), p(p_) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    MPoly parse() {
        MPoly e = expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return e;
    }

    MPoly expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        MPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            skip_ws();
            if (eat('*'))
                acc = acc * factor();
            else
                break;
        }
        return acc;
    }

    MPoly factor() {
        MPoly base = atom();
        skip_ws();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            MPoly acc = MPoly::constant(p, Rat(1));
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        long v = std::stol(text.substr(start, pos - start));
        return neg ? -v : v;
    }

    MPoly atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            MPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            skip_ws();
            if (eat('/')) {
                long den = integer();
                if (den == 0) fail("zero denominator");
                return MPoly::constant(p, Rat(num, den));
            }
            return MPoly::constant(p, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "poch") {
                if (!eat('(')) fail("expected '(' after poch");
                MPoly a = expr();
                if (!eat(',')) fail("expected ',' in poch");
                long m = integer();
                if (m < 0) fail("poch length must be >= 0");
                if (!eat(')')) fail("expected ')' after poch");
                return pochhammer(a, static_cast<int>(m));
            }
            if (name.size() >= 2 && name[0] == 'k') {
                int idx = 0;
                for (size_t i = 1; i < name.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(name[i]))) { idx = -1; break; }
                    idx = idx * 10 + (name[i] - '0');
                }
                if (idx >= 1 && idx <= p) return MPoly::variable(p, idx - 1);
                if (idx > p) { pos = start; fail("unknown variable " + name); }
            }
            pos = start;
            fail("unknown identifier " + name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

using json = nlohmann::ordered_json;

std::string mode_str(JobMode m) {
    switch (m) {
        case JobMode::DecomposeAtOne: return "decompose-at-one";
        case JobMode::DecomposeGenericZ: return "decompose-generic-z";
        case JobMode::FromIntegral: return "from-integral";
        case JobMode::Verify: return "verify";
    }
    return "?";
}

JobMode mode_from(const std::string& s) {
    if (s == "decompose-at-one") return JobMode::DecomposeAtOne;
    if (s == "decompose-generic-z") return JobMode::DecomposeGenericZ;
    if (s == "from-integral") return JobMode::FromIntegral;
    if (s == "verify") return JobMode::Verify;
    throw std::invalid_argument("unknown mode: " + s);
}

json series_to_json(const SeriesSpec& s) {
    json j;
    j["p"] = s.p;
    j["numerator"] = s.numerator;
    j["A"] = s.A;
    j["n"] = s.n;
    if (!s.r.empty()) j["r"] = s.r;
    return j;
}

SeriesSpec series_from_json(const json& j) {
    SeriesSpec s;
    s.p = j.at("p").get<int>();
    s.numerator = j.at("numerator").get<std::string>();
    s.A = j.at("A").get<std::vector<int>>();
    s.n = j.at("n").get<std::vector<int>>();
    if (j.contains("r")) s.r = j.at("r").get<std::vector<int>>();
    return s;
}

json mzv_to_json(const MZVExpr& v) {
    json j;
    j["constant"] = rat_str(v.constant);
    json terms = json::array();
    for (const auto& [c, q] : v.terms) {
        json t;
        t["s"] = c;
        t["coeff"] = rat_str(q);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

json laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["z_exponents"] = m.e;
        t["coeff"] = rat_str(c);
        terms.push_back(t);
    }
    return terms;
}

json decomposition_to_json(const Decomposition& d) {
    json j;
    json terms = json::array();
    for (const auto& [t, c] : d.ordered_terms()) {
        json e;
        e["s"] = t.s;
        json args = json::array();
        for (const auto& m : t.args) args.push_back(m.e);
        e["args"] = args;
        e["coeff"] = laurent_to_json(c);
        terms.push_back(e);
    }
    j["la_terms"] = terms;
    j["constant"] = laurent_to_json(d.constant());
    return j;
}

std::string bf_str(const BigFloat& x) {
    std::ostringstream os;
    os.precision(30);
    os << x;
    return os.str();
}

} // namespace

MPoly parse_polynomial(const std::string& text, int p) {
    Parser parser(text, p);
    return parser.parse();
}

MultSeries JobSpec::build_series() const {
    if (!series) throw std::invalid_argument("job has no series");
    MPoly P = parse_polynomial(series->numerator, series->p);
    return MultSeries::make(series->p, P, series->A, series->n, series->r);
}

JobSpec jobspec_from_json(const std::string& text) {
    json j = json::parse(text);
    JobSpec job;
    job.mode = mode_from(j.at("mode").get<std::string>());
    if (j.contains("series")) job.series = series_from_json(j.at("series"));
    if (j.contains("integral")) {
        const auto& ji = j.at("integral");
        SorokinIntegral I;
        I.D = ji.at("D").get<int>();
        I.p = ji.at("p").get<int>();
        I.r = ji.at("r").get<std::vector<int>>();
        I.s = ji.at("s").get<std::vector<int>>();
        I.t = ji.at("t").get<std::vector<int>>();
        I.d = ji.at("d").get<std::vector<int>>();
        job.integral = I;
    }
    if (j.contains("z")) {
        const auto& jz = j.at("z");
        if (jz.is_string()) {
            job.z_kind = jz.get<std::string>();
            if (job.z_kind != "one" && job.z_kind != "symbolic")
                throw std::invalid_argument("z must be \"one\", \"symbolic\", or a list");
        } else {
            job.z_kind = "values";
            for (const auto& v : jz)
                job.z_values.push_back(rat_from_string(v.get<std::string>()));
        }
    }
    if (j.contains("precision")) job.precision = j.at("precision").get<unsigned>();
    if (j.contains("cutoff")) job.cutoff = j.at("cutoff").get<long>();
    if (j.contains("certificate")) job.emit_certificate = j.at("certificate").get<bool>();
    if (j.contains("verify")) job.verify = j.at("verify").get<bool>();
    return job;
}

std::string jobspec_to_json(const JobSpec& job) {
    json j;
    j["mode"] = mode_str(job.mode);
    if (job.series) j["series"] = series_to_json(*job.series);
    if (job.integral) {
        json ji;
        ji["D"] = job.integral->D;
        ji["p"] = job.integral->p;
        ji["r"] = job.integral->r;
        ji["s"] = job.integral->s;
        ji["t"] = job.integral->t;
        ji["d"] = job.integral->d;
        j["integral"] = ji;
    }
    if (job.z_kind == "values") {
        json vals = json::array();
        for (const auto& v : job.z_values) vals.push_back(rat_str(v));
        j["z"] = vals;
    } else {
        j["z"] = job.z_kind;
    }
    j["precision"] = job.precision;
    j["cutoff"] = job.cutoff;
    j["certificate"] = job.emit_certificate;
    j["verify"] = job.verify;
    return j.dump(2);
}

namespace {

json diagnostics_json(const MultSeries& s) {
    DegreeProfile d = degree_profile(s);
    json j;
    j["degrees"] = d.degs;
    j["D"] = d.Dj;
    j["convergent"] = check_convergence(s);
    j["log_divergent"] = check_log_divergence(s);
    return j;
}

int run_at_one(const JobSpec& job, json& out) {
    MultSeries s = job.build_series();
    MultSeries norm = normalize_shifts(s);
    out["diagnostics"] = diagnostics_json(norm);
    MZVExpr v;
    try {
        v = decompose_at_one(s);
    } catch (const classifier_error& e) {
        json err;
        err["type"] = "classifier";
        err["message"] = e.what();
        err["j"] = e.j;
        err["lhs"] = e.lhs;
        err["rhs"] = e.rhs;
        out["error"] = err;
        return 2;
    }
    out["mzv"] = mzv_to_json(v);

    if (job.verify) {
        NumericResult lhs = series_numeric(s, std::vector<Rat>(s.p, Rat(1)), job.cutoff,
                                           job.precision);
        BigFloat rhs = mzv_expr_numeric(v, job.precision);
        BigFloat diff = abs(lhs.value - rhs);
        BigFloat tol = BigFloat("1e-8");
        json ver;
        ver["lhs"] = bf_str(lhs.value);
        ver["rhs"] = bf_str(rhs);
        ver["absdiff"] = bf_str(diff);
        ver["tolerance"] = bf_str(tol);
        bool pass = diff <= tol;
        ver["pass"] = pass;
        out["verification"] = ver;
        if (!pass) return 3;
    }
    return 0;
}

int run_generic_z(const JobSpec& job, json& out) {
    MultSeries s = normalize_shifts(job.build_series());
    out["diagnostics"] = diagnostics_json(s);

    Decomposition total = decompose_series_generic(s);
    out["decomposition"] = decomposition_to_json(total);

    if (job.emit_certificate) {
        // Certificate only covers positive-exponent bricks; report the
        // coefficient denominator and z1-degree range actually observed.
        Int den = total.constant().denominator();
        auto [lo, hi] = total.constant().exponent_range(0);
        for (const auto& [t, c] : total.la_terms()) {
            den = lcm(den, c.denominator());
            auto [l2, h2] = c.exponent_range(0);
            lo = std::min(lo, l2);
            hi = std::max(hi, h2);
        }
        json cert;
        cert["coefficient_denominator"] = den.str();
        cert["z1_exponent_min"] = lo;
        cert["z1_exponent_max"] = hi;
        out["certificate"] = cert;
    }

    if (job.verify) {
        if (job.z_kind != "values" ||
            static_cast<int>(job.z_values.size()) != s.zvars())
            throw std::invalid_argument("verify in generic-z mode needs explicit z values");
        NumericResult lhs = series_numeric(s, job.z_values, job.cutoff, job.precision);
        NumericResult rhs = decomposition_numeric(total, job.z_values, job.precision);
        BigFloat diff = abs(lhs.value - rhs.value);
        BigFloat tol = BigFloat("1e-20") + lhs.error * 4;
        json ver;
        ver["lhs"] = bf_str(lhs.value);
        ver["rhs"] = bf_str(rhs.value);
        ver["absdiff"] = bf_str(diff);
        ver["tolerance"] = bf_str(tol);
        bool pass = diff <= tol;
        ver["pass"] = pass;
        out["verification"] = ver;
        if (!pass) return 3;
    }
    return 0;
}

int run_from_integral(const JobSpec& job, json& out) {
    if (!job.integral) throw std::invalid_argument("from-integral mode needs an integral");
    SeriesFromIntegral conv = series_from_integral(*job.integral);
    json c;
    c["prefactor_coeff"] = rat_str(conv.coeff);
    c["prefactor_z_power"] = conv.z_power;
    json ser;
    ser["p"] = conv.series.p;
    ser["A"] = conv.series.A;
    ser["n"] = conv.series.n;
    ser["r"] = conv.series.r;
    ser["numerator"] = conv.series.P.str([&] {
        std::vector<std::string> names;
        for (int i = 0; i < conv.series.p; ++i) names.push_back("k" + std::to_string(i + 1));
        return names;
    }());
    c["series"] = ser;
    out["integral_series"] = c;

    if (job.verify) {
        Rat z = job.z_kind == "values" && !job.z_values.empty() ? job.z_values[0] : Rat(2);
        QuadratureResult quad = quadrature_check(*job.integral, z);
        NumericResult snum = series_numeric(conv.series, {z}, job.cutoff, job.precision);
        BigFloat rhs = to_bigfloat(conv.coeff) * to_bigfloat(rat_pow(z, conv.z_power)) *
                       snum.value;
        BigFloat diff = abs(BigFloat(quad.value) - rhs);
        BigFloat tol = BigFloat(quad.error) * 4 + snum.error + BigFloat("1e-6");
        json ver;
        ver["quadrature"] = quad.value;
        ver["quadrature_method"] = quad.method;
        ver["series"] = bf_str(rhs);
        ver["absdiff"] = bf_str(diff);
        ver["tolerance"] = bf_str(tol);
        bool pass = diff <= tol;
        ver["pass"] = pass;
        out["verification"] = ver;
        if (!pass) return 3;
    }
    return 0;
}

} // namespace

RunResult run_job(const JobSpec& job) {
    json out;
    out["input"] = json::parse(jobspec_to_json(job));
    int code = 0;
    try {
        switch (job.mode) {
            case JobMode::DecomposeAtOne:
                code = run_at_one(job, out);
                break;
            case JobMode::DecomposeGenericZ:
                code = run_generic_z(job, out);
                break;
            case JobMode::FromIntegral:
                code = run_from_integral(job, out);
                break;
            case JobMode::Verify: {
                JobSpec j2 = job;
                j2.verify = true;
                j2.mode = (job.z_kind == "one") ? JobMode::DecomposeAtOne
                                                : JobMode::DecomposeGenericZ;
                if (job.integral) j2.mode = JobMode::FromIntegral;
                return run_job(j2);
            }
        }
    } catch (const classifier_error& e) {
        json err;
        err["type"] = "classifier";
        err["message"] = e.what();
        err["j"] = e.j;
        err["lhs"] = e.lhs;
        err["rhs"] = e.rhs;
        out["error"] = err;
        code = 2;
    }
    return {code, out.dump(2)};
}

} // namespace zetalin
