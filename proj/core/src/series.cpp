#include <zetalin/series.hpp>

#include <sstream>

namespace zetalin {

MultSeries MultSeries::make(int p, MPoly P, std::vector<int> A, std::vector<int> n,
                            std::vector<int> r, std::vector<ZMon> args) {
    MultSeries s;
    s.p = p;
    s.P = std::move(P);
    s.A = std::move(A);
    s.n = std::move(n);
    s.r = r.empty() ? std::vector<int>(p, 0) : std::move(r);
    if (args.empty()) {
        // Default arguments: z_i^{-k_i} with one base variable per index.
        for (int i = 0; i < p; ++i) s.args.push_back(ZMon::var(p, i));
    } else {
        s.args = std::move(args);
    }
    s.validate();
    return s;
}

void MultSeries::validate() const {
    if (p < 1) throw std::invalid_argument("MultSeries: p must be >= 1");
    if (P.nvars() != p) throw std::invalid_argument("MultSeries: numerator arity mismatch");
    if (static_cast<int>(A.size()) != p || static_cast<int>(n.size()) != p ||
        static_cast<int>(r.size()) != p || static_cast<int>(args.size()) != p)
        throw std::invalid_argument("MultSeries: vector length mismatch");
    for (int i = 0; i < p; ++i) {
        if (A[i] < 1) throw std::invalid_argument("MultSeries: A_i must be >= 1");
        if (n[i] < 0 || r[i] < 0) throw std::invalid_argument("MultSeries: n_i, r_i must be >= 0");
    }
}

DegreeProfile degree_profile(const MultSeries& s) {
    DegreeProfile d;
    int acc = 0;
    for (int i = 0; i < s.p; ++i) {
        d.degs.push_back(s.P.degree(i));
        acc += s.A[i] * (s.n[i] + 1);
        d.Dj.push_back(acc - (i + 1) - 1);
    }
    return d;
}

MultSeries normalize_shifts(const MultSeries& s) {
    MultSeries t = s;
    for (int i = 0; i < s.p; ++i) {
        if (s.r[i] == 0) continue;
        MPoly poch = pochhammer(MPoly::variable(s.p, i), s.r[i]);
        for (int a = 0; a < s.A[i]; ++a) t.P = t.P * poch;
        t.n[i] = s.n[i] + s.r[i];
        t.r[i] = 0;
    }
    return t;
}

namespace {

// Returns the first violated j (1-based) for the criterion
// sum_{i<=j} deg <= D_j + slack, or 0 when all hold.
int violated_index(const MultSeries& s, int slack, int* lhs_out, int* rhs_out) {
    DegreeProfile d = degree_profile(s);
    if (s.P.is_zero()) return 0; // deg = -infinity satisfies everything
    int degsum = 0;
    for (int j = 0; j < s.p; ++j) {
        degsum += d.degs[j];
        if (degsum > d.Dj[j] + slack) {
            if (lhs_out) *lhs_out = degsum;
            if (rhs_out) *rhs_out = d.Dj[j] + slack;
            return j + 1;
        }
    }
    return 0;
}

} // namespace

bool check_convergence(const MultSeries& s) {
    if (!s.normalized()) throw std::logic_error("check_convergence: series not normalized");
    return violated_index(s, 0, nullptr, nullptr) == 0;
}

bool check_log_divergence(const MultSeries& s) {
    if (!s.normalized()) throw std::logic_error("check_log_divergence: series not normalized");
    return violated_index(s, 1, nullptr, nullptr) == 0;
}

void require_convergent(const MultSeries& s) {
    int lhs = 0, rhs = 0;
    int j = violated_index(s, 0, &lhs, &rhs);
    if (j) {
        std::ostringstream os;
        os << "series diverges: sum_{i<=" << j << "} deg_{X_i}P = " << lhs
           << " exceeds D_" << j << " = " << rhs;
        throw classifier_error(os.str(), j, lhs, rhs);
    }
}

} // namespace zetalin
