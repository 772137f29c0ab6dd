#ifndef ZETALIN_SERIES_HPP
#define ZETALIN_SERIES_HPP

#include <zetalin/laurent.hpp>
#include <zetalin/mpoly.hpp>
#include <algorithm>
#include <stdexcept>
#include <vector>

namespace zetalin {

// The nested series
//   sum_{k_1 >= ... >= k_p >= 1} P(k) / prod_i (k_i + r_i)_{n_i+1}^{A_i} *
//                                prod_i args_i^{-k_i}
// with A_i >= 1, n_i >= 0, r_i >= 0 and args_i a monomial in the base z-variables.
struct MultSeries {
    int p = 1;
    MPoly P;               // numerator, p variables
    std::vector<int> A;    // Pochhammer powers
    std::vector<int> n;    // Pochhammer length minus 1
    std::vector<int> r;    // Pochhammer shifts, all zero once normalized
    std::vector<ZMon> args;

    static MultSeries make(int p, MPoly P, std::vector<int> A, std::vector<int> n,
                           std::vector<int> r = {}, std::vector<ZMon> args = {});

    bool normalized() const {
        for (int x : r) if (x) return false;
        return true;
    }
    int zvars() const {
        int nv = 0;
        for (const auto& a : args) nv = std::max(nv, a.nvars());
        return nv;
    }
    void validate() const;
};

struct DegreeProfile {
    std::vector<int> degs; // deg_{X_i} P, -1 for the zero polynomial
    std::vector<int> Dj;   // D_j = sum_{i<=j} A_i (n_i+1) - j - 1
};

DegreeProfile degree_profile(const MultSeries& s);

// Absorb the shifts r_i: n_i += r_i and P *= prod (X_i)_{r_i}^{A_i}.
MultSeries normalize_shifts(const MultSeries& s);

// Convergence criterion: sum_{i<=j} deg_{X_i} P <= D_j for every j.
bool check_convergence(const MultSeries& s);

// Log-divergence criterion: sum_{i<=j} deg_{X_i} P <= D_j + 1 for every j.
bool check_log_divergence(const MultSeries& s);

// Raised by classifiers; carries the first violated inequality.
struct classifier_error : std::runtime_error {
    int j;
    int lhs; // sum of degrees
    int rhs; // D_j (or D_j + 1)
    classifier_error(std::string msg, int j_, int lhs_, int rhs_)
        : std::runtime_error(std::move(msg)), j(j_), lhs(lhs_), rhs(rhs_) {}
};

// As check_convergence but throws classifier_error naming the violated D_j.
void require_convergent(const MultSeries& s);

} // namespace zetalin

#endif
