#ifndef ZETALIN_AT_ONE_HPP
#define ZETALIN_AT_ONE_HPP

#include <zetalin/brick.hpp>
#include <zetalin/pfd.hpp>
#include <zetalin/words.hpp>

namespace zetalin {

struct AtOneOptions {
    // Recursion budget: total elementary terms processed across all levels.
    size_t term_budget = 2000000;
};

struct AtOneStats {
    size_t terms_processed = 0;
    size_t bricks_decomposed = 0;
    size_t max_group_size = 0;
    int max_depth_seen = 0;
};

// E0 membership: the term's own z-series is at most log-divergent at z = 1,
// i.e. for every j: sum_{i<=j, mono} e_i <= sum_{i<=j, pole} s_i - j.
bool classify_e0(const ElementaryTerm& t);

// Sum out variable tvar (monomial-only, tvar >= 1) by Faulhaber; the result is
// re-expanded into normal form at depth p-1. Coefficients include t.coeff.
std::vector<ElementaryTerm> bernoulli_reduce(const ElementaryTerm& t, int tvar);

// Regularized value at z = 1 of the sum of the given terms. The group as a
// whole must be at most log-divergent; E1 members are reduced jointly.
MZVExpr regularized_value(const std::vector<ElementaryTerm>& terms,
                          const AtOneOptions& opt = {}, AtOneStats* stats = nullptr);

// Full pipeline: normalize, check convergence, partial fractions, regularize.
// Every composition in the result has weight <= sum A_j.
MZVExpr decompose_at_one(const MultSeries& s, const AtOneOptions& opt = {},
                         AtOneStats* stats = nullptr);

} // namespace zetalin

#endif
