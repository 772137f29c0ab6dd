#include <zetalin/at_one.hpp>
#include <zetalin/bernoulli.hpp>

#include <map>
#include <stdexcept>

namespace zetalin {

bool classify_e0(const ElementaryTerm& t) {
    int mono = 0, pole = 0;
    for (int j = 0; j < t.depth(); ++j) {
        if (t.f[j].is_mono())
            mono += t.f[j].e;
        else
            pole += t.f[j].s;
        if (mono > pole - (j + 1)) return false;
    }
    return true;
}

namespace {

// Raw Bernoulli reduction: numerator polynomial in the p-1 remaining variables
// plus the per-variable pole factor carried over (at most one per variable).
struct RawReduced {
    MPoly N; // includes the term's rational coefficient
    std::vector<PoleSet> poles;
};

RawReduced bernoulli_reduce_raw(const ElementaryTerm& t, int tvar) {
    int p = t.depth();
    if (tvar < 1 || tvar >= p)
        throw std::invalid_argument("bernoulli_reduce: tvar out of range (needs 1 <= t < p)");
    if (!t.f[tvar].is_mono())
        throw std::invalid_argument("bernoulli_reduce: tvar carries pole factors");

    int q = p - 1;
    // Old variable i maps to i for i < tvar, i-1 for i > tvar.
    MPoly upper = MPoly::variable(q, tvar - 1);
    MPoly lower = tvar == p - 1 ? MPoly::constant(q, Rat(1)) : MPoly::variable(q, tvar);
    MPoly N = power_sum(t.f[tvar].e, lower, upper) * t.coeff;

    std::vector<PoleSet> poles(q);
    for (int i = 0; i < p; ++i) {
        if (i == tvar) continue;
        int ni = i < tvar ? i : i - 1;
        if (t.f[i].is_mono()) {
            if (t.f[i].e > 0) N = N * MPoly::variable(q, ni, t.f[i].e);
        } else {
            poles[ni] = {{t.f[i].j, t.f[i].s}};
        }
    }
    return {N, poles};
}

int first_mono_index(const ElementaryTerm& t) {
    for (int i = 0; i < t.depth(); ++i)
        if (t.f[i].is_mono()) return i;
    return -1;
}

// Generalized log-divergence check for N / prod D_i with arbitrary pole sets.
void require_group_log_divergent(const MPoly& N, const std::vector<PoleSet>& poles) {
    if (N.is_zero()) return;
    int degsum = 0, polesum = 0;
    for (int j = 0; j < N.nvars(); ++j) {
        degsum += N.degree(j);
        for (const auto& [jj, s] : poles[j]) polesum += s;
        if (degsum > polesum - (j + 1)) // D_j + 1 with D_j = polesum - j - 2
            throw std::logic_error(
                "regularized_value: recursion produced a group that is not "
                "log-divergent (upstream bug)");
    }
}

struct Pipeline {
    const AtOneOptions& opt;
    AtOneStats* stats;
    BrickCache brick_cache;
    size_t processed = 0;

    explicit Pipeline(const AtOneOptions& o, AtOneStats* st) : opt(o), stats(st) {}

    void count(size_t n, int depth) {
        processed += n;
        if (!stats) return;
        stats->terms_processed += n;
        stats->max_depth_seen = std::max(stats->max_depth_seen, depth);
    }

    MZVExpr brick_value(const ElementaryTerm& t) {
        // Pure poles: the term is an unmodulated brick at z = (w, 1, ..., 1).
        std::vector<ZMon> args;
        args.push_back(ZMon::var(1, 0));
        for (int i = 1; i < t.depth(); ++i) args.push_back(ZMon(1));
        Brick b = brick_from_elementary(t, args);
        Decomposition d = brick_cache.decompose(b);
        if (stats) stats->bricks_decomposed += 1;

        MZVExpr v;
        v.constant = d.constant().eval_at_one() * t.coeff;
        for (const auto& [la, c] : d.la_terms()) {
            for (int x : la.s)
                if (x < 1)
                    throw std::logic_error("brick_value: non-positive La exponent "
                                           "from a positive-exponent brick");
            // Arguments restricted to {w, 1}: w-exponent 1 in front, 0 elsewhere.
            for (size_t i = 0; i < la.args.size(); ++i) {
                int we = la.args[i].exp(0);
                if (we != (i == 0 ? 1 : 0))
                    throw std::logic_error("brick_value: unexpected argument monomial "
                                           "on the z = 1 path");
            }
            v += la_word_regularize(la.s) * (c.eval_at_one() * t.coeff);
        }
        return v;
    }

    MZVExpr run(const std::vector<ElementaryTerm>& terms) {
        if (stats) stats->max_group_size = std::max(stats->max_group_size, terms.size());
        count(terms.size(), terms.empty() ? 0 : terms[0].depth());
        if (processed > opt.term_budget)
            throw std::runtime_error("decompose_at_one: recursion budget exceeded");

        MZVExpr acc;
        std::vector<ElementaryTerm> e1;
        for (const auto& t : terms) {
            if (t.depth() == 0) {
                acc.constant += t.coeff;
                continue;
            }
            if (classify_e0(t)) {
                int tv = first_mono_index(t);
                if (tv < 0) {
                    acc += brick_value(t);
                } else {
                    if (tv == 0)
                        throw std::logic_error("regularized_value: entire part in the "
                                               "outer variable of an E0 term");
                    acc += run(bernoulli_reduce(t, tv));
                }
            } else {
                e1.push_back(t);
            }
        }

        if (!e1.empty()) {
            // E1 terms cancel only jointly: reduce each, sum over a common
            // denominator, and re-run partial fractions on the combined function.
            int p = e1[0].depth();
            int q = p - 1;
            std::vector<RawReduced> raws;
            for (const auto& t : e1) {
                int tv = first_mono_index(t);
                if (tv <= 0)
                    throw std::logic_error("regularized_value: E1 term without a "
                                           "reducible entire variable");
                raws.push_back(bernoulli_reduce_raw(t, tv));
            }
            std::vector<PoleSet> common(q);
            for (int i = 0; i < q; ++i) {
                std::map<int, int> mult;
                for (const auto& rr : raws)
                    for (const auto& [j, s] : rr.poles[i])
                        mult[j] = std::max(mult[j], s);
                for (const auto& [j, s] : mult) common[i].push_back({j, s});
            }
            MPoly N(q);
            for (const auto& rr : raws) {
                MPoly cof = rr.N;
                for (int i = 0; i < q; ++i) {
                    std::map<int, int> have;
                    for (const auto& [j, s] : rr.poles[i]) have[j] = s;
                    for (const auto& [j, s] : common[i]) {
                        int deficit = s - (have.count(j) ? have[j] : 0);
                        for (int u = 0; u < deficit; ++u)
                            cof = cof * (MPoly::variable(q, i) + MPoly::constant(q, Rat(j)));
                    }
                }
                N += cof;
            }
            require_group_log_divergent(N, common);
            acc += run(decompose_general(N, common));
        }
        return acc;
    }
};

} // namespace

std::vector<ElementaryTerm> bernoulli_reduce(const ElementaryTerm& t, int tvar) {
    RawReduced rr = bernoulli_reduce_raw(t, tvar);
    return decompose_general(rr.N, rr.poles);
}

MZVExpr regularized_value(const std::vector<ElementaryTerm>& terms, const AtOneOptions& opt,
                          AtOneStats* stats) {
    Pipeline pl(opt, stats);
    return pl.run(terms);
}

MZVExpr decompose_at_one(const MultSeries& s, const AtOneOptions& opt, AtOneStats* stats) {
    MultSeries t = normalize_shifts(s);
    require_convergent(t);
    PFD pfd = decompose_rational(t);

    Pipeline pl(opt, stats);
    MZVExpr v = pl.run(pfd);

    int bound = 0;
    for (int a : t.A) bound += a;
    for (const auto& [c, q] : v.terms) {
        int w = 0;
        for (int x : c) w += x;
        if (w > bound)
            throw std::logic_error("decompose_at_one: weight bound violated (bug)");
    }
    return v;
}

} // namespace zetalin
