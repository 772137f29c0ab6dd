#include <zetalin/numeric.hpp>
#include <zetalin/bernoulli.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace zetalin {

unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 4;
}

PrecisionScope::PrecisionScope(unsigned bits) {
    saved_ = BigFloat::default_precision();
    BigFloat::default_precision(digits10_for_bits(std::max(bits, 64u)));
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_); }

BigFloat to_bigfloat(const Rat& q) {
    return BigFloat(rat_num(q).str()) / BigFloat(rat_den(q).str());
}

namespace {

BigFloat zmon_eval_big(const ZMon& m, const std::vector<BigFloat>& z) {
    BigFloat acc(1);
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        acc *= pow(z[i], m.e[i]);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin engine over atoms x^{-a} log^b x.
// ---------------------------------------------------------------------------

struct Atom {
    int a, b;
    bool operator<(const Atom& o) const { return a != o.a ? a < o.a : b < o.b; }
};
using AtomMap = std::map<Atom, BigFloat>;

void atom_add(AtomMap& m, const Atom& at, const BigFloat& c) {
    if (c == 0) return;
    auto [it, fresh] = m.emplace(at, c);
    if (!fresh) it->second += c;
}

AtomMap derivative(const AtomMap& f) {
    AtomMap g;
    for (const auto& [at, c] : f) {
        if (at.a != 0) atom_add(g, {at.a + 1, at.b}, -c * at.a);
        if (at.b != 0) atom_add(g, {at.a + 1, at.b - 1}, c * at.b);
    }
    return g;
}

// m-dependent part of the antiderivative of one atom.
AtomMap antiderivative(const Atom& at) {
    AtomMap r;
    if (at.a == 1) {
        atom_add(r, {0, at.b + 1}, BigFloat(1) / (at.b + 1));
        return r;
    }
    // int x^{-a} log^b = x^{1-a} log^b / (1-a) - b/(1-a) int x^{-a} log^{b-1}
    BigFloat c(1);
    for (int i = at.b; i >= 0; --i) {
        atom_add(r, {at.a - 1, i}, c / (1 - at.a));
        c *= -i;
        c /= (1 - at.a);
    }
    return r;
}

BigFloat atom_eval(const Atom& at, const BigFloat& m, const BigFloat& logm) {
    BigFloat v = pow(m, -at.a);
    for (int i = 0; i < at.b; ++i) v *= logm;
    return v;
}

BigFloat atoms_eval(const AtomMap& f, const BigFloat& m, const BigFloat& logm) {
    BigFloat acc(0);
    for (const auto& [at, c] : f) acc += c * atom_eval(at, m, logm);
    return acc;
}

struct EmParams {
    long Kmax;
    int ORD;   // absolute truncation: atoms kept while a <= ORD
    int L;     // Euler-Maclaurin order (B_2 .. B_{2L})
};

// Prefix closure: sum_{k<=m} g(k) = C + F(m); returns the m-dependent F plus a
// remainder magnitude estimate at the anchor. The constant C is recovered
// numerically by the caller as exact(anchor) - F(anchor).
struct Closure {
    AtomMap F;
    BigFloat rem;
};

Closure em_prefix(const AtomMap& g, const EmParams& par, const BigFloat& anchor_m,
                  const BigFloat& anchor_logm) {
    Closure cl;
    cl.rem = 0;
    for (const auto& [at, c] : g) {
        for (const auto& [a2, c2] : antiderivative(at)) atom_add(cl.F, a2, c * c2);
        atom_add(cl.F, at, c / 2);
    }
    AtomMap d = derivative(g); // g^{(1)}
    for (int r = 1; r <= par.L; ++r) {
        BigFloat coef = to_bigfloat(bernoulli_number(2 * r) / Rat(factorial(2 * r)));
        for (const auto& [at, c] : d) atom_add(cl.F, at, c * coef);
        d = derivative(derivative(d));
    }
    // First omitted order as the remainder estimate.
    {
        BigFloat coef = to_bigfloat(bernoulli_number(2 * par.L + 2) /
                                    Rat(factorial(2 * par.L + 2)));
        for (const auto& [at, c] : d)
            cl.rem += abs(c * coef * atom_eval(at, anchor_m, anchor_logm));
    }
    cl.F.erase(Atom{0, 0}); // m-independent, belongs to the constant
    return cl;
}

struct LevelResult {
    std::vector<BigFloat> exact; // [0..Kmax]
    AtomMap asym;                // value(m) ~ c0 + asym(m) for large m
    BigFloat c0;
    BigFloat err;
};

// Exact rational 1/k-expansion of k^e / prod (k+j)^s: coefficients of
// k^{e-S-d}, d = 0..ORD.
std::vector<Rat> level_series(const EmLevel& lv, int ORD) {
    std::vector<Rat> acc(ORD + 1, Rat(0));
    acc[0] = 1;
    for (const auto& [j, s] : lv.poles) {
        if (j == 0) continue; // (1 + 0/k)^{-s} = 1
        std::vector<Rat> f(ORD + 1, Rat(0));
        for (int t = 0; t <= ORD; ++t) {
            Rat c = Rat(binomial(s + t - 1, t)) * rat_pow(Rat(j), t);
            f[t] = (t % 2) ? -c : c;
        }
        std::vector<Rat> next(ORD + 1, Rat(0));
        for (int u = 0; u <= ORD; ++u) {
            if (acc[u] == 0) continue;
            for (int v = 0; u + v <= ORD; ++v) next[u + v] += acc[u] * f[v];
        }
        acc = std::move(next);
    }
    return acc;
}

BigFloat level_factor_exact(const EmLevel& lv, long k) {
    Rat v = rat_pow(Rat(k), lv.e);
    for (const auto& [j, s] : lv.poles) v /= rat_pow(Rat(k + j), s);
    return to_bigfloat(v);
}

// Shift tables: series in x = 1/k for (k - delta)^{-a} log^b(k - delta),
// coefficients exact rationals; only delta = 1 needs real work.
struct ShiftCache {
    int ORD;
    std::vector<std::vector<Rat>> log1m_pow; // log(1-x)^i as series, i = 0..bmax

    explicit ShiftCache(int ord, int bmax) : ORD(ord) {
        std::vector<Rat> l1(ORD + 1, Rat(0));
        for (int r = 1; r <= ORD; ++r) l1[r] = Rat(-1, r);
        log1m_pow.assign(bmax + 1, {});
        log1m_pow[0] = std::vector<Rat>(ORD + 1, Rat(0));
        log1m_pow[0][0] = 1;
        for (int i = 1; i <= bmax; ++i) {
            std::vector<Rat> next(ORD + 1, Rat(0));
            for (int u = 0; u <= ORD; ++u) {
                if (log1m_pow[i - 1][u] == 0) continue;
                for (int v = 1; u + v <= ORD; ++v)
                    next[u + v] += log1m_pow[i - 1][u] * l1[v];
            }
            log1m_pow[i] = std::move(next);
        }
    }

    // (k-1)^{-a} = k^{-a} sum_r binom_shift(a, r) x^r
    Rat binom_shift(int a, int r) const {
        if (a > 0) return Rat(binomial(a + r - 1, r));
        if (r <= -a) return (r % 2) ? -Rat(binomial(-a, r)) : Rat(binomial(-a, r));
        return Rat(0);
    }
};

// One atom of the inner expansion, shifted to argument k - delta and multiplied
// into the level's own 1/k-series; accumulates into g.
void accumulate_shifted(AtomMap& g, const Atom& at, const BigFloat& coef,
                        const std::vector<Rat>& rser, int e_minus_S, int delta,
                        const ShiftCache& sc, int ORD) {
    // (k-delta)^{-a} log^b(k-delta) = k^{-a} sum over r, i of
    //   binom_shift coefficients x (log-shift series) x log^{b-i} k.
    // delta = 0 keeps the atom as-is.
    struct Piece {
        int extra_a;
        int logpow;
        Rat c;
    };
    std::vector<Piece> pieces;
    if (delta == 0) {
        pieces.push_back({0, at.b, Rat(1)});
    } else {
        for (int i = 0; i <= at.b; ++i) {
            Rat binc = Rat(binomial(at.b, i));
            for (int r1 = 0; r1 <= ORD; ++r1) {
                Rat bs = sc.binom_shift(at.a, r1);
                if (bs == 0) continue;
                const auto& lp = sc.log1m_pow[i];
                for (int r2 = 0; r1 + r2 <= ORD; ++r2) {
                    if (lp[r2] == 0) continue;
                    pieces.push_back({r1 + r2, at.b - i, binc * bs * lp[r2]});
                }
            }
        }
    }
    for (const auto& pc : pieces) {
        for (int d = 0; d <= ORD; ++d) {
            if (rser[d] == 0) continue;
            int a_tot = (-e_minus_S + d) + at.a + pc.extra_a;
            if (a_tot > ORD) continue;
            atom_add(g, {a_tot, pc.logpow}, coef * to_bigfloat(rser[d] * pc.c));
        }
    }
}

LevelResult close_level(const EmLevel& lv, const LevelResult* inner, const EmParams& par,
                        const ShiftCache& sc) {
    LevelResult res;
    res.err = 0;

    // Exact prefix values.
    res.exact.assign(par.Kmax + 1, BigFloat(0));
    for (long k = 1; k <= par.Kmax; ++k) {
        BigFloat innerval(1);
        if (inner) {
            long idx = k - lv.delta;
            innerval = idx >= 0 ? inner->exact[idx] : BigFloat(0);
        }
        res.exact[k] = res.exact[k - 1] + level_factor_exact(lv, k) * innerval;
    }

    // Asymptotic form of the summand g(k) = factor(k) * inner(k - delta).
    int S = 0;
    for (const auto& [j, s] : lv.poles) S += s;
    int eS = lv.e - S;
    std::vector<Rat> rser = level_series(lv, par.ORD);

    AtomMap g;
    AtomMap inner_terms;
    BigFloat inner_c0(1);
    if (inner) {
        inner_terms = inner->asym;
        inner_c0 = inner->c0;
    }
    atom_add(inner_terms, {0, 0}, inner_c0);
    for (const auto& [at, c] : inner_terms)
        accumulate_shifted(g, at, c, rser, eS, inner ? lv.delta : 0, sc, par.ORD);

    BigFloat anchor_m(par.Kmax);
    BigFloat anchor_logm = log(anchor_m);
    Closure cl = em_prefix(g, par, anchor_m, anchor_logm);

    res.asym = cl.F;
    res.c0 = res.exact[par.Kmax] - atoms_eval(cl.F, anchor_m, anchor_logm);

    // Error: E-M remainder, series truncation, inner error propagated through
    // sum_k |factor(k)|.
    res.err = cl.rem;
    {
        BigFloat trunc = abs(to_bigfloat(rser[par.ORD])) *
                         pow(anchor_m, eS - par.ORD + 1);
        res.err += abs(trunc);
    }
    if (inner) {
        BigFloat absr(0);
        for (long k = 1; k <= par.Kmax; ++k) absr += abs(level_factor_exact(lv, k));
        res.err += inner->err * (absr + 1);
    }
    return res;
}

LevelResult em_nested_levels(const std::vector<EmLevel>& levels, const EmParams& par) {
    int bmax = static_cast<int>(levels.size()) + 2;
    ShiftCache sc(par.ORD, bmax);
    LevelResult cur;
    bool have = false;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        LevelResult next = close_level(*it, have ? &cur : nullptr, par, sc);
        cur = std::move(next);
        have = true;
    }
    return cur;
}

EmParams em_params_for(unsigned bits) {
    if (bits <= 150) return {160, 26, 13};
    return {288, 36, 18};
}

int growth_estimate(const std::vector<EmLevel>& levels) {
    int g = 0;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        int S = 0;
        for (const auto& [j, s] : it->poles) S += s;
        g = std::max(0, it->e - S + 1 + g);
    }
    return g;
}

unsigned working_bits(unsigned bits, const std::vector<EmLevel>& levels, long Kmax) {
    int g = growth_estimate(levels);
    double lk = std::log2(static_cast<double>(Kmax) + 1);
    return bits + 64 + static_cast<unsigned>((g + 2) * lk);
}

} // namespace

NumericResult em_nested_value(const std::vector<EmLevel>& levels, unsigned bits) {
    EmParams par = em_params_for(bits);
    PrecisionScope scope(working_bits(bits, levels, par.Kmax));
    LevelResult top = em_nested_levels(levels, par);
    NumericResult r{top.c0, top.err};
    // Non-decaying residue in the top expansion feeds the error estimate.
    BigFloat m(par.Kmax), lm = log(m);
    for (const auto& [at, c] : top.asym)
        if (at.a <= 0) r.error += abs(c * atom_eval(at, m, lm));
    return r;
}

BigFloat hurwitz_tail(int s, long K, unsigned bits) {
    if (s <= 1) throw std::invalid_argument("hurwitz_tail: requires s >= 2");
    if (K < 1) throw std::invalid_argument("hurwitz_tail: requires K >= 1");
    PrecisionScope scope(bits + 32);
    EmParams par = em_params_for(bits);
    // Direct tail formula at anchor max(K, Kmax):
    // sum_{k>=M} k^{-s} = M^{1-s}/(s-1) + M^{-s}/2 - sum B_{2r}/(2r)! f^{(2r-1)}(M) ...
    long M = std::max<long>(K, par.Kmax);
    AtomMap f;
    atom_add(f, {s, 0}, BigFloat(1));
    BigFloat Mb(M), logM = log(Mb);
    BigFloat tail = pow(Mb, 1 - s) / (s - 1) + pow(Mb, -s) / 2;
    AtomMap d = derivative(f);
    for (int r = 1; r <= par.L; ++r) {
        BigFloat coef = to_bigfloat(bernoulli_number(2 * r) / Rat(factorial(2 * r)));
        tail -= coef * atoms_eval(d, Mb, logM);
        d = derivative(derivative(d));
    }
    for (long k = K; k < M; ++k) tail += pow(BigFloat(k), -s);
    return tail;
}

NumericResult mzv_numeric(const Composition& s, unsigned bits) {
    if (s.empty()) throw std::invalid_argument("mzv_numeric: empty composition");
    if (s[0] < 2) throw std::invalid_argument("mzv_numeric: divergent composition (s_1 < 2)");
    for (int x : s)
        if (x < 1) throw std::invalid_argument("mzv_numeric: divergent composition (s_i < 1)");
    std::vector<EmLevel> levels;
    for (int x : s) levels.push_back({0, {{0, x}}, 1});
    return em_nested_value(levels, bits);
}

BigFloat mzv_expr_numeric(const MZVExpr& e, unsigned bits) {
    PrecisionScope scope(bits + 32);
    BigFloat acc = to_bigfloat(e.constant);
    for (const auto& [c, q] : e.terms)
        acc += to_bigfloat(q) * mzv_numeric(c, bits).value;
    return acc;
}

BigFloat polylog_numeric(const std::vector<int>& s, const std::vector<BigFloat>& args,
                         unsigned bits, bool strict) {
    if (s.empty()) return BigFloat(1);
    if (s.size() != args.size())
        throw std::invalid_argument("polylog_numeric: arity mismatch");
    PrecisionScope scope(bits + 32);
    BigFloat rho = abs(args[0]);
    if (rho >= 1) throw std::invalid_argument("polylog_numeric: outer modulus must be < 1");

    int smin = *std::min_element(s.begin(), s.end());
    long poly = smin < 0 ? -smin * static_cast<long>(s.size()) : 0;
    // Cutoff so that rho^K K^poly < 2^-(bits+16).
    double lr = -static_cast<double>(log2(rho));
    long K = static_cast<long>((bits + 16) / lr) + 8;
    for (int it = 0; it < 4; ++it)
        K = static_cast<long>((bits + 16 + poly * std::log2(static_cast<double>(K))) / lr) + 8;

    int p = static_cast<int>(s.size());
    // inner[k] = level value with upper bound k.
    std::vector<BigFloat> inner(K + 1, BigFloat(1));
    for (int lev = p - 1; lev >= 0; --lev) {
        std::vector<BigFloat> cur(K + 1, BigFloat(0));
        BigFloat acc(0);
        BigFloat zk(1);
        for (long k = 1; k <= K; ++k) {
            zk *= args[lev];
            long idx = strict ? k - 1 : k;
            BigFloat innerval = lev == p - 1 ? BigFloat(1) : inner[idx];
            acc += zk * pow(BigFloat(k), -s[lev]) * innerval;
            cur[k] = acc;
        }
        inner = std::move(cur);
    }
    return inner[K];
}

namespace {

std::vector<EmLevel> series_levels(const MultSeries& s, const std::vector<int>& mono) {
    std::vector<EmLevel> levels;
    for (int i = 0; i < s.p; ++i)
        levels.push_back({mono[i], pochhammer_poles(s.A[i], s.n[i]), 0});
    return levels;
}

} // namespace

NumericResult series_numeric(const MultSeries& s0, const std::vector<Rat>& zvals,
                             long cutoff, unsigned bits) {
    MultSeries s = normalize_shifts(s0);
    std::vector<Rat> w(s.p);
    bool all_one = true;
    for (int i = 0; i < s.p; ++i) {
        w[i] = s.args[i].eval(zvals);
        if (w[i] != 1) all_one = false;
    }

    if (all_one) {
        require_convergent(s);
        NumericResult total{BigFloat(0), BigFloat(0)};
        PrecisionScope scope(bits + 32);
        total.value = 0;
        total.error = 0;
        for (const auto& [e, c] : s.P.terms()) {
            NumericResult part = em_nested_value(series_levels(s, e), bits);
            total.value += to_bigfloat(c) * part.value;
            total.error += abs(to_bigfloat(c)) * part.error;
        }
        return total;
    }

    if (abs(w[0]) <= 1)
        throw classifier_error("series_numeric: |args_1(z)| must exceed 1", 1, 0, 0);
    for (int i = 1; i < s.p; ++i)
        if (abs(w[i]) < 1)
            throw classifier_error("series_numeric: |args_i(z)| must be >= 1", i + 1, 0, 0);

    PrecisionScope scope(bits + 64);
    long K = std::max<long>(cutoff, 32);
    // Per numerator monomial, nested prefix sums with weights w_i^{-k}.
    BigFloat value(0), lastabs(0), prevabs(0);
    std::vector<BigFloat> winv;
    for (int i = 0; i < s.p; ++i) winv.push_back(1 / to_bigfloat(w[i]));

    for (const auto& [mono, c] : s.P.terms()) {
        std::vector<BigFloat> inner(K + 1, BigFloat(1));
        BigFloat outer_last(0), outer_prev(0);
        for (int lev = s.p - 1; lev >= 0; --lev) {
            std::vector<BigFloat> cur(K + 1, BigFloat(0));
            BigFloat acc(0);
            BigFloat zk(1);
            for (long k = 1; k <= K; ++k) {
                zk *= winv[lev];
                Rat fr = rat_pow(Rat(k), mono[lev]);
                for (int j = 0; j <= s.n[lev]; ++j)
                    fr /= rat_pow(Rat(k + j), s.A[lev]);
                BigFloat term = zk * to_bigfloat(fr) *
                                (lev == s.p - 1 ? BigFloat(1) : inner[k]);
                acc += term;
                if (lev == 0) {
                    outer_prev = outer_last;
                    outer_last = abs(term);
                }
                cur[k] = acc;
            }
            inner = std::move(cur);
        }
        value += to_bigfloat(c) * inner[K];
        lastabs += abs(to_bigfloat(c)) * outer_last;
        prevabs += abs(to_bigfloat(c)) * outer_prev;
    }

    BigFloat ratio = prevabs > 0 ? lastabs / prevabs : BigFloat(0);
    if (ratio > BigFloat(99) / 100) ratio = BigFloat(99) / 100;
    NumericResult r;
    r.value = value;
    r.error = lastabs * ratio / (1 - ratio) + lastabs;
    return r;
}

BigFloat series_partial_sum(const MultSeries& s0, const std::vector<Rat>& zvals, long K,
                            unsigned bits) {
    MultSeries s = normalize_shifts(s0);
    PrecisionScope scope(bits + 32);
    std::vector<BigFloat> winv;
    for (int i = 0; i < s.p; ++i) winv.push_back(1 / to_bigfloat(s.args[i].eval(zvals)));

    BigFloat value(0);
    for (const auto& [mono, c] : s.P.terms()) {
        std::vector<BigFloat> inner(K + 1, BigFloat(1));
        for (int lev = s.p - 1; lev >= 0; --lev) {
            std::vector<BigFloat> cur(K + 1, BigFloat(0));
            BigFloat acc(0);
            BigFloat zk(1);
            for (long k = 1; k <= K; ++k) {
                zk *= winv[lev];
                Rat fr = rat_pow(Rat(k), mono[lev]);
                for (int j = 0; j <= s.n[lev]; ++j)
                    fr /= rat_pow(Rat(k + j), s.A[lev]);
                acc += zk * to_bigfloat(fr) * (lev == s.p - 1 ? BigFloat(1) : inner[k]);
                cur[k] = acc;
            }
            inner = std::move(cur);
        }
        value += to_bigfloat(c) * inner[K];
    }
    return value;
}

NumericResult brick_numeric(const Brick& b, const std::vector<Rat>& zvals, unsigned bits) {
    b.validate();
    int N = b.depth();
    PrecisionScope scope(bits + 64);
    if (N == 0) return {BigFloat(1), BigFloat(0)};

    std::vector<BigFloat> winv;
    for (int i = 0; i < N; ++i) {
        Rat v = b.args[i].eval(zvals);
        winv.push_back(1 / to_bigfloat(v));
    }
    if (abs(winv[0]) >= 1)
        throw std::invalid_argument("brick_numeric: |args_1(z)| must exceed 1");

    long shift = 0;
    for (int x : b.m) shift += x;
    double lr = -static_cast<double>(log2(abs(winv[0])));
    long K = static_cast<long>((bits + 16) / lr) + 16;
    int smin = *std::min_element(b.s.begin(), b.s.end());
    long poly = smin < 0 ? -smin * static_cast<long>(N) : 0;
    for (int it = 0; it < 4; ++it)
        K = static_cast<long>((bits + 16 + poly * std::log2(static_cast<double>(K))) / lr) + 16;
    long width = K + shift + 2;

    // inner[c] = sum over k_{lev} <= c of the suffix starting at level lev.
    std::vector<BigFloat> inner(width + 1, BigFloat(1));
    for (int lev = N - 1; lev >= 0; --lev) {
        std::vector<BigFloat> cur(width + 1, BigFloat(0));
        BigFloat acc(0);
        BigFloat zk(1);
        long lim = lev == 0 ? K : width;
        for (long k = 1; k <= lim; ++k) {
            zk *= winv[lev];
            BigFloat term = zk / pow(BigFloat(k + b.j[lev]), b.s[lev]);
            if (lev < N - 1) {
                long idx = std::min<long>(k + b.m[lev + 1], width);
                term *= inner[idx];
            }
            acc += term;
            cur[k] = acc;
        }
        inner = std::move(cur);
    }
    NumericResult r;
    r.value = inner[K];
    BigFloat rho = abs(winv[0]);
    BigFloat last = abs(inner[K] - inner[K - 1]);
    r.error = last * rho / (1 - rho) + last + pow(BigFloat(2), -static_cast<int>(bits));
    return r;
}

NumericResult decomposition_numeric(const Decomposition& d, const std::vector<Rat>& zvals,
                                    unsigned bits) {
    PrecisionScope scope(bits + 32);
    std::vector<BigFloat> zb;
    for (const auto& q : zvals) zb.push_back(to_bigfloat(q));

    NumericResult r{BigFloat(0), BigFloat(0)};
    r.value = to_bigfloat(d.constant().eval(zvals));
    for (const auto& [t, c] : d.la_terms()) {
        std::vector<BigFloat> args;
        for (const auto& m : t.args) args.push_back(1 / zmon_eval_big(m, zb));
        BigFloat la = polylog_numeric(t.s, args, bits);
        r.value += to_bigfloat(c.eval(zvals)) * la;
    }
    r.error = pow(BigFloat(2), -static_cast<int>(bits) + 12);
    return r;
}

} // namespace zetalin
