#include <zetalin/brick.hpp>
#include <zetalin/pfd_univariate.hpp>

#include <algorithm>
#include <stdexcept>

namespace zetalin {

void Brick::validate() const {
    size_t N = s.size();
    if (m.size() != N || j.size() != N || args.size() != N)
        throw std::invalid_argument("Brick: vector length mismatch");
    if (N > 0 && m[0] != 0)
        throw std::invalid_argument("Brick: m_1 must be 0");
    for (size_t i = 0; i < N; ++i)
        if (m[i] < 0 || j[i] < 0)
            throw std::invalid_argument("Brick: shifts and modulations must be >= 0");
}

void Decomposition::add_la(const LaTerm& t, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (t.depth() == 0) {
        constant_ += c;
        return;
    }
    auto [it, fresh] = la_.emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) la_.erase(it);
    }
}

void Decomposition::add_scaled(const Decomposition& d, const LaurentPoly& c) {
    if (c.is_zero()) return;
    for (const auto& [t, ct] : d.la_) add_la(t, ct * c);
    constant_ += d.constant_ * c;
}

void Decomposition::prune() {
    for (auto it = la_.begin(); it != la_.end();)
        it = it->second.is_zero() ? la_.erase(it) : std::next(it);
}

std::vector<std::pair<LaTerm, LaurentPoly>> Decomposition::ordered_terms() const {
    std::vector<std::pair<LaTerm, LaurentPoly>> v(la_.begin(), la_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        const LaTerm& x = a.first;
        const LaTerm& y = b.first;
        if (x.depth() != y.depth()) return x.depth() < y.depth();
        if (x.weight() != y.weight()) return x.weight() < y.weight();
        if (x.s != y.s) return x.s < y.s;
        return x.args < y.args;
    });
    return v;
}

LaurentPoly q_poly(const std::vector<int>& s, int p, long K, const std::vector<ZMon>& args) {
    int N = static_cast<int>(s.size());
    if (p < 1 || p > N + 1) throw std::invalid_argument("q_poly: p out of range");
    if (K < 0) throw std::invalid_argument("q_poly: K < 0");
    int nv = args.empty() ? 0 : args[0].nvars();
    if (p == N + 1) return LaurentPoly::constant(nv, Rat(1));
    // Bottom-up over levels N..p; table[k] = Q_{level}(k).
    std::vector<LaurentPoly> table(K + 1, LaurentPoly::constant(nv, Rat(1)));
    for (int level = N; level >= p; --level) {
        std::vector<LaurentPoly> next(K + 1, LaurentPoly(nv));
        LaurentPoly acc(nv);
        for (long k = 1; k <= K; ++k) {
            acc += table[k] * LaurentPoly::monomial(args[level - 1].pow(static_cast<int>(-k)),
                                                    rat_pow(Rat(k), -s[level - 1]));
            next[k] = acc;
        }
        table = std::move(next);
    }
    return table[K];
}

namespace {

struct BrickEngine {
    std::map<Brick, Decomposition> memo;

    Decomposition decompose(const Brick& b) {
        b.validate();
        int N = b.depth();
        int nv = N ? b.args[0].nvars() : 0;
        if (N == 0) {
            Decomposition d(nv);
            d.add_constant(LaurentPoly::constant(nv, Rat(1)));
            return d;
        }
        auto hit = memo.find(b);
        if (hit != memo.end()) return hit->second;

        Decomposition d(nv);

        // Suffix products pi_p = prod_{i >= p} args_i^{j_i} (1-based p).
        std::vector<ZMon> pi(N + 2, ZMon(nv));
        for (int p = N; p >= 1; --p)
            pi[p] = pi[p + 1] * b.args[p - 1].pow(b.j[p - 1]);

        // Leading term (prod args_i^{j_i}) La_s(1/args).
        d.add_la(LaTerm{b.s, b.args}, LaurentPoly::monomial(pi[1]));

        // - sum_p pi_p Q_{N,p}(j_p) B_{p-1}.
        for (int p = 1; p <= N; ++p) {
            if (b.j[p - 1] == 0) continue; // Q(0) = 0
            LaurentPoly Q = q_poly(b.s, p, b.j[p - 1], b.args);
            if (Q.is_zero()) continue;
            Brick sub{{b.s.begin(), b.s.begin() + (p - 1)},
                      {b.m.begin(), b.m.begin() + (p - 1)},
                      {b.j.begin(), b.j.begin() + (p - 1)},
                      {b.args.begin(), b.args.begin() + (p - 1)}};
            d.add_scaled(decompose(sub), -(LaurentPoly::monomial(pi[p]) * Q));
        }

        // + sum_{p=2}^{N} eps_p pi_p sum_{K=t_p+1}^{T_p} args_p^{-K} R_{N,p}(K).
        for (int p = 2; p <= N; ++p) {
            int a = b.j[p - 2];              // j_{p-1}
            int bb = b.j[p - 1] + b.m[p - 1];  // j_p + m_p
            if (a == bb) continue;
            int eps = a < bb ? 1 : -1;
            int lo = std::min(a, bb) + 1, hi = std::max(a, bb);

            std::vector<ZMon> margs(b.args.begin(), b.args.begin() + (p - 2));
            margs.push_back(b.args[p - 2] * b.args[p - 1]);
            margs.insert(margs.end(), b.args.begin() + p, b.args.end());

            for (int K = lo; K <= hi; ++K) {
                LaurentPoly outer = LaurentPoly::monomial(
                    pi[p] * b.args[p - 1].pow(-K), Rat(eps));
                // R_{N,p}(K) through the two-pole expansion shapes of
                // 1 / ((X + j_{p-1})^{s_{p-1}} (X + K)^{s_p}).
                for (const auto& t :
                     pfd_univariate(b.s[p - 2], b.s[p - 1], Rat(b.j[p - 2]), Rat(K))) {
                    int sigma, tau;
                    if (t.is_pole) {
                        sigma = t.exp;
                        tau = static_cast<int>(rat_num(t.shift));
                    } else {
                        sigma = -t.exp;
                        tau = 0;
                    }
                    Brick sub;
                    sub.s.assign(b.s.begin(), b.s.begin() + (p - 2));
                    sub.s.push_back(sigma);
                    sub.s.insert(sub.s.end(), b.s.begin() + p, b.s.end());
                    sub.m.assign(b.m.begin(), b.m.begin() + (p - 1));
                    if (p <= N - 1) sub.m.push_back(K);
                    sub.m.resize(N - 1, 0);
                    sub.j.assign(b.j.begin(), b.j.begin() + (p - 2));
                    sub.j.push_back(tau);
                    sub.j.resize(N - 1, 0);
                    sub.args = margs;
                    d.add_scaled(decompose(sub), outer * t.coeff);
                }
            }
        }

        d.prune();
        memo.emplace(b, d);
        return d;
    }
};

} // namespace

Decomposition decompose_brick(const Brick& b) {
    BrickEngine engine;
    return engine.decompose(b);
}

struct BrickCache::Impl {
    BrickEngine engine;
};

BrickCache::BrickCache() : impl_(std::make_unique<Impl>()) {}
BrickCache::~BrickCache() = default;
BrickCache::BrickCache(BrickCache&&) noexcept = default;
BrickCache& BrickCache::operator=(BrickCache&&) noexcept = default;

Decomposition BrickCache::decompose(const Brick& b) { return impl_->engine.decompose(b); }

Brick brick_from_elementary(const ElementaryTerm& t, const std::vector<ZMon>& args) {
    if (!t.pure_poles())
        throw std::invalid_argument("brick_from_elementary: term has entire-part factors");
    Brick b;
    for (const auto& vf : t.f) {
        b.s.push_back(vf.s);
        b.j.push_back(vf.j);
        b.m.push_back(0);
    }
    b.args = args;
    b.validate();
    return b;
}

Decomposition decompose_series_generic(const MultSeries& s) {
    if (!s.normalized())
        throw std::logic_error("decompose_series_generic: series not normalized");
    BrickCache cache;
    Decomposition total(s.zvars());
    for (const auto& t : decompose_rational(s)) {
        Brick b;
        b.args = s.args;
        for (const auto& vf : t.f) {
            if (vf.is_mono()) {
                b.s.push_back(-vf.e);
                b.j.push_back(0);
            } else {
                b.s.push_back(vf.s);
                b.j.push_back(vf.j);
            }
            b.m.push_back(0);
        }
        total.add_scaled(cache.decompose(b), LaurentPoly::constant(s.zvars(), t.coeff));
    }
    total.prune();
    return total;
}

BoundsCertificate certify_bounds(const Brick& b, const Decomposition& d) {
    for (int x : b.s)
        if (x <= 0) throw std::invalid_argument("certify_bounds: requires all s_i >= 1");
    int N = b.depth();
    // T_i = j_{i-1} v (j_i + m_i) with j_0 = 0; M_i = m_1 + ... + m_i;
    // I_N = max(T_i + M_{i-1}); J_N = max j_i; K_N = max T_i.
    int IN = 0, JN = 0, KN = 0, M = 0, Sigma = 0;
    for (int i = 1; i <= N; ++i) {
        int T = std::max(i >= 2 ? b.j[i - 2] : 0, b.j[i - 1] + b.m[i - 1]);
        IN = std::max(IN, T + M);
        KN = std::max(KN, T);
        JN = std::max(JN, b.j[i - 1]);
        M += b.m[i - 1];
        Sigma += b.s[i - 1];
    }

    BoundsCertificate cert;
    bool unmod = b.unmodulated();
    Int base = lcm_upto(unmod ? JN : IN);
    cert.scale = 1;
    for (int i = 0; i < Sigma; ++i) cert.scale *= base;
    cert.degree_bound = unmod ? JN : KN;
    cert.degree_bound_modaware = unmod ? JN : IN;

    bool den_ok = true;
    int lo = 0, hi = 0;
    auto visit = [&](const LaurentPoly& c) {
        for (const auto& [mon, coef] : c.terms()) {
            if (rat_den(coef * Rat(cert.scale)) != 1) den_ok = false;
            lo = std::min(lo, mon.exp(0));
            hi = std::max(hi, mon.exp(0));
        }
    };
    for (const auto& [t, c] : d.la_terms()) visit(c);
    visit(d.constant());

    cert.denominator_ok = den_ok;
    cert.min_z1_exponent = lo;
    cert.max_z1_exponent = hi;
    cert.degree_ok = lo >= 0 && hi <= cert.degree_bound;
    cert.degree_ok_modaware = lo >= 0 && hi <= cert.degree_bound_modaware;
    return cert;
}

} // namespace zetalin
