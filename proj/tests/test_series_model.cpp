#include <doctest.h>

#include <zetalin/numeric.hpp>
#include <zetalin/series.hpp>

#include <random>

using namespace zetalin;

TEST_CASE("normalize_shifts") {
    // r = 0 is the identity
    MultSeries s = MultSeries::make(1, MPoly::constant(1, Rat(1)), {1}, {0});
    MultSeries t = normalize_shifts(s);
    CHECK(t.P == s.P);
    CHECK(t.n == s.n);

    // 1/(k+2) -> k(k+1)/(k)_3: compare term by term for k <= 10
    MultSeries u = MultSeries::make(1, MPoly::constant(1, Rat(1)), {1}, {0}, {2});
    MultSeries v = normalize_shifts(u);
    CHECK(v.normalized());
    CHECK(v.n == std::vector<int>{2});
    for (long k = 1; k <= 10; ++k) {
        Rat lhs = Rat(1) / Rat(k + 2);
        Rat den = Rat(k) * Rat(k + 1) * Rat(k + 2);
        Rat rhs = v.P.eval({Rat(k)}) / den;
        CHECK(lhs == rhs);
    }

    // (k2+1)_4^3 with r2=1, n2=3 -> denominator (k2)_5^3, numerator * k2^3
    MultSeries w = MultSeries::make(2, MPoly::constant(2, Rat(1)), {4, 3}, {2, 3}, {0, 1});
    MultSeries wn = normalize_shifts(w);
    CHECK(wn.n == std::vector<int>{2, 4});
    CHECK(wn.P == MPoly::variable(2, 1, 3));
}

TEST_CASE("convergence classifier") {
    // harmonic: D_1 = -1 < 0
    MultSeries h = MultSeries::make(1, MPoly::constant(1, Rat(1)), {1}, {0});
    CHECK(!check_convergence(h));
    CHECK(check_log_divergence(h));
    CHECK_THROWS_AS(require_convergent(h), classifier_error);

    // zeta(2,1): converges
    MultSeries z21 = MultSeries::make(2, MPoly::constant(2, Rat(1)), {2, 1}, {0, 0});
    CHECK(check_convergence(z21));

    // sum 1/(k1 k2): D_1 = -1
    MultSeries d = MultSeries::make(2, MPoly::constant(2, Rat(1)), {1, 1}, {0, 0});
    CHECK(!check_convergence(d));
    CHECK(check_log_divergence(d)); // log^2 divergence is polynomial in log

    // P = X1 over k: geometric-pole divergence, not even log
    MultSeries g = MultSeries::make(1, MPoly::variable(1, 0), {1}, {0});
    CHECK(!check_log_divergence(g));

    try {
        require_convergent(d);
        CHECK(false);
    } catch (const classifier_error& e) {
        CHECK(e.j == 1);
        CHECK(e.rhs == -1);
    }
}

TEST_CASE("zero numerator satisfies every inequality") {
    MultSeries z = MultSeries::make(2, MPoly(2), {1, 1}, {0, 0});
    CHECK(check_convergence(z));
    CHECK(check_log_divergence(z));
}

namespace {

MultSeries random_series(std::mt19937_64& rng, int maxp, bool force_convergent) {
    auto ri = [&](int lo, int hi) { return static_cast<int>(rng() % (hi - lo + 1)) + lo; };
    for (;;) {
        int p = ri(1, maxp);
        std::vector<int> A, n;
        for (int i = 0; i < p; ++i) {
            A.push_back(ri(1, 3));
            n.push_back(ri(0, 2));
        }
        MPoly P(p);
        int nterms = ri(1, 3);
        for (int t = 0; t < nterms; ++t) {
            std::vector<int> e;
            for (int i = 0; i < p; ++i) e.push_back(ri(0, std::max(A[i] * (n[i] + 1) - 2, 0)));
            P.add_term(e, Rat(ri(-4, 4)));
        }
        if (P.is_zero()) continue;
        MultSeries s = MultSeries::make(p, P, A, n);
        if (!force_convergent || check_convergence(s)) return s;
    }
}

} // namespace

TEST_CASE("convergence implies log-divergence on 1000 random instances") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 1000; ++t) {
        MultSeries s = random_series(rng, 3, false);
        if (check_convergence(s)) CHECK(check_log_divergence(s));
    }
}

TEST_CASE("classifier smoke test against partial sums") {
    // Convergent random instances: partial sums at 1000 and 2000 differ by less
    // than a crude analytic tail bound  C * K^(margin) with margin <= -1.
    std::mt19937_64 rng(11);
    PrecisionScope scope(96);
    for (int t = 0; t < 6; ++t) {
        MultSeries s = random_series(rng, 2, true);
        std::vector<Rat> ones(s.p, Rat(1));
        BigFloat a = series_partial_sum(s, ones, 1000, 96);
        BigFloat b = series_partial_sum(s, ones, 2000, 96);
        DegreeProfile d = degree_profile(s);
        int degsum = 0, margin = 0;
        for (int j = 0; j < s.p; ++j) {
            degsum += d.degs[j];
            margin = std::min(margin, d.Dj[j] - degsum);
        }
        // tail(K) ~ K^{-(margin_min+1)} log^p K up to a constant
        BigFloat bound = BigFloat(64) * pow(BigFloat(1000), -(margin + 1)) *
                         pow(log(BigFloat(1000)), s.p);
        CHECK(abs(a - b) <= bound);
    }
}
