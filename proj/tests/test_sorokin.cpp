#include <doctest.h>

#include <zetalin/at_one.hpp>
#include <zetalin/numeric.hpp>
#include <zetalin/sorokin.hpp>

#include <random>

using namespace zetalin;

TEST_CASE("series_from_integral: D=1 geometric case") {
    // int_0^1 dx/(z-x) expands to sum_{k>=1} z^-k / k
    SorokinIntegral I;
    I.D = 1;
    I.p = 1;
    I.r = {0};
    I.s = {0};
    I.t = {0};
    I.d = {1};
    SeriesFromIntegral conv = series_from_integral(I);
    CHECK(conv.coeff == Rat(1));
    CHECK(conv.z_power == 0);
    CHECK(conv.series.p == 1);
    CHECK(conv.series.A == std::vector<int>{1});
    CHECK(conv.series.n == std::vector<int>{0});
    CHECK(conv.series.P == MPoly::constant(1, Rat(1)));

    // at z = 2: integral = log 2
    PrecisionScope scope(96);
    NumericResult sn = series_numeric(conv.series, {Rat(2)}, 512, 96);
    CHECK(abs(sn.value - log(BigFloat(2))) <= BigFloat("1e-20"));
    QuadratureResult q = quadrature_check(I, Rat(2));
    CHECK(std::abs(q.value - 0.6931472) <= 1e-6);
}

TEST_CASE("series_from_integral: S_{3,n} family") {
    // S_{3,n}: D=3, p=2, r=s=t=(n,n), d=(2,3)
    for (int n : {0, 1}) {
        SorokinIntegral I;
        I.D = 3;
        I.p = 2;
        I.r = {n, n};
        I.s = {n, n};
        I.t = {n, n};
        I.d = {2, 3};
        SeriesFromIntegral conv = series_from_integral(I);
        CHECK(conv.series.A == std::vector<int>{2, 1});
        CHECK(conv.series.n == std::vector<int>{n, n});
        CHECK(conv.series.r == std::vector<int>{n, n});
        // prefactor: s!^A products / t! = n!^2 n! / (n! n!) = n!
        CHECK(conv.coeff == Rat(factorial(n)));
        CHECK(conv.z_power == -(2 * n + 1));
        // numerator prod (k_j - k_{j+1} + 1)_{t_j}, k_3 = 1
        MPoly k1 = MPoly::variable(2, 0), k2 = MPoly::variable(2, 1);
        MPoly one = MPoly::constant(2, Rat(1));
        MPoly want = pochhammer(k1 - k2 + one, n) * pochhammer(k2, n);
        CHECK(conv.series.P == want);
    }
}

TEST_CASE("S_{3,0} equals 2 zeta(3) through the full pipeline") {
    SorokinIntegral I;
    I.D = 3;
    I.p = 2;
    I.r = {0, 0};
    I.s = {0, 0};
    I.t = {0, 0};
    I.d = {2, 3};
    SeriesFromIntegral conv = series_from_integral(I);

    // z = 1: the prefactor z-power is irrelevant; decompose the series
    MZVExpr v = decompose_at_one(conv.series);
    CHECK(v.terms.at({2, 1}) == Rat(1));
    CHECK(v.terms.at({3}) == Rat(1));

    PrecisionScope scope(160);
    BigFloat val = to_bigfloat(conv.coeff) * mzv_expr_numeric(v, 128);
    BigFloat two_z3 = 2 * mzv_numeric({3}, 128).value;
    CHECK(abs(val - two_z3) <= BigFloat("1e-10"));

    // quadrature at z = 1 (graded Gauss-Legendre handles the corner singularity)
    QuadratureResult q = quadrature_check(I, Rat(1));
    CHECK(std::string(q.method) == "gauss-legendre");
    CHECK(std::abs(q.value - 2.4041138) <= 1e-6);
}

TEST_CASE("S_{3,n} linear forms carry the classical a_n sequence") {
    // n! S_{3,n} = a_n (zeta(2,1) + zeta(3)) - b_n with a_n = 1, 5, 73, 1445.
    std::vector<Rat> a_expected = {Rat(1), Rat(5), Rat(73), Rat(1445)};
    std::vector<Rat> b_expected = {Rat(0), Rat(12), Rat(351, 2), Rat(62531, 18)};
    for (int n = 0; n <= 3; ++n) {
        SorokinIntegral I;
        I.D = 3;
        I.p = 2;
        I.r = {n, n};
        I.s = {n, n};
        I.t = {n, n};
        I.d = {2, 3};
        SeriesFromIntegral conv = series_from_integral(I);
        MZVExpr v = decompose_at_one(conv.series) * conv.coeff;
        REQUIRE(v.terms.size() == 2);
        CHECK(v.terms.at({2, 1}) == a_expected[n]);
        CHECK(v.terms.at({3}) == a_expected[n]);
        CHECK(v.constant == -b_expected[n]);
    }
}

TEST_CASE("T_{A,n} parameter mapping") {
    // T_{A,n}: D=2A, p=A, r_j = (A-j)(n+1), s=t=n, cuts at 2,4,...,2A
    int A = 2, n = 1;
    SorokinIntegral I;
    I.D = 2 * A;
    I.p = A;
    for (int j = 1; j <= A; ++j) {
        I.r.push_back((A - j) * (n + 1));
        I.s.push_back(n);
        I.t.push_back(n);
        I.d.push_back(2 * j);
    }
    SeriesFromIntegral conv = series_from_integral(I);
    CHECK(conv.series.A == std::vector<int>(A, 2));
    // coeff = prod n!^2 / n! = n!^A
    CHECK(conv.coeff == rat_pow(Rat(factorial(n)), A));
    // shifts r_j = (A-j)(n+1) populate r and normalize away downstream
    CHECK(conv.series.r == std::vector<int>{2, 0});
    MultSeries norm = normalize_shifts(conv.series);
    CHECK(norm.normalized());
    CHECK(norm.n == std::vector<int>{3, 1});
}

TEST_CASE("integral-to-series identity: quadrature matches series at z in {2, 3/2}") {
    std::mt19937_64 rng(77);
    auto ri = [&](int lo, int hi) { return static_cast<int>(rng() % (hi - lo + 1)) + lo; };
    PrecisionScope scope(96);
    QuadratureConfig light; // regular integrand away from z = 1
    light.gl_panels = 6;
    light.gl_points = 10;
    int done = 0;
    while (done < 20) {
        int p = ri(1, 2);
        SorokinIntegral I;
        I.p = p;
        int prev = 0;
        for (int j = 0; j < p; ++j) {
            I.r.push_back(ri(0, 1));
            I.s.push_back(ri(0, 1));
            I.t.push_back(ri(0, 1));
            prev += ri(1, 2);
            I.d.push_back(prev);
        }
        I.D = prev;
        if (I.D > 3) continue;
        ++done;
        Rat z = done % 2 ? Rat(2) : Rat(3, 2);

        QuadratureResult q = quadrature_check(I, z, light);
        SeriesFromIntegral conv = series_from_integral(I);
        NumericResult sn = series_numeric(conv.series, {z}, 2048, 96);
        BigFloat series_side =
            to_bigfloat(conv.coeff) * to_bigfloat(rat_pow(z, conv.z_power)) * sn.value;
        CAPTURE(done);
        CHECK(abs(BigFloat(q.value) - series_side) <=
              BigFloat(q.error) + sn.error + BigFloat("1e-6"));
    }
}

TEST_CASE("cross-oracle at z = 10") {
    SorokinIntegral I;
    I.D = 3;
    I.p = 2;
    I.r = {0, 1};
    I.s = {1, 0};
    I.t = {0, 1};
    I.d = {1, 3};
    QuadratureConfig light;
    light.gl_panels = 4;
    light.gl_points = 12;
    QuadratureResult q = quadrature_check(I, Rat(10), light);
    SeriesFromIntegral conv = series_from_integral(I);
    PrecisionScope scope(96);
    NumericResult sn = series_numeric(conv.series, {Rat(10)}, 512, 96);
    BigFloat rhs = to_bigfloat(conv.coeff) * to_bigfloat(rat_pow(Rat(10), conv.z_power)) *
                   sn.value;
    CHECK(abs(BigFloat(q.value) - rhs) <= BigFloat(q.error) + sn.error + BigFloat("1e-8"));
}

TEST_CASE("quadrature_check: Monte Carlo lane and input validation") {
    SorokinIntegral I;
    I.D = 4;
    I.p = 1;
    I.r = {0};
    I.s = {0};
    I.t = {0};
    I.d = {4};
    QuadratureResult q = quadrature_check(I, Rat(2));
    CHECK(std::string(q.method) == "monte-carlo");
    // int over [0,1]^4 of 1/(2 - x1x2x3x4): between 1/2 and 1
    CHECK(q.value > 0.5);
    CHECK(q.value < 1.0);

    SorokinIntegral big = I;
    big.D = 6;
    big.d = {6};
    CHECK_THROWS(quadrature_check(big, Rat(2)));
    CHECK_THROWS(quadrature_check(I, Rat(1, 2)));

    SorokinIntegral bad = I;
    bad.d = {3};
    CHECK_THROWS(series_from_integral(bad));
}
