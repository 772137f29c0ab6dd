#include <doctest.h>

#include <zetalin/bernoulli.hpp>
#include <zetalin/mpoly.hpp>
#include <zetalin/laurent.hpp>
#include <zetalin/pfd_univariate.hpp>

#include <random>

using namespace zetalin;

TEST_CASE("rational helpers") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(rat_pow(Rat(0), 0) == Rat(1));
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(5, 9) == 0);
    CHECK(lcm_upto(0) == 1);
    CHECK(lcm_upto(6) == 60);
    CHECK(rat_from_string("-153060027667/1289945088") ==
          Rat(Int("-153060027667"), Int("1289945088")));
}

TEST_CASE("bernoulli polynomials: base cases") {
    CHECK(bernoulli_polynomial(0) == UPoly{Rat(1)});
    CHECK(bernoulli_polynomial(1) == UPoly{Rat(-1, 2), Rat(1)});
    // s=2 -> X^2 - X + 1/6, and B_2(X+1) - B_2(X) = 2X by expansion
    UPoly b2 = bernoulli_polynomial(2);
    CHECK(b2 == UPoly{Rat(1, 6), Rat(-1), Rat(1)});
}

TEST_CASE("bernoulli polynomials: telescoping identity up to s = 12") {
    for (int s = 0; s <= 12; ++s) {
        UPoly b = bernoulli_polynomial(s);
        MPoly X = MPoly::variable(1, 0);
        MPoly lhs = upoly_eval(b, X + MPoly::constant(1, Rat(1))) - upoly_eval(b, X);
        MPoly rhs = s == 0 ? MPoly(1) : MPoly::variable(1, 0, s - 1) * Rat(s);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("power sums") {
    // Gauss sum symbolically: sum_{k=1}^{n} k = n(n+1)/2
    MPoly n = MPoly::variable(1, 0);
    MPoly one = MPoly::constant(1, Rat(1));
    MPoly gauss = power_sum(1, one, n);
    CHECK(gauss == (n * (n + one)) * Rat(1, 2));

    CHECK(power_sum(2, 2, 4) == Rat(29));
    // brute-force oracle
    Rat acc(0);
    for (long k = 1; k <= 10; ++k) acc += rat_pow(Rat(k), 3);
    CHECK(acc == Rat(3025));
    CHECK(power_sum(3, 1, 10) == Rat(3025));

    CHECK(power_sum(4, 5, 4) == Rat(0)); // empty sum b = a-1
}

TEST_CASE("power sums match brute force for 0 <= s <= 8, 1 <= a <= b <= 30") {
    for (int s = 0; s <= 8; ++s)
        for (long a = 1; a <= 30; ++a) {
            Rat acc(0);
            for (long b = a; b <= 30; ++b) {
                acc += rat_pow(Rat(b), s);
                CHECK(power_sum(s, a, b) == acc);
            }
        }
}

namespace {

// Clear denominators of sum(terms) - 1/((X+i)^e (X+j)^f) and compare polynomials.
bool recombines(int e, int f, const Rat& i, const Rat& j) {
    auto terms = pfd_univariate(e, f, i, j);
    MPoly X = MPoly::variable(1, 0);
    MPoly Xi = X + MPoly::constant(1, i);
    MPoly Xj = X + MPoly::constant(1, j);

    int pe = std::max(e, 0), pf = std::max(f, 0);
    MPoly clear = MPoly::constant(1, Rat(1));
    for (int t = 0; t < pe; ++t) clear = clear * Xi;
    for (int t = 0; t < pf; ++t) clear = clear * Xj;

    MPoly lhs = MPoly::constant(1, Rat(1));
    for (int t = 0; t < -e; ++t) lhs = lhs * Xi;
    for (int t = 0; t < -f; ++t) lhs = lhs * Xj;

    MPoly rhs(1);
    for (const auto& t : terms) {
        MPoly part = MPoly::constant(1, t.coeff);
        if (t.is_pole) {
            MPoly base = X + MPoly::constant(1, t.shift);
            if (t.exp > 0) {
                MPoly cof = clear;
                for (int u = 0; u < t.exp; ++u) cof = cof.divide_linear_exact(0, t.shift);
                part = part * cof;
            } else {
                for (int u = 0; u < -t.exp; ++u) part = part * base;
                part = part * clear;
            }
        } else {
            part = part * MPoly::variable(1, 0, t.exp) * clear;
        }
        rhs += part;
    }
    return lhs == rhs;
}

} // namespace

TEST_CASE("pfd_univariate: stated examples") {
    // 1/(X(X+1)) = 1/X - 1/(X+1)
    auto t = pfd_univariate(1, 1, Rat(0), Rat(1));
    REQUIRE(t.size() == 2);
    CHECK(t[0].is_pole);
    CHECK(t[0].shift == Rat(0));
    CHECK(t[0].exp == 1);
    CHECK(t[0].coeff == Rat(1));
    CHECK(t[1].shift == Rat(1));
    CHECK(t[1].coeff == Rat(-1));

    // e=0: identity case, single pole term
    t = pfd_univariate(0, 2, Rat(5), Rat(1));
    REQUIRE(t.size() == 1);
    CHECK(t[0].is_pole);
    CHECK(t[0].shift == Rat(1));
    CHECK(t[0].exp == 2);
    CHECK(t[0].coeff == Rat(1));

    // e=f=-1, i=1, j=2: (X+1)(X+2) = X^2+3X+2 as monomials
    t = pfd_univariate(-1, -1, Rat(1), Rat(2));
    REQUIRE(t.size() == 3);
    CHECK(!t[0].is_pole);
    CHECK(t[0].exp == 0);
    CHECK(t[0].coeff == Rat(2));
    CHECK(t[1].exp == 1);
    CHECK(t[1].coeff == Rat(3));
    CHECK(t[2].exp == 2);
    CHECK(t[2].coeff == Rat(1));
}

TEST_CASE("pfd_univariate: both orientations of the mixed case") {
    CHECK(recombines(-2, 3, Rat(2), Rat(0)));
    CHECK(recombines(3, -2, Rat(0), Rat(2)));
}

TEST_CASE("pfd_univariate: 500 random instances recombine exactly") {
    std::mt19937_64 rng(20240817);
    auto ri = [&](int lo, int hi) { return static_cast<int>(rng() % (hi - lo + 1)) + lo; };
    for (int trial = 0; trial < 500; ++trial) {
        int e = ri(-4, 4), f = ri(-4, 4);
        Rat i(ri(-3, 3), ri(1, 3));
        Rat j = (trial % 5 == 0) ? i : Rat(ri(-3, 3), ri(1, 3));
        CAPTURE(e);
        CAPTURE(f);
        REQUIRE(recombines(e, f, i, j));
    }
}

TEST_CASE("mpoly basics") {
    MPoly P = MPoly::variable(2, 0, 2) + MPoly::variable(2, 1) * Rat(3);
    CHECK(P.degree(0) == 2);
    CHECK(P.degree(1) == 1);
    CHECK(P.eval({Rat(2), Rat(5)}) == Rat(19));
    CHECK(P.substitute(0, Rat(1)).eval({Rat(0), Rat(1)}) == Rat(4));
    CHECK(MPoly(2).degree(0) == -1);

    MPoly q = pochhammer(MPoly::variable(1, 0), 3); // X(X+1)(X+2)
    CHECK(q.eval({Rat(2)}) == Rat(24));
    CHECK(q.divide_linear_exact(0, Rat(1)).eval({Rat(2)}) == Rat(8));
}

TEST_CASE("laurent polynomials") {
    LaurentPoly p(2);
    p.add_term(ZMon::var(2, 0, -1), Rat(1, 2));
    p.add_term(ZMon::var(2, 1, 3), Rat(2));
    CHECK(p.eval({Rat(2), Rat(1)}) == Rat(9, 4));
    CHECK(p.eval_at_one() == Rat(5, 2));
    CHECK(p.exponent_range(0) == std::pair<int, int>{-1, 0});
    CHECK(p.denominator() == 2);

    // canonical monomials: trailing zeros trimmed, mixed-arity products work
    CHECK(ZMon::one() * ZMon::var(3, 2) == ZMon::var(3, 2));
    CHECK(ZMon::var(1, 0, 2) * ZMon::var(1, 0, -2) == ZMon::one());
}
