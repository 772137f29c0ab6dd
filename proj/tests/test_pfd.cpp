#include <doctest.h>

#include <zetalin/pfd.hpp>

#include <random>

using namespace zetalin;

namespace {

const ElementaryTerm* find_term(const PFD& pfd, const std::vector<VarFactor>& f) {
    for (const auto& t : pfd)
        if (t.f == f) return &t;
    return nullptr;
}

std::vector<PoleSet> poch_poles(const MultSeries& s) {
    std::vector<PoleSet> poles;
    for (int i = 0; i < s.p; ++i) poles.push_back(pochhammer_poles(s.A[i], s.n[i]));
    return poles;
}

} // namespace

TEST_CASE("decompose_rational: X^2/(X(X+1)) = 1 - 1/(X+1)") {
    MultSeries s = MultSeries::make(1, MPoly::variable(1, 0, 2), {1}, {1});
    PFD pfd = decompose_rational(s);
    REQUIRE(pfd.size() == 2);
    const auto* entire = find_term(pfd, {VarFactor::mono(0)});
    REQUIRE(entire);
    CHECK(entire->coeff == Rat(1));
    const auto* pole1 = find_term(pfd, {VarFactor::pole(1, 1)});
    REQUIRE(pole1);
    CHECK(pole1->coeff == Rat(-1));
    CHECK(find_term(pfd, {VarFactor::pole(0, 1)}) == nullptr); // C = 0 dropped
}

TEST_CASE("decompose_rational: telescoping kernel 1/(X(X+1))") {
    MultSeries s = MultSeries::make(1, MPoly::constant(1, Rat(1)), {1}, {1});
    PFD pfd = decompose_rational(s);
    REQUIRE(pfd.size() == 2);
    CHECK(find_term(pfd, {VarFactor::pole(0, 1)})->coeff == Rat(1));
    CHECK(find_term(pfd, {VarFactor::pole(1, 1)})->coeff == Rat(-1));
}

TEST_CASE("decompose_rational: product of univariate decompositions") {
    // 1/(X1(X1+1)X2) = (1/X1 - 1/(X1+1)) * 1/X2
    MultSeries s = MultSeries::make(2, MPoly::constant(2, Rat(1)), {1, 1}, {1, 0});
    PFD pfd = decompose_rational(s);
    REQUIRE(pfd.size() == 2);
    CHECK(find_term(pfd, {VarFactor::pole(0, 1), VarFactor::pole(0, 1)})->coeff == Rat(1));
    CHECK(find_term(pfd, {VarFactor::pole(1, 1), VarFactor::pole(0, 1)})->coeff == Rat(-1));
}

TEST_CASE("classical decomposition when J is empty") {
    // proper in every variable: only I = {} quadruplets
    std::mt19937_64 rng(3);
    auto ri = [&](int lo, int hi) { return static_cast<int>(rng() % (hi - lo + 1)) + lo; };
    for (int trial = 0; trial < 20; ++trial) {
        int p = ri(1, 3);
        std::vector<int> A, n;
        MPoly P(p);
        for (int i = 0; i < p; ++i) {
            A.push_back(ri(1, 2));
            n.push_back(ri(0, 2));
        }
        std::vector<int> e;
        for (int i = 0; i < p; ++i) e.push_back(std::max(A[i] * (n[i] + 1) - 1 - ri(1, 2), 0));
        P.add_term(e, Rat(ri(1, 5)));
        MultSeries s = MultSeries::make(p, P, A, n);
        for (const auto& t : decompose_rational(s))
            for (const auto& vf : t.f) CHECK(!vf.is_mono());
    }
}

TEST_CASE("quadruplet bounds and exact recombination on 200 random instances") {
    std::mt19937_64 rng(20240817);
    auto ri = [&](int lo, int hi) { return static_cast<int>(rng() % (hi - lo + 1)) + lo; };
    for (int trial = 0; trial < 200; ++trial) {
        int p = ri(1, 3);
        std::vector<int> A, n;
        for (int i = 0; i < p; ++i) {
            A.push_back(ri(1, 3));
            n.push_back(ri(0, 3));
        }
        MPoly P(p);
        int nterms = ri(1, 4);
        for (int t = 0; t < nterms; ++t) {
            std::vector<int> e;
            for (int i = 0; i < p; ++i) e.push_back(ri(0, A[i] * (n[i] + 1) + 2));
            P.add_term(e, Rat(ri(-6, 6), ri(1, 3)));
        }
        MultSeries s = MultSeries::make(p, P, A, n);
        PFD pfd = decompose_rational(s);

        for (const auto& t : pfd) {
            CHECK(t.coeff != 0);
            REQUIRE(t.depth() == p);
            for (int i = 0; i < p; ++i) {
                if (t.f[i].is_mono()) {
                    int Ahat = P.degree(i) - A[i] * (n[i] + 1);
                    CHECK(t.f[i].e >= 0);
                    CHECK(t.f[i].e <= Ahat);
                } else {
                    CHECK(t.f[i].s >= 1);
                    CHECK(t.f[i].s <= A[i]);
                    CHECK(t.f[i].j >= 0);
                    CHECK(t.f[i].j <= n[i]);
                }
            }
        }
        REQUIRE(pfd_recombine_numerator(pfd, poch_poles(s), p) == P);
    }
}

TEST_CASE("decompose_general with mixed pole sets") {
    // (X^3 + 1) / ((X+1)^2 (X+3))
    MPoly P = MPoly::variable(1, 0, 3) + MPoly::constant(1, Rat(1));
    std::vector<PoleSet> poles = {{{1, 2}, {3, 1}}};
    PFD pfd = decompose_general(P, poles);
    CHECK(pfd_recombine_numerator(pfd, poles, 1) == P);
    bool has_entire = false;
    for (const auto& t : pfd) has_entire |= t.f[0].is_mono();
    CHECK(has_entire);
}

TEST_CASE("elementary_series packaging") {
    // the zeta(2,1)-summand: I = {}, s = (2,1), j = (0,0)
    ElementaryTerm t{Rat(2), {VarFactor::pole(0, 2), VarFactor::pole(0, 1)}};
    std::vector<ZMon> args = {ZMon::var(2, 0), ZMon::var(2, 1)};
    ElementarySeries es = elementary_series(t, args);
    CHECK(es.term == t);
    CHECK(es.args == args);

    // summand k2/k1^2: I = {2}, shat_2 = 1, s_1 = 2, j_1 = 0
    ElementaryTerm u{Rat(1), {VarFactor::pole(0, 2), VarFactor::mono(1)}};
    ElementarySeries eu = elementary_series(u, args);
    CHECK(eu.term.f[0] == VarFactor::pole(0, 2));
    CHECK(eu.term.f[1] == VarFactor::mono(1));

    // summand 1/(k+3): I = {}, s = (1), j = (3)
    ElementaryTerm v{Rat(1), {VarFactor::pole(3, 1)}};
    ElementarySeries ev = elementary_series(v, {ZMon::var(1, 0)});
    CHECK(ev.term.f[0].j == 3);
    CHECK(ev.term.f[0].s == 1);

    CHECK_THROWS(elementary_series(t, {ZMon::var(1, 0)}));
}
