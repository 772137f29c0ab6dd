#ifndef ZETALIN_NEG_EXPONENTS_HPP
#define ZETALIN_NEG_EXPONENTS_HPP

#include <zetalin/bernoulli.hpp>
#include <zetalin/brick.hpp>
#include <map>
#include <vector>

namespace zetalin {

// P_s(K, z) = sum_{k=1}^K k^s z^k = sum_l (z^K a1[l](z) + a2[l](z)) K^l / (1-z)^{s+1},
// with a1[l], a2[l] polynomials in z of degree <= s+1, K-independent.
struct TruncPowerSum {
    int s;
    std::vector<UPoly> a1, a2; // index l = 0..s
};
TruncPowerSum trunc_power_sum(int s);

// sum_{k>=l} k^t z^k = z^l Q_t(l, z) / (1-z)^{t+1}; q[i] = coefficient of l^i.
struct TailPowerSum {
    int t;
    std::vector<UPoly> q;
};
TailPowerSum tail_power_sum(int t);

// Formal rational expression: Q-linear combination of Laurent monomials over
// denominators prod (1 - monomial)^k. Monomials in denominators are never 1.
class RationalZCoeff {
public:
    using DenKey = std::map<ZMon, int>;

    RationalZCoeff() : nv_(0) {}
    explicit RationalZCoeff(int nvars) : nv_(nvars) {}
    static RationalZCoeff from_laurent(const LaurentPoly& p);

    int nvars() const { return nv_; }
    bool is_zero() const;
    const std::map<DenKey, LaurentPoly>& parts() const { return parts_; }

    RationalZCoeff& operator+=(const RationalZCoeff& o);
    RationalZCoeff operator*(const Rat& c) const;
    RationalZCoeff operator*(const LaurentPoly& p) const;
    RationalZCoeff operator*(const RationalZCoeff& o) const;
    // Multiply by (1 - mono)^{-k}.
    RationalZCoeff over_one_minus(const ZMon& mono, int k) const;

    Rat eval(const std::vector<Rat>& z) const;
    std::string str(const std::string& base = "z") const;

private:
    int nv_;
    std::map<DenKey, LaurentPoly> parts_;
};

// Elimination of non-positive exponents at argument moduli < 1.
// Input LaTerm args are the actual La arguments (direct semantics). Output
// LaTerms carry only exponents >= 1; the depth-0 piece is returned separately.
struct NonPositiveElimination {
    std::vector<std::pair<RationalZCoeff, LaTerm>> terms;
    RationalZCoeff constant;
};
NonPositiveElimination eliminate_nonpositive(const LaTerm& t);

} // namespace zetalin

#endif
