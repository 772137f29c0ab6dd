#ifndef ZETALIN_BERNOULLI_HPP
#define ZETALIN_BERNOULLI_HPP

#include <zetalin/mpoly.hpp>
#include <vector>

namespace zetalin {

// Univariate polynomial, coefficients in ascending degree order.
using UPoly = std::vector<Rat>;

Rat upoly_eval(const UPoly& p, const Rat& x);
MPoly upoly_eval(const UPoly& p, const MPoly& x);

// Bernoulli number B_n (B_1 = -1/2).
Rat bernoulli_number(int n);

// B_s(X), normalized by B_s(X+1) - B_s(X) = s X^{s-1}.
UPoly bernoulli_polynomial(int s);

// Faulhaber: sum_{k=a}^{b} k^s = (B_{s+1}(b+1) - B_{s+1}(a)) / (s+1).
// Empty when b = a-1.
Rat power_sum(int s, long a, long b);

// Same sum with polynomial bounds; result is a polynomial in the bound variables.
MPoly power_sum(int s, const MPoly& a, const MPoly& b);

} // namespace zetalin

#endif
