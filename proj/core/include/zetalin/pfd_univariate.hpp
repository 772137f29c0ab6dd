#ifndef ZETALIN_PFD_UNIVARIATE_HPP
#define ZETALIN_PFD_UNIVARIATE_HPP

#include <zetalin/rat.hpp>
#include <vector>

namespace zetalin {

// One term of the expansion of 1/((X+i)^e (X+j)^f):
//   is_pole: coeff / (X+shift)^exp   (exp may be <= 0, meaning a power of (X+shift))
//   else:    coeff * X^exp           (exp >= 0)
struct PfdUnivTerm {
    bool is_pole;
    Rat shift;
    int exp;
    Rat coeff;
};

// Expansion of 1/((X+i)^e (X+j)^f) into simple poles and/or powers.
// Dispatch: i == j collapses the two factors; otherwise on the signs of (e, f).
std::vector<PfdUnivTerm> pfd_univariate(int e, int f, const Rat& i, const Rat& j);

} // namespace zetalin

#endif
