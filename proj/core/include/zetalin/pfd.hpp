#ifndef ZETALIN_PFD_HPP
#define ZETALIN_PFD_HPP

#include <zetalin/mpoly.hpp>
#include <zetalin/series.hpp>
#include <vector>

namespace zetalin {

// Per-variable factor of an elementary term, in normal form:
// either a monomial X^e (entire part, e >= 0) or a single shifted pole 1/(X+j)^s.
struct VarFactor {
    enum class Kind { Mono, Pole };
    Kind kind = Kind::Mono;
    int e = 0; // Mono power
    int j = 0; // Pole shift
    int s = 0; // Pole order, >= 1

    static VarFactor mono(int e) { return {Kind::Mono, e, 0, 0}; }
    static VarFactor pole(int j, int s) { return {Kind::Pole, 0, j, s}; }
    bool is_mono() const { return kind == Kind::Mono; }
    auto operator<=>(const VarFactor&) const = default;
};

// c * prod_i f_i(X_i); the quadruplet (I, (s_i), (j_i), (shat_i)) in flattened form
// with I = the Mono positions.
struct ElementaryTerm {
    Rat coeff;
    std::vector<VarFactor> f;

    int depth() const { return static_cast<int>(f.size()); }
    bool pure_poles() const {
        for (const auto& x : f)
            if (x.is_mono()) return false;
        return true;
    }
    auto operator<=>(const ElementaryTerm&) const = default;
};

using PFD = std::vector<ElementaryTerm>;

// The pole multiset of one variable: list of (shift, multiplicity), shifts distinct.
using PoleSet = std::vector<std::pair<int, int>>;

// Exact decomposition of N / prod_i D_i(X_i), D_i = prod_(j,m) (X_i + j)^m,
// into elementary terms. Entire parts appear whenever deg_{X_i} N >= deg D_i.
PFD decompose_general(const MPoly& N, const std::vector<PoleSet>& poles);

// Decomposition of P / prod (X_i)_{n_i+1}^{A_i} over quadruplets; s must be normalized.
PFD decompose_rational(const MultSeries& s);

PoleSet pochhammer_poles(int A, int n);

// Recombination oracle: sums C[w] * (entire monomials) * (denominator cofactors)
// back into the numerator over the common denominator prod_i D_i. Used by tests to
// certify decompositions exactly.
MPoly pfd_recombine_numerator(const PFD& pfd, const std::vector<PoleSet>& poles,
                              int nvars);

// Attach argument monomials to a quadruplet term; the z = 1 pipeline and the
// brick route both consume this packaging.
struct ElementarySeries {
    ElementaryTerm term;
    std::vector<ZMon> args;
};
ElementarySeries elementary_series(const ElementaryTerm& t, const std::vector<ZMon>& args);

} // namespace zetalin

#endif
