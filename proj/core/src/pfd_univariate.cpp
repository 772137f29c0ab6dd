#include <zetalin/pfd_univariate.hpp>

namespace zetalin {

namespace {

// e <= 0, f >= 1 orientation: sum_{u=0}^{-e} C(-e,u) (i-j)^{-e-u} / (X+j)^{f-u}
void expand_mixed(int e, int f, const Rat& i, const Rat& j,
                  std::vector<PfdUnivTerm>& out) {
    for (int u = 0; u <= -e; ++u) {
        Rat c = Rat(binomial(-e, u)) * rat_pow(i - j, -e - u);
        if (c != 0) out.push_back({true, j, f - u, c});
    }
}

} // namespace

std::vector<PfdUnivTerm> pfd_univariate(int e, int f, const Rat& i, const Rat& j) {
    std::vector<PfdUnivTerm> out;
    if (i == j) {
        out.push_back({true, i, e + f, Rat(1)});
        return out;
    }
    if (e <= 0 && f >= 1) {
        expand_mixed(e, f, i, j, out);
        return out;
    }
    if (f <= 0 && e >= 1) {
        expand_mixed(f, e, j, i, out);
        return out;
    }
    if (e <= 0 && f <= 0) {
        // Both factors are polynomials: binomial expansion into X-monomials.
        std::vector<Rat> acc(-e - f + 1, Rat(0));
        for (int u = 0; u <= -e; ++u)
            for (int v = 0; v <= -f; ++v)
                acc[u + v] += Rat(binomial(-e, u)) * Rat(binomial(-f, v)) *
                              rat_pow(i, -e - u) * rat_pow(j, -f - v);
        for (size_t d = 0; d < acc.size(); ++d)
            if (acc[d] != 0)
                out.push_back({false, Rat(0), static_cast<int>(d), acc[d]});
        return out;
    }
    // e, f >= 1 and i != j: genuine two-pole expansion.
    for (int u = 1; u <= e; ++u) {
        Rat c = Rat(binomial(e + f - 1 - u, f - 1)) * rat_pow(i - j, -(e + f - u));
        if (f % 2) c = -c;
        out.push_back({true, i, u, c});
    }
    for (int v = 1; v <= f; ++v) {
        Rat c = Rat(binomial(e + f - 1 - v, e - 1)) * rat_pow(j - i, -(e + f - v));
        if (e % 2) c = -c;
        out.push_back({true, j, v, c});
    }
    return out;
}

} // namespace zetalin
