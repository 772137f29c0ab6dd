#include <zetalin/bernoulli.hpp>

#include <stdexcept>

namespace zetalin {

Rat upoly_eval(const UPoly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

MPoly upoly_eval(const UPoly& p, const MPoly& x) {
    MPoly acc(x.nvars());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x;
        acc += MPoly::constant(x.nvars(), *it);
    }
    return acc;
}

Rat bernoulli_number(int n) {
    if (n < 0) throw std::domain_error("bernoulli_number: n < 0");
    static std::vector<Rat> cache{Rat(1)};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rat s(0);
        for (int j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rat(m + 1));
    }
    return cache[n];
}

UPoly bernoulli_polynomial(int s) {
    if (s < 0) throw std::domain_error("bernoulli_polynomial: s < 0");
    UPoly p(s + 1, Rat(0));
    for (int k = 0; k <= s; ++k)
        p[k] = Rat(binomial(s, k)) * bernoulli_number(s - k);
    return p;
}

Rat power_sum(int s, long a, long b) {
    if (s < 0) throw std::domain_error("power_sum: s < 0");
    if (b < a - 1) throw std::domain_error("power_sum: b < a-1");
    if (b == a - 1) return Rat(0);
    UPoly B = bernoulli_polynomial(s + 1);
    return (upoly_eval(B, Rat(b + 1)) - upoly_eval(B, Rat(a))) / Rat(s + 1);
}

MPoly power_sum(int s, const MPoly& a, const MPoly& b) {
    if (s < 0) throw std::domain_error("power_sum: s < 0");
    UPoly B = bernoulli_polynomial(s + 1);
    MPoly one = MPoly::constant(b.nvars(), Rat(1));
    MPoly v = upoly_eval(B, b + one) - upoly_eval(B, a);
    return v * (Rat(1) / Rat(s + 1));
}

} // namespace zetalin
