#include <zetalin/sorokin.hpp>

#include <stdexcept>

namespace zetalin {

void SorokinIntegral::validate() const {
    if (D < 1 || p < 1) throw std::invalid_argument("SorokinIntegral: D, p must be >= 1");
    if (static_cast<int>(r.size()) != p || static_cast<int>(s.size()) != p ||
        static_cast<int>(t.size()) != p || static_cast<int>(d.size()) != p)
        throw std::invalid_argument("SorokinIntegral: vector length mismatch");
    int prev = 0;
    for (int j = 0; j < p; ++j) {
        if (r[j] < 0 || s[j] < 0 || t[j] < 0)
            throw std::invalid_argument("SorokinIntegral: parameters must be >= 0");
        if (d[j] <= prev) throw std::invalid_argument("SorokinIntegral: cuts must increase");
        prev = d[j];
    }
    if (d[p - 1] != D) throw std::invalid_argument("SorokinIntegral: d_p must equal D");
}

SeriesFromIntegral series_from_integral(const SorokinIntegral& I) {
    I.validate();
    int p = I.p;

    // Numerator prod_j (k_j - k_{j+1} + 1)_{t_j} with k_{p+1} = 1.
    MPoly P = MPoly::constant(p, Rat(1));
    for (int j = 0; j < p; ++j) {
        MPoly base = MPoly::variable(p, j);
        if (j + 1 < p)
            base -= MPoly::variable(p, j + 1);
        else
            base -= MPoly::constant(p, Rat(1));
        base += MPoly::constant(p, Rat(1));
        P = P * pochhammer(base, I.t[j]);
    }

    std::vector<int> A, n;
    Rat coeff(1);
    int zpow = -(p - 1);
    for (int j = 0; j < p; ++j) {
        A.push_back(I.block_size(j));
        n.push_back(I.s[j]);
        coeff *= rat_pow(Rat(factorial(I.s[j])), A.back()) / Rat(factorial(I.t[j]));
        zpow -= I.t[j];
    }

    // Argument z^{-k_1}: single base variable.
    std::vector<ZMon> args;
    args.push_back(ZMon::var(1, 0));
    for (int j = 1; j < p; ++j) args.push_back(ZMon(1));

    SeriesFromIntegral out;
    out.coeff = coeff;
    out.z_power = zpow;
    out.series = MultSeries::make(p, P, A, n, I.r, args);
    return out;
}

} // namespace zetalin
