#ifndef ZETALIN_SOROKIN_HPP
#define ZETALIN_SOROKIN_HPP

#include <zetalin/series.hpp>
#include <vector>

namespace zetalin {

// The integral over [0,1]^D of
//   prod_{j=1}^{p} [ prod_{l=d_{j-1}+1}^{d_j} x_l^{r_j} (1-x_l)^{s_j} ]
//                / (z - x_1...x_{d_j})^{t_j+1},
// with 0 = d_0 < d_1 < ... < d_p = D and A_j = d_j - d_{j-1}.
struct SorokinIntegral {
    int D = 1;
    int p = 1;
    std::vector<int> r, s, t;
    std::vector<int> d; // cut vector d_1..d_p, strictly increasing, d_p = D

    void validate() const;
    int block_size(int j) const { return d[j] - (j ? d[j - 1] : 0); } // A_{j+1}, 0-based
};

// The series side of the identity: integral = coeff * z^{z_power} * series(z),
// series = sum_{k_1>=...>=k_p>=1} z^{-k_1} prod_j (k_j - k_{j+1} + 1)_{t_j}
//          / (k_j + r_j)_{s_j+1}^{A_j}, k_{p+1} = 1.
struct SeriesFromIntegral {
    Rat coeff;    // prod s_j!^{A_j} / t_j!
    int z_power;  // -(t_1 + ... + t_p + p - 1)
    MultSeries series;
};

SeriesFromIntegral series_from_integral(const SorokinIntegral& I);

struct QuadratureConfig {
    int gl_points = 12;      // Gauss-Legendre points per panel
    int gl_panels = 22;      // geometric panels toward the singular face at 1
    long mc_samples = 400000;
    unsigned seed = 20240817;
};

struct QuadratureResult {
    double value = 0;
    double error = 0; // statistical or grid-refinement estimate
    const char* method = "";
};

// Numeric value of the integral: tensorized Gauss-Legendre on a geometrically
// graded mesh for D <= 3, Monte Carlo for D <= 5. Rejects D > 5 and z < 1.
QuadratureResult quadrature_check(const SorokinIntegral& I, const Rat& z,
                                  const QuadratureConfig& cfg = {});

} // namespace zetalin

#endif
