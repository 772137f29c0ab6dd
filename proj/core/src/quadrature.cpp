#include <zetalin/sorokin.hpp>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace zetalin {

namespace {

struct Rule {
    std::vector<double> x, w;
};

// Gauss-Legendre nodes on [-1,1] by Newton iteration on P_n.
Rule gauss_legendre(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1 - x * x) * pp * pp);
    }
    return r;
}

// Nodes on [0,1], geometrically graded toward 1 (where z = 1 is singular).
Rule graded_rule(int points, int panels) {
    Rule base = gauss_legendre(points);
    Rule out;
    double a = 0;
    for (int p = 0; p < panels; ++p) {
        double b = p + 1 == panels ? 1.0 : 1.0 - std::pow(0.5, p + 1);
        for (int i = 0; i < points; ++i) {
            out.x.push_back(a + (base.x[i] + 1) * 0.5 * (b - a));
            out.w.push_back(base.w[i] * 0.5 * (b - a));
        }
        a = b;
    }
    return out;
}

double integrand(const SorokinIntegral& I, double z, const std::vector<double>& x) {
    double v = 1;
    int l = 0;
    double prefix = 1;
    for (int j = 0; j < I.p; ++j) {
        for (int b = 0; b < I.block_size(j); ++b, ++l) {
            v *= std::pow(x[l], I.r[j]) * std::pow(1 - x[l], I.s[j]);
            prefix *= x[l];
        }
        v /= std::pow(z - prefix, I.t[j] + 1);
    }
    return v;
}

QuadratureResult tensor_gl(const SorokinIntegral& I, double z, const QuadratureConfig& cfg) {
    auto run = [&](int points) {
        Rule r = graded_rule(points, cfg.gl_panels);
        int n = static_cast<int>(r.x.size());
        std::vector<int> idx(I.D, 0);
        std::vector<double> x(I.D);
        double acc = 0;
        while (true) {
            double w = 1;
            for (int d = 0; d < I.D; ++d) {
                x[d] = r.x[idx[d]];
                w *= r.w[idx[d]];
            }
            acc += w * integrand(I, z, x);
            int d = 0;
            while (d < I.D && ++idx[d] == n) idx[d++] = 0;
            if (d == I.D) break;
        }
        return acc;
    };
    double fine = run(cfg.gl_points);
    double coarse = run(std::max(cfg.gl_points - 4, 4));
    QuadratureResult q;
    q.value = fine;
    q.error = std::abs(fine - coarse) + 1e-12 * std::abs(fine);
    q.method = "gauss-legendre";
    return q;
}

QuadratureResult monte_carlo(const SorokinIntegral& I, double z, const QuadratureConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> x(I.D);
    double sum = 0, sumsq = 0;
    for (long i = 0; i < cfg.mc_samples; ++i) {
        for (int d = 0; d < I.D; ++d) x[d] = uni(rng);
        double f = integrand(I, z, x);
        sum += f;
        sumsq += f * f;
    }
    double mean = sum / cfg.mc_samples;
    double var = std::max(sumsq / cfg.mc_samples - mean * mean, 0.0);
    QuadratureResult q;
    q.value = mean;
    q.error = 3 * std::sqrt(var / cfg.mc_samples);
    q.method = "monte-carlo";
    return q;
}

} // namespace

QuadratureResult quadrature_check(const SorokinIntegral& I, const Rat& z,
                                  const QuadratureConfig& cfg) {
    I.validate();
    if (I.D > 5) throw std::invalid_argument("quadrature_check: D > 5 unsupported");
    if (z < 1) throw std::invalid_argument("quadrature_check: requires z >= 1");
    double zd = z.convert_to<double>();
    if (I.D <= 3) return tensor_gl(I, zd, cfg);
    return monte_carlo(I, zd, cfg);
}

} // namespace zetalin
