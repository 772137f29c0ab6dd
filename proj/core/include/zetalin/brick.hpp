#ifndef ZETALIN_BRICK_HPP
#define ZETALIN_BRICK_HPP

#include <zetalin/laurent.hpp>
#include <zetalin/pfd.hpp>
#include <map>
#include <memory>
#include <vector>

namespace zetalin {

// Shifted-modulated elementary series
//   B_N = sum over k_1 >= 1, 1 <= k_i <= k_{i-1} + m_i  of
//         prod_i args_i^{-k_i} / (k_i + j_i)^{s_i},
// with m_1 = 0 always. Exponents s_i may be any integers.
struct Brick {
    std::vector<int> s;
    std::vector<int> m;
    std::vector<int> j;
    std::vector<ZMon> args;

    int depth() const { return static_cast<int>(s.size()); }
    bool unmodulated() const {
        for (int x : m) if (x) return false;
        return true;
    }
    void validate() const;
    auto operator<=>(const Brick&) const = default;
};

// One multiple polylogarithm La_{s}(1/zhat_1, ..., 1/zhat_q); args stores the
// monomials zhat_i. Depth 0 is the constant function 1.
struct LaTerm {
    std::vector<int> s;
    std::vector<ZMon> args;

    int depth() const { return static_cast<int>(s.size()); }
    int weight() const {
        int w = 0;
        for (int x : s) w += std::max(x, 0);
        return w;
    }
    auto operator<=>(const LaTerm&) const = default;
};

// Q-linear combination of La terms with Laurent-polynomial coefficients,
// plus a pure Laurent-polynomial part. Keys are canonical (merged, no zeros).
class Decomposition {
public:
    Decomposition() : nv_(0), constant_(0) {}
    explicit Decomposition(int zvars) : nv_(zvars), constant_(zvars) {}

    int zvars() const { return nv_; }
    const std::map<LaTerm, LaurentPoly>& la_terms() const { return la_; }
    const LaurentPoly& constant() const { return constant_; }

    void add_la(const LaTerm& t, const LaurentPoly& c);
    void add_constant(const LaurentPoly& c) { constant_ += c; }
    void add_scaled(const Decomposition& d, const LaurentPoly& c);
    void prune();

    // Terms ordered by (depth, weight, s, args) for reproducible output.
    std::vector<std::pair<LaTerm, LaurentPoly>> ordered_terms() const;

private:
    int nv_;
    std::map<LaTerm, LaurentPoly> la_;
    LaurentPoly constant_;
};

// Q_{s^p, p}(K; args^p): the truncated nested sum over K >= k_p >= ... >= k_N >= 1.
// p is 1-based; p = N+1 gives 1, K = 0 gives 0.
LaurentPoly q_poly(const std::vector<int>& s, int p, long K, const std::vector<ZMon>& args);

// Full recursive decomposition of a brick into La terms of depth <= N, the
// depth-N part being exactly (prod args_i^{j_i}) * La_s(1/args). Memoized per call.
Decomposition decompose_brick(const Brick& b);

// Reusable memo across many decompositions (the recursion revisits sub-bricks).
class BrickCache {
public:
    BrickCache();
    ~BrickCache();
    BrickCache(BrickCache&&) noexcept;
    BrickCache& operator=(BrickCache&&) noexcept;
    Decomposition decompose(const Brick& b);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Pure-pole elementary term viewed as an unmodulated brick.
Brick brick_from_elementary(const ElementaryTerm& t, const std::vector<ZMon>& args);

// Whole-series decomposition at generic z: partial fractions, one brick per
// quadruplet (entire parts become non-positive exponents with shift 0), merged
// into a single canonical Decomposition.
Decomposition decompose_series_generic(const MultSeries& s);

// Denominator/degree certificate for bricks with all exponents >= 1:
// scale = d_{I_N}^{Sigma_N} (d_{J_N}^{Sigma_N} when unmodulated) clears every
// coefficient denominator, and z1-exponents stay within [0, K_N] ([0, J_N]).
//
// The stated K_N degree bound fails for some modulated bricks (smallest case:
// s = (1,1,1), j = (0,0,0), m = (0,1,1), where the coefficient of
// La_1(1/(z1 z2 z3)) has z1-degree 2 = I_N > K_N = 1). The modulation-aware
// bound I_N is reported alongside; for unmodulated bricks the two coincide.
struct BoundsCertificate {
    bool denominator_ok = false;
    bool degree_ok = false;          // z1-exponents within [0, K_N] ([0, J_N])
    bool degree_ok_modaware = false; // z1-exponents within [0, I_N] ([0, J_N])
    Int scale;
    int degree_bound = 0;
    int degree_bound_modaware = 0;
    int max_z1_exponent = 0;
    int min_z1_exponent = 0;
    bool ok() const { return denominator_ok && degree_ok; }
};

BoundsCertificate certify_bounds(const Brick& b, const Decomposition& d);

} // namespace zetalin

#endif
