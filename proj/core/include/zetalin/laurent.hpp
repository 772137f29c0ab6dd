#ifndef ZETALIN_LAURENT_HPP
#define ZETALIN_LAURENT_HPP

#include <zetalin/rat.hpp>
#include <map>
#include <string>
#include <vector>

namespace zetalin {

// Monomial in the argument variables z_1..z_p, negative exponents allowed.
// Canonical form trims trailing zero exponents, so the arity is only a lower
// bound and products of mixed arities are well-defined.
struct ZMon {
    std::vector<int> e;

    ZMon() = default;
    explicit ZMon(int) {} // the monomial 1
    static ZMon var(int /*nvars*/, int i, int power = 1) {
        ZMon m;
        if (power != 0) {
            m.e.assign(i + 1, 0);
            m.e[i] = power;
        }
        return m;
    }
    static ZMon one(int nvars = 0) { return ZMon(nvars); }

    void trim() {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }
    int nvars() const { return static_cast<int>(e.size()); }
    int exp(int i) const { return i < nvars() ? e[i] : 0; }
    bool is_one() const { return e.empty(); }
    ZMon operator*(const ZMon& o) const {
        ZMon r = *this;
        if (o.e.size() > r.e.size()) r.e.resize(o.e.size(), 0);
        for (size_t i = 0; i < o.e.size(); ++i) r.e[i] += o.e[i];
        r.trim();
        return r;
    }
    ZMon pow(int k) const {
        if (k == 0) return ZMon();
        ZMon r = *this;
        for (auto& x : r.e) x *= k;
        return r;
    }
    ZMon inverse() const { return pow(-1); }
    auto operator<=>(const ZMon& o) const = default;

    Rat eval(const std::vector<Rat>& z) const;
    std::string str(const std::string& base = "z") const;
};

// Sparse Laurent polynomial in z_1..z_p over Q.
class LaurentPoly {
public:
    using Map = std::map<ZMon, Rat>;

    LaurentPoly() : nv_(0) {}
    explicit LaurentPoly(int nvars) : nv_(nvars) {}
    static LaurentPoly constant(int nvars, const Rat& c);
    static LaurentPoly monomial(const ZMon& m, const Rat& c = Rat(1));

    int nvars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    void add_term(const ZMon& m, const Rat& c);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    Rat eval(const std::vector<Rat>& z) const;
    Rat eval_at_one() const;

    // Range of exponents of variable i over the support; {0,0} for the zero polynomial.
    std::pair<int, int> exponent_range(int i) const;
    // lcm of coefficient denominators.
    Int denominator() const;

    std::string str(const std::string& base = "z") const;

private:
    int nv_;
    Map terms_;
};

inline LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

} // namespace zetalin

#endif
