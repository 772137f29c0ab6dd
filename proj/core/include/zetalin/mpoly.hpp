#ifndef ZETALIN_MPOLY_HPP
#define ZETALIN_MPOLY_HPP

#include <zetalin/rat.hpp>
#include <map>
#include <vector>

namespace zetalin {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Exponent vectors all have length nvars(); zero coefficients are never stored.
class MPoly {
public:
    using Exps = std::vector<int>;
    using Map = std::map<Exps, Rat>;

    MPoly() : nv_(0) {}
    explicit MPoly(int nvars) : nv_(nvars) {}

    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int i, int power = 1);

    int nvars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    // deg in variable i; -1 stands for deg(0) = -infinity.
    int degree(int i) const;
    int total_degree() const;

    Rat coefficient(const Exps& e) const;
    void add_term(const Exps& e, const Rat& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    bool operator==(const MPoly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }

    // Coefficient of X_i^k, as a polynomial with the same arity (exponent of i is 0).
    MPoly coeff_of(int i, int k) const;

    // X_i := value, arity preserved.
    MPoly substitute(int i, const Rat& value) const;
    // X_i := polynomial (same arity).
    MPoly substitute(int i, const MPoly& value) const;
    // Remove variable i (its exponent must be 0 everywhere).
    MPoly drop_var(int i) const;
    // Insert a fresh variable at position i (exponent 0).
    MPoly insert_var(int i) const;

    Rat eval(const std::vector<Rat>& vals) const;

    // Exact division by (X_i + a); remainder must be zero.
    MPoly divide_linear_exact(int i, const Rat& a) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nv_;
    Map terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

// (a)_m = a (a+1) ... (a+m-1) for a polynomial argument.
MPoly pochhammer(const MPoly& a, int m);

} // namespace zetalin

#endif
