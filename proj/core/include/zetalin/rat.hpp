#ifndef ZETALIN_RAT_HPP
#define ZETALIN_RAT_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetalin {

// Exact rational scalar. GMP keeps it reduced with positive denominator.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }
inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// x^e for integer e of either sign; 0^0 = 1, 0^negative is an error.
inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e > 0) return Rat(0);
        throw std::domain_error("rat_pow: zero base with negative exponent");
    }
    Rat base = e > 0 ? x : Rat(1) / x;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline Int int_pow(long x, long e) {
    if (e < 0) throw std::domain_error("int_pow: negative exponent");
    Int acc(1), b(x);
    for (long i = 0; i < e; ++i) acc *= b;
    return acc;
}

inline Int factorial(long n) {
    Int acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

// d_n = lcm(1, 2, ..., n); d_0 = 1.
inline Int lcm_upto(long n) {
    Int acc(1);
    for (long i = 2; i <= n; ++i) acc = lcm(acc, Int(i));
    return acc;
}

inline std::string rat_str(const Rat& q) { return q.str(); }

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace zetalin

#endif
