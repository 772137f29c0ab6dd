#include <zetalin/laurent.hpp>

#include <algorithm>
#include <sstream>

namespace zetalin {

Rat ZMon::eval(const std::vector<Rat>& z) const {
    Rat acc(1);
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i]) acc *= rat_pow(z[i], e[i]);
    return acc;
}

std::string ZMon::str(const std::string& base) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!first) os << "*";
        first = false;
        os << base << (i + 1);
        if (e[i] != 1) os << "^" << e[i];
    }
    if (first) os << "1";
    return os.str();
}

LaurentPoly LaurentPoly::constant(int nvars, const Rat& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_[ZMon(nvars)] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(const ZMon& m, const Rat& c) {
    LaurentPoly p(m.nvars());
    if (c != 0) p.terms_[m] = c;
    return p;
}

void LaurentPoly::add_term(const ZMon& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    nv_ = std::max(nv_, o.nv_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nv_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(std::max(nv_, o.nv_));
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly r(nv_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_[m] = a * c;
    return r;
}

Rat LaurentPoly::eval(const std::vector<Rat>& z) const {
    Rat acc(0);
    for (const auto& [m, c] : terms_) acc += c * m.eval(z);
    return acc;
}

Rat LaurentPoly::eval_at_one() const {
    Rat acc(0);
    for (const auto& [m, c] : terms_) acc += c;
    return acc;
}

std::pair<int, int> LaurentPoly::exponent_range(int i) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.begin()->first.exp(i), hi = lo;
    for (const auto& [m, c] : terms_) {
        lo = std::min(lo, m.exp(i));
        hi = std::max(hi, m.exp(i));
    }
    return {lo, hi};
}

Int LaurentPoly::denominator() const {
    Int acc(1);
    for (const auto& [m, c] : terms_) acc = lcm(acc, rat_den(c));
    return acc;
}

std::string LaurentPoly::str(const std::string& base) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        if (!m.is_one()) os << "*" << m.str(base);
    }
    return os.str();
}

} // namespace zetalin
