#include <zetalin/mpoly.hpp>

#include <sstream>
#include <stdexcept>

namespace zetalin {

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_[Exps(nvars, 0)] = c;
    return p;
}

MPoly MPoly::variable(int nvars, int i, int power) {
    MPoly p(nvars);
    Exps e(nvars, 0);
    e.at(i) = power;
    p.terms_[e] = Rat(1);
    return p;
}

int MPoly::degree(int i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

Rat MPoly::coefficient(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Exps& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const { MPoly r = *this; r += o; return r; }
MPoly MPoly::operator-(const MPoly& o) const { MPoly r = *this; r -= o; return r; }

MPoly MPoly::operator-() const {
    MPoly r(nv_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nv_);
    Exps e(nv_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nv_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(nv_);
    if (c == 0) return r;
    for (const auto& [e, a] : terms_) r.terms_[e] = a * c;
    return r;
}

MPoly MPoly::coeff_of(int i, int k) const {
    MPoly r(nv_);
    for (const auto& [e, c] : terms_)
        if (e[i] == k) {
            Exps e2 = e;
            e2[i] = 0;
            r.add_term(e2, c);
        }
    return r;
}

MPoly MPoly::substitute(int i, const Rat& value) const {
    MPoly r(nv_);
    for (const auto& [e, c] : terms_) {
        Exps e2 = e;
        e2[i] = 0;
        r.add_term(e2, c * rat_pow(value, e[i]));
    }
    return r;
}

MPoly MPoly::substitute(int i, const MPoly& value) const {
    int d = degree(i);
    // Horner in X_i.
    MPoly acc(nv_);
    for (int k = d; k >= 0; --k) {
        if (k != d) acc = acc * value;
        acc += coeff_of(i, k);
    }
    return d < 0 ? MPoly(nv_) : acc;
}

MPoly MPoly::drop_var(int i) const {
    MPoly r(nv_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[i] != 0) throw std::logic_error("drop_var: variable still present");
        Exps e2;
        e2.reserve(nv_ - 1);
        for (int k = 0; k < nv_; ++k)
            if (k != i) e2.push_back(e[k]);
        r.add_term(e2, c);
    }
    return r;
}

MPoly MPoly::insert_var(int i) const {
    MPoly r(nv_ + 1);
    for (const auto& [e, c] : terms_) {
        Exps e2;
        e2.reserve(nv_ + 1);
        for (int k = 0; k < i; ++k) e2.push_back(e[k]);
        e2.push_back(0);
        for (int k = i; k < nv_; ++k) e2.push_back(e[k]);
        r.add_term(e2, c);
    }
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& vals) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nv_; ++i)
            if (e[i]) t *= rat_pow(vals[i], e[i]);
        acc += t;
    }
    return acc;
}

MPoly MPoly::divide_linear_exact(int i, const Rat& a) const {
    // Synthetic division by (X_i + a), coefficients in the remaining variables.
    int d = degree(i);
    if (d < 0) return MPoly(nv_);
    MPoly quot(nv_);
    MPoly carry(nv_);
    for (int k = d; k >= 1; --k) {
        MPoly qk = coeff_of(i, k) + carry;
        quot += qk * MPoly::variable(nv_, i, k - 1);
        carry = qk * (-a);
    }
    MPoly rem = coeff_of(i, 0) + carry;
    if (!rem.is_zero()) throw std::logic_error("divide_linear_exact: nonzero remainder");
    return quot;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (int i = 0; i < nv_; ++i) {
            if (e[i] == 0) continue;
            os << "*" << names[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

MPoly pochhammer(const MPoly& a, int m) {
    MPoly acc = MPoly::constant(a.nvars(), Rat(1));
    for (int t = 0; t < m; ++t)
        acc = acc * (a + MPoly::constant(a.nvars(), Rat(t)));
    return acc;
}

} // namespace zetalin
