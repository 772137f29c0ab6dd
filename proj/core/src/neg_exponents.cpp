#include <zetalin/neg_exponents.hpp>

#include <deque>
#include <sstream>
#include <stdexcept>

namespace zetalin {

namespace {

// Shared symbolic engine: apply (z d/dz)^s to (A(V,z) T + B(V,z)) / (1-z)^d
// where T is a marker with z dT/dz = V T (V = K for z^K, V = l for z^l).
// Variables: 0 = V, 1 = z.
struct MarkedFraction {
    MPoly A, B; // arity 2
    int d;
};

MPoly dz(const MPoly& p) {
    MPoly r(2);
    for (const auto& [e, c] : p.terms()) {
        if (e[1] == 0) continue;
        auto e2 = e;
        e2[1] -= 1;
        r.add_term(e2, c * Rat(e[1]));
    }
    return r;
}

MarkedFraction apply_theta(const MarkedFraction& f) {
    MPoly V = MPoly::variable(2, 0);
    MPoly z = MPoly::variable(2, 1);
    MPoly onemz = MPoly::constant(2, Rat(1)) - z;
    MarkedFraction g;
    g.d = f.d + 1;
    g.A = V * f.A * onemz + z * dz(f.A) * onemz + f.A * z * Rat(f.d);
    g.B = z * dz(f.B) * onemz + f.B * z * Rat(f.d);
    return g;
}

std::vector<UPoly> collect_by_V(const MPoly& p, int vmax) {
    // p(V, z) -> q[l](z) with p = sum_l q[l] V^l.
    std::vector<UPoly> out;
    for (int l = 0; l <= vmax; ++l) {
        MPoly c = p.coeff_of(0, l);
        int dz_deg = c.degree(1);
        UPoly u(std::max(dz_deg + 1, 1), Rat(0));
        for (const auto& [e, q] : c.terms()) u[e[1]] = q;
        out.push_back(std::move(u));
    }
    return out;
}

LaurentPoly upoly_in_monomial(const UPoly& u, const ZMon& mono) {
    LaurentPoly p(mono.nvars());
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) p.add_term(mono.pow(static_cast<int>(i)), u[i]);
    return p;
}

} // namespace

TruncPowerSum trunc_power_sum(int s) {
    if (s < 0) throw std::domain_error("trunc_power_sum: s < 0");
    // P_0(K, z) = (z - z T) / (1-z) with T = z^K.
    MarkedFraction f{MPoly::variable(2, 1) * Rat(-1), MPoly::variable(2, 1), 1};
    for (int i = 0; i < s; ++i) f = apply_theta(f);
    TruncPowerSum out;
    out.s = s;
    out.a1 = collect_by_V(f.A, s);
    out.a2 = collect_by_V(f.B, s);
    return out;
}

TailPowerSum tail_power_sum(int t) {
    if (t < 0) throw std::domain_error("tail_power_sum: t < 0");
    // sum_{k>=l} z^k = z^l / (1-z): A = 1, B = 0, T = z^l.
    MarkedFraction f{MPoly::constant(2, Rat(1)), MPoly(2), 1};
    for (int i = 0; i < t; ++i) f = apply_theta(f);
    if (!f.B.is_zero()) throw std::logic_error("tail_power_sum: unexpected T-free part");
    TailPowerSum out;
    out.t = t;
    out.q = collect_by_V(f.A, t);
    return out;
}

RationalZCoeff RationalZCoeff::from_laurent(const LaurentPoly& p) {
    RationalZCoeff r(p.nvars());
    if (!p.is_zero()) r.parts_[DenKey{}] = p;
    return r;
}

bool RationalZCoeff::is_zero() const {
    for (const auto& [k, p] : parts_)
        if (!p.is_zero()) return false;
    return true;
}

RationalZCoeff& RationalZCoeff::operator+=(const RationalZCoeff& o) {
    for (const auto& [k, p] : o.parts_) {
        auto [it, fresh] = parts_.emplace(k, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) parts_.erase(it);
        }
    }
    return *this;
}

RationalZCoeff RationalZCoeff::operator*(const Rat& c) const {
    RationalZCoeff r(nv_);
    if (c == 0) return r;
    for (const auto& [k, p] : parts_) r.parts_[k] = p * c;
    return r;
}

RationalZCoeff RationalZCoeff::operator*(const LaurentPoly& p) const {
    RationalZCoeff r(nv_);
    if (p.is_zero()) return r;
    for (const auto& [k, q] : parts_) {
        LaurentPoly prod = q * p;
        if (prod.is_zero()) continue;
        auto [it, fresh] = r.parts_.emplace(k, prod);
        if (!fresh) it->second += prod;
    }
    return r;
}

RationalZCoeff RationalZCoeff::operator*(const RationalZCoeff& o) const {
    RationalZCoeff r(nv_);
    for (const auto& [ka, pa] : parts_)
        for (const auto& [kb, pb] : o.parts_) {
            LaurentPoly prod = pa * pb;
            if (prod.is_zero()) continue;
            DenKey key = ka;
            for (const auto& [m, k] : kb) key[m] += k;
            auto [it, fresh] = r.parts_.emplace(key, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second.is_zero()) r.parts_.erase(it);
            }
        }
    return r;
}

RationalZCoeff RationalZCoeff::over_one_minus(const ZMon& mono, int k) const {
    if (mono.is_one()) throw std::logic_error("RationalZCoeff: factor (1-1) is singular");
    RationalZCoeff r(nv_);
    for (const auto& [key, p] : parts_) {
        DenKey k2 = key;
        k2[mono] += k;
        r.parts_[k2] = p;
    }
    return r;
}

Rat RationalZCoeff::eval(const std::vector<Rat>& z) const {
    Rat acc(0);
    for (const auto& [key, p] : parts_) {
        Rat v = p.eval(z);
        for (const auto& [mono, k] : key) {
            Rat d = Rat(1) - mono.eval(z);
            if (d == 0) throw std::domain_error("RationalZCoeff::eval: pole at (1 - monomial)");
            v /= rat_pow(d, k);
        }
        acc += v;
    }
    return acc;
}

std::string RationalZCoeff::str(const std::string& base) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, p] : parts_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str(base) << ")";
        for (const auto& [mono, k] : key)
            os << "/(1-" << mono.str(base) << ")^" << k;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

struct WorkItem {
    RationalZCoeff coeff;
    LaTerm t;
};

// Depth-1 base case: La_{-s}(z) = sum_{k>=1} k^s z^k = z Q_s(1, z) / (1-z)^{s+1}.
RationalZCoeff la_depth1_nonpositive(int s, const ZMon& arg) {
    TailPowerSum tp = tail_power_sum(s);
    UPoly qz(1, Rat(0));
    // Q_s(1, z): substitute l = 1.
    for (const auto& u : tp.q) {
        if (qz.size() < u.size()) qz.resize(u.size(), Rat(0));
        for (size_t i = 0; i < u.size(); ++i) qz[i] += u[i];
    }
    LaurentPoly num = upoly_in_monomial(qz, arg) * LaurentPoly::monomial(arg);
    return RationalZCoeff::from_laurent(num).over_one_minus(arg, s + 1);
}

} // namespace

NonPositiveElimination eliminate_nonpositive(const LaTerm& t0) {
    bool has_nonpositive = false;
    for (int x : t0.s)
        if (x <= 0) has_nonpositive = true;
    if (!has_nonpositive)
        throw std::invalid_argument("eliminate_nonpositive: all exponents already >= 1");
    if (t0.depth() == 0)
        throw std::invalid_argument("eliminate_nonpositive: depth must be >= 1");

    int nv = t0.args[0].nvars();
    NonPositiveElimination out;
    out.constant = RationalZCoeff(nv);

    std::deque<WorkItem> queue;
    queue.push_back({RationalZCoeff::from_laurent(LaurentPoly::constant(nv, Rat(1))), t0});

    while (!queue.empty()) {
        WorkItem w = std::move(queue.front());
        queue.pop_front();
        if (w.coeff.is_zero()) continue;

        const auto& s = w.t.s;
        const auto& args = w.t.args;
        int p = w.t.depth();

        int q = -1; // q+1 = first index with s_{q+1} <= 0 (0-based: first bad index)
        for (int i = 0; i < p; ++i)
            if (s[i] <= 0) { q = i; break; }
        if (q < 0) {
            if (p == 0)
                out.constant += w.coeff;
            else
                out.terms.push_back({std::move(w.coeff), std::move(w.t)});
            continue;
        }
        int sneg = -s[q]; // s_{q+1} = -sneg, sneg >= 0
        const ZMon& Z = args[q];

        if (p == 1) {
            out.constant += w.coeff * la_depth1_nonpositive(sneg, Z);
            continue;
        }

        if (q == 0) {
            // sum_{k1 >= k2} k1^s z1^{k1} = z1^{k2} Q_s(k2, z1) / (1-z1)^{s+1}:
            // lowers the depth by merging z1 into z2.
            TailPowerSum tp = tail_power_sum(sneg);
            for (int jj = 0; jj <= sneg; ++jj) {
                LaurentPoly qj = upoly_in_monomial(tp.q[jj], Z);
                if (qj.is_zero()) continue;
                RationalZCoeff c = (w.coeff * qj).over_one_minus(Z, sneg + 1);
                LaTerm nt;
                nt.s.assign(s.begin() + 1, s.end());
                nt.s[0] = s[1] - jj;
                nt.args.assign(args.begin() + 1, args.end());
                nt.args[0] = args[0] * args[1];
                queue.push_back({std::move(c), std::move(nt)});
            }
            continue;
        }

        TruncPowerSum tp = trunc_power_sum(sneg);

        if (q == p - 1) {
            // Last index: inner truncated sum is P_s(k_{p-1}, z_p).
            for (int l = 0; l <= sneg; ++l) {
                LaurentPoly a1 = upoly_in_monomial(tp.a1[l], Z);
                LaurentPoly a2 = upoly_in_monomial(tp.a2[l], Z);
                if (!a1.is_zero()) {
                    RationalZCoeff c = (w.coeff * a1).over_one_minus(Z, sneg + 1);
                    LaTerm nt;
                    nt.s.assign(s.begin(), s.end() - 1);
                    nt.s[q - 1] = s[q - 1] - l;
                    nt.args.assign(args.begin(), args.end() - 1);
                    nt.args[q - 1] = args[q - 1] * Z;
                    queue.push_back({std::move(c), std::move(nt)});
                }
                if (!a2.is_zero()) {
                    RationalZCoeff c = (w.coeff * a2).over_one_minus(Z, sneg + 1);
                    LaTerm nt;
                    nt.s.assign(s.begin(), s.end() - 1);
                    nt.s[q - 1] = s[q - 1] - l;
                    nt.args.assign(args.begin(), args.end() - 1);
                    queue.push_back({std::move(c), std::move(nt)});
                }
            }
            continue;
        }

        // Middle case 1 <= q <= p-2 (0-based q in [1, p-2]): truncated-sum split.
        for (int l = 0; l <= sneg; ++l) {
            LaurentPoly a1 = upoly_in_monomial(tp.a1[l], Z);
            LaurentPoly a2 = upoly_in_monomial(tp.a2[l], Z);
            // (a) P_s(k_q, Z) recombined: exponent drop at position q-1.
            if (!a1.is_zero()) {
                RationalZCoeff c = (w.coeff * a1).over_one_minus(Z, sneg + 1);
                LaTerm nt;
                nt.s = s;
                nt.s.erase(nt.s.begin() + q);
                nt.s[q - 1] = s[q - 1] - l;
                nt.args = args;
                nt.args.erase(nt.args.begin() + q);
                nt.args[q - 1] = args[q - 1] * Z;
                queue.push_back({std::move(c), std::move(nt)});
            }
            if (!a2.is_zero()) {
                RationalZCoeff c = (w.coeff * a2).over_one_minus(Z, sneg + 1);
                LaTerm nt;
                nt.s = s;
                nt.s.erase(nt.s.begin() + q);
                nt.s[q - 1] = s[q - 1] - l;
                nt.args = args;
                nt.args.erase(nt.args.begin() + q);
                queue.push_back({std::move(c), std::move(nt)});
            }
            // (b), (c): -P_s(k2-1, Z) side, binomially re-expanded; exponent
            // drop lands at position q+1 and Z merges forward (or vanishes).
            for (int mm = 0; mm <= l; ++mm) {
                Rat bin = Rat(binomial(l, mm));
                if ((l - mm) % 2) bin = -bin;
                if (!a1.is_zero()) {
                    LaurentPoly c1 = a1 * LaurentPoly::monomial(Z.inverse(), -bin);
                    RationalZCoeff c = (w.coeff * c1).over_one_minus(Z, sneg + 1);
                    LaTerm nt;
                    nt.s = s;
                    nt.s.erase(nt.s.begin() + q);
                    nt.s[q] = s[q + 1] - mm;
                    nt.args = args;
                    nt.args.erase(nt.args.begin() + q);
                    nt.args[q] = Z * args[q + 1];
                    queue.push_back({std::move(c), std::move(nt)});
                }
                if (!a2.is_zero()) {
                    LaurentPoly c2 = a2 * (-bin);
                    RationalZCoeff c = (w.coeff * c2).over_one_minus(Z, sneg + 1);
                    LaTerm nt;
                    nt.s = s;
                    nt.s.erase(nt.s.begin() + q);
                    nt.s[q] = s[q + 1] - mm;
                    nt.args = args;
                    nt.args.erase(nt.args.begin() + q);
                    queue.push_back({std::move(c), std::move(nt)});
                }
            }
        }
    }

    return out;
}

} // namespace zetalin
