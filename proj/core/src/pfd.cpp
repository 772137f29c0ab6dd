#include <zetalin/pfd.hpp>

#include <map>
#include <stdexcept>

namespace zetalin {

namespace {

// Monic polynomial in X_i built from a pole set.
MPoly pole_product(int nvars, int i, const PoleSet& ps, int skip_j = -1, int skip_count = 0) {
    MPoly acc = MPoly::constant(nvars, Rat(1));
    MPoly X = MPoly::variable(nvars, i);
    for (const auto& [j, m] : ps) {
        int mult = m - (j == skip_j ? skip_count : 0);
        for (int t = 0; t < mult; ++t)
            acc = acc * (X + MPoly::constant(nvars, Rat(j)));
    }
    return acc;
}

// Long division by a polynomial monic in X_i: N = Q * D + R, deg_{X_i} R < deg_{X_i} D.
std::pair<MPoly, MPoly> divmod_in_var(const MPoly& N, const MPoly& D, int i) {
    int dd = D.degree(i);
    MPoly Q(N.nvars());
    MPoly R = N;
    int dr = R.degree(i);
    while (dr >= dd) {
        MPoly lead = R.coeff_of(i, dr); // coefficient polynomial in the other vars
        MPoly shift = lead * MPoly::variable(N.nvars(), i, dr - dd);
        Q += shift;
        R -= shift * D;
        int next = R.degree(i);
        if (next >= dr && !R.is_zero())
            throw std::logic_error("divmod_in_var: no progress (non-monic divisor?)");
        dr = next;
    }
    return {Q, R};
}

void decompose_var(const MPoly& N, int i, const std::vector<PoleSet>& poles,
                   std::vector<VarFactor>& stack, PFD& out) {
    int nv = N.nvars();
    if (N.is_zero()) return;
    if (i == nv) {
        ElementaryTerm t;
        t.coeff = N.coefficient(std::vector<int>(nv, 0));
        t.f = stack;
        if (t.coeff != 0) out.push_back(std::move(t));
        return;
    }

    const PoleSet& ps = poles[i];
    MPoly D = pole_product(nv, i, ps);
    int M = D.degree(i);

    MPoly R = N;
    if (M == 0) {
        // No denominator in this variable: every X_i power is entire part.
        for (int k = N.degree(i); k >= 0; --k) {
            MPoly c = N.coeff_of(i, k);
            if (c.is_zero()) continue;
            stack.push_back(VarFactor::mono(k));
            decompose_var(c, i + 1, poles, stack, out);
            stack.pop_back();
        }
        return;
    }

    if (R.degree(i) >= M) {
        auto [Q, rem] = divmod_in_var(R, D, i);
        for (int k = Q.degree(i); k >= 0; --k) {
            MPoly c = Q.coeff_of(i, k);
            if (c.is_zero()) continue;
            stack.push_back(VarFactor::mono(k));
            decompose_var(c, i + 1, poles, stack, out);
            stack.pop_back();
        }
        R = rem;
    }

    // Residue peeling on the proper part: repeatedly strip the top power of each pole.
    PoleSet work = ps;
    while (!R.is_zero()) {
        bool any = false;
        for (auto& [j, m] : work) {
            if (m == 0) continue;
            any = true;
            // cofactor E = D_current / (X_i + j)^m evaluated at X_i = -j is a scalar
            Rat Eval(1);
            for (const auto& [j2, m2] : work) {
                if (j2 == j || m2 == 0) continue;
                Eval *= rat_pow(Rat(j2 - j), m2);
            }
            MPoly c = R.substitute(i, Rat(-j)) * (Rat(1) / Eval);
            if (!c.is_zero()) {
                stack.push_back(VarFactor::pole(j, m));
                decompose_var(c.coeff_of(i, 0), i + 1, poles, stack, out);
                stack.pop_back();
            }
            // R := (R - c * E(X_i)) / (X_i + j), one multiplicity consumed.
            MPoly E(nv);
            {
                MPoly acc = MPoly::constant(nv, Rat(1));
                MPoly X = MPoly::variable(nv, i);
                for (const auto& [j2, m2] : work) {
                    if (j2 == j || m2 == 0) continue;
                    for (int t = 0; t < m2; ++t)
                        acc = acc * (X + MPoly::constant(nv, Rat(j2)));
                }
                E = acc;
            }
            R = (R - c * E).divide_linear_exact(i, Rat(j));
            m -= 1;
            break;
        }
        if (!any) {
            if (!R.is_zero())
                throw std::logic_error("decompose_var: residual after exhausting poles");
            break;
        }
    }
}

} // namespace

PoleSet pochhammer_poles(int A, int n) {
    PoleSet ps;
    for (int j = 0; j <= n; ++j) ps.push_back({j, A});
    return ps;
}

PFD decompose_general(const MPoly& N, const std::vector<PoleSet>& poles) {
    if (static_cast<int>(poles.size()) != N.nvars())
        throw std::invalid_argument("decompose_general: pole set arity mismatch");
    PFD out;
    std::vector<VarFactor> stack;
    decompose_var(N, 0, poles, stack, out);
    return out;
}

PFD decompose_rational(const MultSeries& s) {
    if (!s.normalized()) throw std::logic_error("decompose_rational: series not normalized");
    std::vector<PoleSet> poles;
    for (int i = 0; i < s.p; ++i) poles.push_back(pochhammer_poles(s.A[i], s.n[i]));
    return decompose_general(s.P, poles);
}

MPoly pfd_recombine_numerator(const PFD& pfd, const std::vector<PoleSet>& poles,
                              int nvars) {
    // Grouped tensor sum: recurse over variables, caching the per-variable cofactors.
    std::vector<std::map<VarFactor, MPoly>> cof(nvars);
    auto cofactor = [&](int i, const VarFactor& vf) -> const MPoly& {
        auto it = cof[i].find(vf);
        if (it != cof[i].end()) return it->second;
        MPoly c(nvars);
        if (vf.is_mono())
            c = pole_product(nvars, i, poles[i]) * MPoly::variable(nvars, i, vf.e);
        else
            c = pole_product(nvars, i, poles[i], vf.j, vf.s);
        return cof[i].emplace(vf, std::move(c)).first->second;
    };

    struct Rec {
        int nvars;
        const std::vector<PoleSet>& poles;
        decltype(cofactor)& cf;
        MPoly run(std::vector<const ElementaryTerm*>& terms, int i) {
            if (i == nvars) {
                Rat c(0);
                for (auto* t : terms) c += t->coeff;
                return MPoly::constant(nvars, c);
            }
            std::map<VarFactor, std::vector<const ElementaryTerm*>> groups;
            for (auto* t : terms) groups[t->f[i]].push_back(t);
            MPoly acc(nvars);
            for (auto& [vf, sub] : groups)
                acc += cf(i, vf) * run(sub, i + 1);
            return acc;
        }
    } rec{nvars, poles, cofactor};

    std::vector<const ElementaryTerm*> all;
    for (const auto& t : pfd) all.push_back(&t);
    return rec.run(all, 0);
}

ElementarySeries elementary_series(const ElementaryTerm& t, const std::vector<ZMon>& args) {
    if (static_cast<int>(args.size()) != t.depth())
        throw std::invalid_argument("elementary_series: argument count mismatch");
    return {t, args};
}

} // namespace zetalin
