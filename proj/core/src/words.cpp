#include <zetalin/words.hpp>

#include <sstream>
#include <stdexcept>

namespace zetalin {

void MZVExpr::add(const Composition& c, const Rat& coeff) {
    if (coeff == 0) return;
    if (c.empty()) {
        constant += coeff;
        return;
    }
    if (c[0] < 2) throw std::logic_error("MZVExpr: divergent composition");
    auto [it, fresh] = terms.emplace(c, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

MZVExpr& MZVExpr::operator+=(const MZVExpr& o) {
    constant += o.constant;
    for (const auto& [c, q] : o.terms) add(c, q);
    return *this;
}

MZVExpr MZVExpr::operator*(const Rat& c) const {
    MZVExpr r;
    if (c == 0) return r;
    r.constant = constant * c;
    for (const auto& [k, q] : terms) r.terms[k] = q * c;
    return r;
}

int MZVExpr::max_weight() const {
    int w = 0;
    for (const auto& [c, q] : terms) {
        int t = 0;
        for (int x : c) t += x;
        w = std::max(w, t);
    }
    return w;
}

std::string MZVExpr::str() const {
    std::ostringstream os;
    os << rat_str(constant);
    for (const auto& [c, q] : terms) {
        os << " + " << rat_str(q) << "*zeta(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i];
        }
        os << ")";
    }
    return os.str();
}

Word word_of_composition(const Composition& s) {
    Word w;
    for (int x : s) {
        if (x < 1) throw std::invalid_argument("word_of_composition: entries must be >= 1");
        w.append(x - 1, '0');
        w.push_back('1');
    }
    return w;
}

Composition composition_of_word(const Word& w) {
    if (w.empty() || w.back() != '1')
        throw std::invalid_argument("composition_of_word: word must end in 1");
    Composition s;
    int run = 0;
    for (char c : w) {
        if (c == '0') {
            ++run;
        } else if (c == '1') {
            s.push_back(run + 1);
            run = 0;
        } else {
            throw std::invalid_argument("composition_of_word: alphabet is {0,1}");
        }
    }
    return s;
}

std::map<Word, long long> shuffle(const Word& u, const Word& v) {
    std::map<Word, long long> out;
    if (u.empty()) { out[v] = 1; return out; }
    if (v.empty()) { out[u] = 1; return out; }
    for (const auto& [w, c] : shuffle(u.substr(1), v))
        out[u.substr(0, 1) + w] += c;
    for (const auto& [w, c] : shuffle(u, v.substr(1)))
        out[v.substr(0, 1) + w] += c;
    return out;
}

namespace {

bool all_ones(const Word& w) {
    for (char c : w) if (c != '1') return false;
    return true;
}

MZVExpr regularize_sh_memo(const Word& w, std::map<Word, MZVExpr>& memo) {
    auto hit = memo.find(w);
    if (hit != memo.end()) return hit->second;

    MZVExpr r;
    if (w.front() == '0') {
        r.add(composition_of_word(w), Rat(1));
    } else if (all_ones(w)) {
        // zeta^sh(1^m) = 0, forced by iterated shuffles of "1" with itself.
    } else {
        // w = 1^{i+1} s with s in A_c; peel one leading 1:
        // zeta^sh(1^{i+1} s) = -1/(i+1) zeta^sh(1^i s_1 [1 sh s^{>1}]).
        size_t lead = w.find('0');
        int i = static_cast<int>(lead) - 1;
        Word s = w.substr(lead); // starts with 0, ends with 1
        Word prefix = w.substr(0, lead - 1) + s.substr(0, 1); // 1^i s_1
        Rat scale = Rat(-1, i + 1);
        for (const auto& [t, c] : shuffle("1", s.substr(1)))
            r += regularize_sh_memo(prefix + t, memo) * (scale * Rat(c));
    }
    memo.emplace(w, r);
    return r;
}

} // namespace

MZVExpr regularize_sh(const Word& w) {
    if (w.empty() || w.back() != '1')
        throw std::invalid_argument("regularize_sh: word must end in 1");
    static std::map<Word, MZVExpr> memo;
    return regularize_sh_memo(w, memo);
}

std::vector<std::pair<Rat, LiTerm>> la_to_li(const LaTerm& t) {
    std::vector<std::pair<Rat, LiTerm>> out;
    int p = t.depth();
    if (p == 0) {
        out.push_back({Rat(1), LiTerm{}});
        return out;
    }
    // Each of the 2^{p-1} block patterns merges maximal runs of equal indices.
    for (unsigned mask = 0; mask < (1u << (p - 1)); ++mask) {
        LiTerm li;
        int se = t.s[0];
        ZMon ma = t.args[0];
        for (int i = 1; i < p; ++i) {
            if (mask & (1u << (i - 1))) {
                se += t.s[i];
                ma = ma * t.args[i];
            } else {
                li.s.push_back(se);
                li.args.push_back(ma);
                se = t.s[i];
                ma = t.args[i];
            }
        }
        li.s.push_back(se);
        li.args.push_back(ma);
        out.push_back({Rat(1), li});
    }
    return out;
}

MZVExpr la_word_regularize(const std::vector<int>& s) {
    for (int x : s)
        if (x < 1) throw std::invalid_argument("la_word_regularize: entries must be >= 1");
    LaTerm t;
    t.s = s;
    t.args.assign(s.size(), ZMon(0));
    MZVExpr r;
    for (const auto& [c, li] : la_to_li(t)) {
        if (li.s.empty()) {
            r.constant += c;
            continue;
        }
        r += regularize_sh(word_of_composition(li.s)) * c;
    }
    return r;
}

} // namespace zetalin
