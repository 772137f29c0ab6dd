#ifndef ZETALIN_WORDS_HPP
#define ZETALIN_WORDS_HPP

#include <zetalin/brick.hpp>
#include <zetalin/rat.hpp>
#include <map>
#include <string>
#include <vector>

namespace zetalin {

// Binary word over {0,1}; MZV words end in 1, convergent ones start with 0.
using Word = std::string;
using Composition = std::vector<int>;

// Q-linear combination of convergent compositions (s_1 >= 2) plus a rational constant.
struct MZVExpr {
    Rat constant = Rat(0);
    std::map<Composition, Rat> terms;

    void add(const Composition& c, const Rat& coeff);
    MZVExpr& operator+=(const MZVExpr& o);
    MZVExpr operator*(const Rat& c) const;
    bool operator==(const MZVExpr& o) const = default;
    int max_weight() const;
    std::string str() const;
};

Word word_of_composition(const Composition& s);
Composition composition_of_word(const Word& w);

// All interleavings with multiplicity; total count C(|u|+|v|, |u|).
std::map<Word, long long> shuffle(const Word& u, const Word& v);

// Shuffle regularization with zeta^sh(1) = 0; convergent words map to themselves,
// leading 1s are peeled with the recurrence
//   0 = (i+1) zeta^sh(1^{i+1} s) + zeta^sh(1^i s_1 [1 sh s^{>1}]),
// and pure-1 words vanish.
MZVExpr regularize_sh(const Word& w);

// Strict/non-strict conversion: expand the weakly decreasing sum into strict
// chains by merging adjacent index blocks; exponents add, arguments multiply.
struct LiTerm {
    std::vector<int> s;
    std::vector<ZMon> args;
    auto operator<=>(const LiTerm&) const = default;
};
std::vector<std::pair<Rat, LiTerm>> la_to_li(const LaTerm& t);

// Regularized value of La_s(1, ..., 1): contract to Li compositions, then
// shuffle-regularize each one. Requires all s_i >= 1.
MZVExpr la_word_regularize(const std::vector<int>& s);

} // namespace zetalin

#endif
