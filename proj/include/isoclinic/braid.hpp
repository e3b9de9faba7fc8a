#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isoclinic/rootweyl.hpp"

namespace isoc {

// Positive braid word: 1-based simple generator indices.
using BraidWord = std::vector<int>;

struct GarsideNormalForm {
    std::vector<WeylElement> simples;  // left-greedy, no identity factors
};

struct Slope {
    int d = 1;
    int m = 1;

    Slope() = default;
    Slope(int d_, int m_);  // throws unless d, m > 0 and coprime
    static Slope parse(const std::string& s);  // "d/m"
    Rational value() const { return Rational(d, m); }
    std::string str() const { return std::to_string(d) + "/" + std::to_string(m); }
};

GarsideNormalForm normal_form(const RootSystem& rs, const BraidWord& word);
BraidWord flatten(const RootSystem& rs, const GarsideNormalForm& nf);
BraidWord power(const BraidWord& word, int d);
BraidWord cyclic_shift(const BraidWord& word);
bool braid_equal(const RootSystem& rs, const BraidWord& a, const BraidWord& b);
bool contains_full_twist(const RootSystem& rs, const BraidWord& word);
BraidWord full_twist(const RootSystem& rs);

void check_word(const RootSystem& rs, const BraidWord& word);
BraidWord parse_word(const std::string& s);  // "1,2,1,2"
std::string word_str(const BraidWord& w);

struct RootSearchOptions {
    std::uint64_t budget = 10000000;  // candidate elements examined
};

// All w with l(w) = |Phi|/m, order m and lift an m-th root of the full twist,
// sorted by reduced word.  m = 1 gives the identity (its "lift" is the full
// twist itself, which is not a simple).
std::vector<WeylElement> find_root_elements(const RootSystem& rs, int m,
                                            const RootSearchOptions& opt = {});

// Does some exp(2 pi i/m)-eigenvector x of w satisfy Re alpha(x) > 0 for all
// positive alpha.  Throws if the eigenvalue is absent.
bool springer_chamber_check(const RootSystem& rs, const WeylElement& w, int m);

// Canonical root element: the least one passing the chamber check, else the
// least one.  Throws if m is not regular.
WeylElement springer_element(const RootSystem& rs, int m);
BraidWord springer_braid(const RootSystem& rs, const Slope& slope);

}  // namespace isoc
