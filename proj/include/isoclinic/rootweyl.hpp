#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "isoclinic/arith.hpp"

namespace isoc {

using IntMatrix = std::vector<std::vector<long>>;

// A Weyl group element as the permutation it induces on root indices.
// Byte i of perm is the index of w(root i).
struct WeylElement {
    std::string perm;
    int length = 0;

    bool operator==(const WeylElement& o) const { return perm == o.perm; }
    bool operator!=(const WeylElement& o) const { return perm != o.perm; }
    bool operator<(const WeylElement& o) const { return perm < o.perm; }
};

class RootSystem {
public:
    // "A1".."A6", "G2", "F4", "E6".  Anything else throws.
    static RootSystem build(const std::string& label);

    const std::string& label() const { return label_; }
    char family() const { return label_[0]; }
    int rank() const { return rank_; }
    const IntMatrix& cartan() const { return cartan_; }
    int num_positive() const { return npos_; }
    int num_roots() const { return 2 * npos_; }
    const std::vector<std::vector<int>>& roots() const { return roots_; }
    const std::vector<int>& root(int i) const { return roots_[i]; }
    bool positive(int i) const { return i < npos_; }
    int negate(int i) const { return i < npos_ ? i + npos_ : i - npos_; }
    int simple(int s) const { return simple_[s - 1]; }  // s is 1-based
    int height(int i) const;
    int root_index(const std::vector<int>& coords) const;  // -1 if not a root
    const std::vector<int>& degrees() const { return degrees_; }
    int coxeter_number() const { return degrees_.back(); }
    std::uint64_t group_order() const { return order_; }

    WeylElement identity() const;
    WeylElement generator(int s) const;  // 1-based
    WeylElement multiply(const WeylElement& u, const WeylElement& v) const;
    WeylElement inverse(const WeylElement& w) const;
    WeylElement from_word(const std::vector<int>& word) const;
    WeylElement power(const WeylElement& w, long k) const;
    WeylElement longest() const { return longest_; }

    int length(const WeylElement& w) const { return w.length; }
    bool is_left_descent(const WeylElement& w, int s) const;
    bool is_right_descent(const WeylElement& w, int s) const;
    std::vector<int> left_descents(const WeylElement& w) const;
    std::vector<int> right_descents(const WeylElement& w) const;
    std::vector<int> reduced_word(const WeylElement& w) const;  // lexicographically least
    int order(const WeylElement& w) const;

    // action on the span of the simple roots; column j is w(alpha_j)
    IntMatrix matrix(const WeylElement& w) const;
    Poly reflection_char_poly(const WeylElement& w) const;
    int fixed_space_dim(const WeylElement& w) const;
    bool is_elliptic(const WeylElement& w) const { return fixed_space_dim(w) == 0; }

private:
    RootSystem() = default;
    int count_length(const std::string& perm) const;

    std::string label_;
    int rank_ = 0;
    IntMatrix cartan_;
    int npos_ = 0;
    std::vector<std::vector<int>> roots_;
    std::vector<int> simple_;
    std::unordered_map<std::string, int> root_lookup_;
    std::vector<WeylElement> gens_;
    WeylElement longest_;
    std::vector<int> degrees_;
    std::uint64_t order_ = 0;
};

IntMatrix cartan_matrix(const std::string& label);

// Full enumeration of W (breadth first in the length).
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs);

    const RootSystem& root_system() const { return *rs_; }
    std::size_t size() const { return elems_.size(); }
    const WeylElement& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<WeylElement>& elements() const { return elems_; }
    int index(const WeylElement& w) const;

private:
    const RootSystem* rs_;
    std::vector<WeylElement> elems_;
    std::unordered_map<std::string, int> index_;
};

struct ConjugacyClassSet {
    std::vector<WeylElement> reps;
    std::vector<std::vector<int>> rep_words;
    std::vector<std::uint64_t> sizes;
    std::vector<int> class_of;  // indexed like WeylGroup elements
};

// Classes ordered by their representatives, the shortlex-least reduced word
// in the class, so every representative has minimal length.
ConjugacyClassSet conjugacy_classes(const WeylGroup& group);

long integer_rank(IntMatrix m);
Poly char_poly(const IntMatrix& m);

}  // namespace isoc
