#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "isoclinic/arith.hpp"
#include "isoclinic/chars.hpp"

namespace isoc::oracle {

using Mask = unsigned __int128;  // subsets of the q^n vectors of F_q^n
using Perm = std::vector<int>;  // 0-based images
using Mat = std::vector<std::vector<int>>;  // entries in [0, q)

// F_q^n for prime q <= 3 and n <= 4, with every complete flag enumerated.
class FlagSpace {
public:
    static std::shared_ptr<const FlagSpace> get(int n, int q);  // cached per (n, q)
    FlagSpace(int n, int q);

    int n() const { return n_; }
    int q() const { return q_; }
    int num_flags() const { return static_cast<int>(flags_.size()); }
    const std::vector<Mask>& flag(int f) const { return flags_[f]; }  // V_1 .. V_{n-1}

    // w with dim(F_i cap F'_j) = #{k <= j : w(k) <= i}
    Perm relative_position(int f, int g) const;
    int apply(const Mat& g, int f) const;  // index of g.F

    // flags at position s_i from f, i.e. differing only in the i-dimensional step
    const std::vector<int>& neighbours(int f, int s) const { return nbr_[s - 1][f]; }

    int vec_index(const std::vector<int>& v) const;
    std::vector<int> vec(int idx) const;

private:
    int dim_of(Mask m) const;
    Mask image(const Mat& g, Mask m) const;

    int n_, q_, nvec_;
    std::vector<std::vector<Mask>> flags_;
    std::vector<std::vector<std::vector<int>>> nbr_;
    std::vector<std::pair<std::vector<Mask>, int>> lookup_;  // sorted
};

int perm_length(const Perm& w);
std::vector<Perm> all_perms(int n);

// #{(F_1..F_{k+1}) : pos(F_i, F_{i+1}) = s_{word_i}, F_{k+1} = g F_1}
std::int64_t chain_count(const FlagSpace& fs, const Mat& g, const std::vector<int>& word);

Partition jordan_type(const Mat& u, int q);  // u unipotent over F_q
Partition nilpotent_jordan_type(const IntMatrix& nilpotent);  // over Q
Mat jordan_matrix(const Partition& mu, int q);  // canonical unipotent of type mu

Integer gl_order(int n, int q);
// |C_mu| by enumerating unipotent matrices (n <= 3, or n = 4 with q = 2)
std::int64_t class_size_enumerated(int n, int q, const Partition& mu);
bool class_size_enumerable(int n, int q);

Rational stack_count_bruteforce(int n, int q, const std::vector<int>& word, const Partition& mu);

}  // namespace isoc::oracle
