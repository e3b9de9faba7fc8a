#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "isoclinic/braid.hpp"
#include "isoclinic/rootweyl.hpp"

namespace isoc {

using Partition = std::vector<int>;

// Everything about W that the count formula needs, built once per type.
class WeylData {
public:
    static std::shared_ptr<const WeylData> get(const std::string& label);  // cached
    explicit WeylData(const std::string& label);

    const RootSystem& rs() const { return rs_; }
    const WeylGroup& group() const { return *group_; }
    const ConjugacyClassSet& classes() const { return classes_; }
    int num_classes() const { return static_cast<int>(classes_.reps.size()); }
    int class_of(const WeylElement& w) const { return classes_.class_of[group_->index(w)]; }

private:
    RootSystem rs_;
    std::unique_ptr<WeylGroup> group_;
    ConjugacyClassSet classes_;
};

struct CharacterTable {
    std::vector<std::string> keys;  // canonical irrep keys, "dim_b" plus value tags
    std::vector<int> dims;
    std::vector<int> b;
    std::vector<Partition> partitions;  // type A only: the partition of each irrep
    std::vector<std::vector<long>> values;  // irreps x classes
    std::vector<Poly> fake_degrees;

    int size() const { return static_cast<int>(keys.size()); }
    int index(const std::string& key) const;  // throws on unknown key
};

// Type A by Murnaghan-Nakayama, otherwise by Dixon-Schneider over a prime
// field with an integer lift.  Rows sorted by (dim, b, key).
CharacterTable char_table(const WeylData& wd);
std::shared_ptr<const CharacterTable> char_table_cached(const std::string& label);

std::vector<std::vector<long>> dixon_schneider(const WeylData& wd);
long murnaghan_nakayama(const Partition& lambda, const Partition& cycle_type);
Partition cycle_type(const RootSystem& rs, const WeylElement& w);  // type A
std::vector<Partition> partitions_of(int n);  // reverse lexicographic, (n) first
std::string partition_str(const Partition& p);
Partition conjugate(const Partition& p);

std::vector<Poly> fake_degrees(const WeylData& wd, const std::vector<std::vector<long>>& values);

struct Content {
    int a = 0;
    int A = 0;
    int c = 0;  // |Phi| - a - A
};

// q^(nu c(E)) chi_E(w^d); zero when the character vanishes
struct SpringerTrace {
    long coeff = 0;
    int exponent = 0;
    RatFunc value() const;
};

SpringerTrace springer_trace(const WeylData& wd, const CharacterTable& ct, const Content& content,
                             int irrep, const WeylElement& w, const Slope& slope);

// Seminormal matrices of the type A Hecke algebra with T_s^2 = (q-1)T_s + q,
// specialised at q = q0.  Basis: standard tableaux of the shape.
class SeminormalRep {
public:
    SeminormalRep(const Partition& shape, const Rational& q0);
    int dim() const { return static_cast<int>(tableaux_.size()); }
    using Matrix = std::vector<std::vector<Rational>>;
    const Matrix& generator(int s) const { return gens_.at(s - 1); }
    Matrix word(const BraidWord& w) const;

private:
    std::vector<std::vector<int>> tableaux_;  // entry -> row for each tableau
    std::vector<Matrix> gens_;
};

// tr(T_word, E_q) in type A as a polynomial in q
Poly hecke_trace_typeA(const Partition& shape, int n, const BraidWord& word);

}  // namespace isoc
