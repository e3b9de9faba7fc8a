#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "isoclinic/chars.hpp"

namespace isoc {

// A data asset or computational tier is missing or unusable (CLI exit 2).
class TierUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct UnipotentClass {
    std::string label;  // machine form: "A~1" for the short-root A1; partitions in type A
    int dim = 0;
    Poly size;  // |C^F| as a polynomial in q
    Partition partition;  // type A only
};

struct IrrepRecord {
    std::string key;
    int dim = 0;
    int b = 0;
    Content content;
};

// Group-side data for one type: classes, closure order and the class totals
// T[E][C] = sum over g in C^F of rho_E(g).
struct UnipotentData {
    std::string type;
    bool gl = false;  // type A as GL_n instead of the adjoint group
    int n = 0;  // GL_n size when gl
    std::vector<UnipotentClass> classes;  // ascending dimension, ties by label
    std::vector<std::pair<int, int>> hasse;  // (lower, upper)
    std::vector<std::vector<bool>> le;  // le[a][b]: class a lies in the closure of b
    std::vector<IrrepRecord> irreps;
    std::vector<std::vector<Poly>> values;  // irreps x classes
    Poly group_order;
    int schema_version = 1;

    int class_index(const std::string& label) const;  // accepts "Ã1" or "A~1"
    int irrep_index(const std::string& key) const;
    int bottom() const;  // the trivial class
    int top() const;  // the regular class
    void close_order();  // le from hasse
};

// |G^F| for the adjoint group of the root system, or GL_n
Poly group_order_poly(const RootSystem& rs, bool gl);

std::vector<Partition> dominance_sorted(int n);
bool dominates(const Partition& a, const Partition& b);  // a >= b
int n_statistic(const Partition& p);  // sum (i-1) p_i
Poly kostka_foulkes(const Partition& lambda, const Partition& mu);  // sum over SSYT of t^charge
long charge(const std::vector<int>& word);
Poly gl_class_size(const Partition& mu);  // |C_mu| in GL_n(q)

UnipotentData type_a_data(int n, bool gl);

// Data directory: explicit argument, else $ISOCLINIC_DATA, else the build-time default.
std::string data_dir(const std::string& override_dir = "");
UnipotentData load_asset(const std::string& type, const std::string& dir = "");
UnipotentData parse_asset(const std::string& json_text);
std::string display_label(const std::string& label);  // "A~1" -> "Ã1" (precomposed)

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};
struct ValidationReport {
    std::string type;
    std::vector<CheckResult> checks;
    bool ok() const;
};

ValidationReport validate_assets(const UnipotentData& ud, const WeylData& wd, const CharacterTable& ct);

}  // namespace isoc
