#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isoclinic/unipotent.hpp"

namespace isoc {

// Everything needed to evaluate counts for one group.
struct TypeContext {
    std::string label;
    bool gl = false;
    std::shared_ptr<const WeylData> wd;
    std::shared_ptr<const CharacterTable> ct;
    UnipotentData ud;
    std::vector<int> data_row;  // character table row -> row of ud.values

    const RootSystem& rs() const { return wd->rs(); }
    int n() const { return rs().rank() + 1; }  // type A only
};

// Type A builds its data; other types load and validate an asset.
std::shared_ptr<const TypeContext> make_context(const std::string& label, bool gl = false,
                                                const std::string& dir = "");

struct BraidSpec {
    std::optional<Slope> slope;  // Springer power of a canonical root element
    BraidWord word;
    int power = 1;

    static BraidSpec springer(const Slope& s);
    static BraidSpec general(const BraidWord& w, int p);
    BraidWord braid(const RootSystem& rs) const;
    std::string str() const;
};

struct CountResult {
    std::vector<std::string> labels;
    std::vector<RatFunc> values;
};

// sum_E tr(beta, E_q) T_{E,C} / |G^F| for one class
RatFunc count_points(const TypeContext& ctx, const BraidSpec& spec, int cls);
CountResult count_table(const TypeContext& ctx, const BraidSpec& spec);

// Hecke traces of the braid, one per character table row.
std::vector<RatFunc> braid_traces(const TypeContext& ctx, const BraidSpec& spec);

struct NicenessVerdict {
    bool nice = false;
    int minimal = -1;  // class index when nice
    std::vector<int> support;
    bool shortcut = false;  // decided by the full twist
    std::vector<int> witness_low;  // minimal support elements
    int witness_hole = -1;  // a class below them (or above the minimum) with zero count
    std::string witness_str(const UnipotentData& ud) const;
};

NicenessVerdict verdict_from_table(const TypeContext& ctx, const CountResult& table);
NicenessVerdict minimal_class(const TypeContext& ctx, const BraidSpec& spec);
RatFunc count_at_minimal(const TypeContext& ctx, const Slope& slope);
bool is_rigid(const TypeContext& ctx, const Slope& slope);

}  // namespace isoc
