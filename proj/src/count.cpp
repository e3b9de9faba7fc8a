#include "isoclinic/count.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace isoc {

std::shared_ptr<const TypeContext> make_context(const std::string& label, bool gl, const std::string& dir) {
    static std::mutex mu;
    static std::map<std::tuple<std::string, bool, std::string>, std::shared_ptr<const TypeContext>> cache;
    auto key = std::make_tuple(label, gl, data_dir(dir));
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto ctx = std::make_shared<TypeContext>();
    ctx->label = label;
    ctx->gl = gl;
    ctx->wd = WeylData::get(label);
    if (gl && ctx->wd->rs().family() != 'A') throw std::invalid_argument("--gl applies to type A only");
    ctx->ct = char_table_cached(label);
    if (ctx->wd->rs().family() == 'A') {
        ctx->ud = type_a_data(ctx->wd->rs().rank() + 1, gl);
    } else {
        try {
            ctx->ud = load_asset(label, dir);
        } catch (const TierUnavailable&) {
            throw;
        } catch (const std::exception& e) {
            throw TierUnavailable("data asset for " + label + " is malformed: " + e.what());
        }
        auto report = validate_assets(ctx->ud, *ctx->wd, *ctx->ct);
        if (!report.ok()) {
            std::string failed;
            for (auto& c : report.checks)
                if (!c.ok) failed += "\n  " + c.name + (c.detail.empty() ? "" : ": " + c.detail);
            throw TierUnavailable("data asset for " + label + " failed validation:" + failed);
        }
    }
    for (int e = 0; e < ctx->ct->size(); ++e) ctx->data_row.push_back(ctx->ud.irrep_index(ctx->ct->keys[e]));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, ctx).first->second;
}

BraidSpec BraidSpec::springer(const Slope& s) {
    BraidSpec b;
    b.slope = s;
    return b;
}

BraidSpec BraidSpec::general(const BraidWord& w, int p) {
    if (p < 0) throw std::invalid_argument("power must be non-negative");
    BraidSpec b;
    b.word = w;
    b.power = p;
    return b;
}

BraidWord BraidSpec::braid(const RootSystem& rs) const {
    if (slope) return springer_braid(rs, *slope);
    check_word(rs, word);
    return isoc::power(word, power);
}

std::string BraidSpec::str() const {
    if (slope) return "slope " + slope->str();
    return "[" + word_str(word) + "]^" + std::to_string(power);
}

std::vector<RatFunc> braid_traces(const TypeContext& ctx, const BraidSpec& spec) {
    const CharacterTable& ct = *ctx.ct;
    std::vector<RatFunc> out;
    if (spec.slope) {
        WeylElement w = springer_element(ctx.rs(), spec.slope->m);
        for (int e = 0; e < ct.size(); ++e) {
            const Content& c = ctx.ud.irreps[ctx.data_row[e]].content;
            out.push_back(springer_trace(*ctx.wd, ct, c, e, w, *spec.slope).value());
        }
        return out;
    }
    check_word(ctx.rs(), spec.word);
    if (ctx.rs().family() != 'A') {
        // a power of the lift of a root element is handled by the Springer trace
        const RootSystem& rs = ctx.rs();
        WeylElement w = rs.from_word(spec.word);
        int m = w.length > 0 ? rs.order(w) : 0;
        if (w.length == static_cast<int>(spec.word.size()) && m > 1 && rs.num_roots() == m * w.length &&
            spec.power > 0 && std::gcd(spec.power, m) == 1 &&
            normal_form(rs, power(spec.word, m)).simples == normal_form(rs, full_twist(rs)).simples) {
            Slope sl(spec.power, m);
            for (int e = 0; e < ct.size(); ++e) {
                const Content& c = ctx.ud.irreps[ctx.data_row[e]].content;
                out.push_back(springer_trace(*ctx.wd, ct, c, e, w, sl).value());
            }
            return out;
        }
        throw TierUnavailable("general braid words in type " + ctx.label +
                              " need the Hecke character table, which is not bundled");
    }
    BraidWord b = power(spec.word, spec.power);
    for (int e = 0; e < ct.size(); ++e) out.push_back(RatFunc(hecke_trace_typeA(ct.partitions[e], ctx.n(), b)));
    return out;
}

namespace {

RatFunc assemble(const TypeContext& ctx, const std::vector<RatFunc>& traces, int cls) {
    RatFunc s;
    for (size_t e = 0; e < traces.size(); ++e) {
        if (traces[e].is_zero()) continue;
        const Poly& t = ctx.ud.values[ctx.data_row[e]][cls];
        if (t.is_zero()) continue;
        s += traces[e] * RatFunc(t);
    }
    return s / RatFunc(ctx.ud.group_order);
}

}  // namespace

RatFunc count_points(const TypeContext& ctx, const BraidSpec& spec, int cls) {
    if (cls < 0 || cls >= static_cast<int>(ctx.ud.classes.size())) throw std::out_of_range("class index");
    return assemble(ctx, braid_traces(ctx, spec), cls);
}

CountResult count_table(const TypeContext& ctx, const BraidSpec& spec) {
    auto traces = braid_traces(ctx, spec);
    CountResult r;
    for (size_t c = 0; c < ctx.ud.classes.size(); ++c) {
        r.labels.push_back(ctx.ud.classes[c].label);
        r.values.push_back(assemble(ctx, traces, static_cast<int>(c)));
    }
    return r;
}

std::string NicenessVerdict::witness_str(const UnipotentData& ud) const {
    if (nice) return "";
    std::vector<int> low = witness_low;
    std::sort(low.begin(), low.end(), [&](int a, int b) {
        if (ud.classes[a].dim != ud.classes[b].dim) return ud.classes[a].dim > ud.classes[b].dim;
        return a < b;
    });
    std::string s = "{";
    for (size_t i = 0; i < low.size(); ++i) s += (i ? ", " : "") + display_label(ud.classes[low[i]].label);
    s += "}";
    if (witness_hole >= 0) s += " vs " + display_label(ud.classes[witness_hole].label);
    return s;
}

NicenessVerdict verdict_from_table(const TypeContext& ctx, const CountResult& table) {
    const UnipotentData& ud = ctx.ud;
    int nc = static_cast<int>(ud.classes.size());
    NicenessVerdict v;
    std::vector<bool> in(nc, false);
    for (int c = 0; c < nc; ++c)
        if (!table.values[c].is_zero()) {
            in[c] = true;
            v.support.push_back(c);
        }
    for (int c : v.support) {
        bool minimal = true;
        for (int d : v.support)
            if (d != c && ud.le[d][c]) minimal = false;
        if (minimal) v.witness_low.push_back(c);
    }
    if (v.witness_low.size() == 1) {
        int m = v.witness_low[0];
        int hole = -1;
        for (int c = 0; c < nc; ++c)
            if (ud.le[m][c] && !in[c] && (hole < 0 || ud.classes[c].dim < ud.classes[hole].dim)) hole = c;
        if (hole < 0) {
            v.nice = true;
            v.minimal = m;
            v.witness_low.clear();
            return v;
        }
        v.witness_hole = hole;
        return v;
    }
    // several minimal elements: report the largest zero class below all of them
    for (int c = 0; c < nc; ++c) {
        if (in[c]) continue;
        bool below = !v.witness_low.empty();
        for (int m : v.witness_low) below = below && ud.le[c][m];
        if (below && (v.witness_hole < 0 || ud.classes[c].dim > ud.classes[v.witness_hole].dim)) v.witness_hole = c;
    }
    return v;
}

NicenessVerdict minimal_class(const TypeContext& ctx, const BraidSpec& spec) {
    bool past_one = spec.slope ? spec.slope->d > spec.slope->m : true;
    if (past_one && contains_full_twist(ctx.rs(), spec.braid(ctx.rs()))) {
        NicenessVerdict v;
        v.nice = true;
        v.shortcut = true;
        v.minimal = ctx.ud.bottom();
        for (int c = 0; c < static_cast<int>(ctx.ud.classes.size()); ++c) v.support.push_back(c);
        return v;
    }
    return verdict_from_table(ctx, count_table(ctx, spec));
}

RatFunc count_at_minimal(const TypeContext& ctx, const Slope& slope) {
    auto spec = BraidSpec::springer(slope);
    auto v = minimal_class(ctx, spec);
    if (!v.nice) throw std::logic_error("slope " + slope.str() + " is not nice: " + v.witness_str(ctx.ud));
    return count_points(ctx, spec, v.minimal);
}

bool is_rigid(const TypeContext& ctx, const Slope& slope) {
    if (!ctx.rs().is_elliptic(springer_element(ctx.rs(), slope.m))) return false;
    return count_at_minimal(ctx, slope).is_one();
}

}  // namespace isoc
