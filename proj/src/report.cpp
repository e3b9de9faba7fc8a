#include "isoclinic/report.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "isoclinic/coxeter.hpp"
#include "isoclinic/oracle.hpp"

namespace isoc {

namespace {

// Run fn(0..count-1) on up to `jobs` threads; results are written by index so
// the output does not depend on scheduling.
template <class Fn>
void parallel_for(int count, int jobs, Fn fn) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i; (i = next++) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

json coeffs(const Poly& p) {
    json a = json::array();
    for (auto& c : p.coeffs()) a.push_back(rational_str(c));
    return a;
}

json ratfunc_json(const RatFunc& f) { return json{{"num", coeffs(f.num())}, {"den", coeffs(f.den())}}; }

json header(const std::string& command, const TypeContext& ctx, const BraidSpec& spec) {
    return json{{"command", command}, {"type", ctx.label}, {"group", group_name(ctx)}, {"braid", spec.str()}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string group_name(const TypeContext& ctx) {
    if (ctx.gl) return "GL_" + std::to_string(ctx.n());
    return ctx.label + " adjoint";
}

json count_report(const TypeContext& ctx, const BraidSpec& spec) {
    auto table = count_table(ctx, spec);
    json r = header("count", ctx, spec);
    r["title"] = group_name(ctx) + ", " + spec.str();
    r["columns"] = {"class", "dim", "count"};
    r["rows"] = json::array();
    r["values"] = json::array();
    for (size_t c = 0; c < table.labels.size(); ++c) {
        r["rows"].push_back({display_label(table.labels[c]), std::to_string(ctx.ud.classes[c].dim),
                             table.values[c].factored()});
        json v = ratfunc_json(table.values[c]);
        v["class"] = table.labels[c];
        r["values"].push_back(v);
    }
    return r;
}

json interval_report(const TypeContext& ctx, const BraidSpec& spec) {
    auto v = minimal_class(ctx, spec);
    json r = header("interval", ctx, spec);
    r["title"] = group_name(ctx) + ", " + spec.str();
    r["nice"] = v.nice;
    r["shortcut"] = v.shortcut;
    std::string verdict;
    if (v.nice) {
        std::string lo = display_label(ctx.ud.classes[v.minimal].label);
        std::string hi = display_label(ctx.ud.classes[ctx.ud.top()].label);
        r["minimal"] = ctx.ud.classes[v.minimal].label;
        r["regular"] = ctx.ud.classes[ctx.ud.top()].label;
        verdict = "(" + lo + ", " + hi + ")";
    } else {
        r["witness"] = v.witness_str(ctx.ud);
        verdict = "not nice: " + v.witness_str(ctx.ud);
    }
    r["columns"] = {"braid", "interval", "via"};
    r["rows"] = json::array({json::array({spec.str(), verdict, v.shortcut ? "full twist" : "count"})});
    return r;
}

json count_min_report(const TypeContext& ctx, const Slope& slope) {
    auto spec = BraidSpec::springer(slope);
    auto v = minimal_class(ctx, spec);
    json r = header("count-min", ctx, spec);
    r["title"] = group_name(ctx) + ", " + spec.str();
    if (!v.nice) throw std::invalid_argument("slope " + slope.str() + " is not nice: " + v.witness_str(ctx.ud));
    RatFunc value = count_points(ctx, spec, v.minimal);
    r["minimal"] = ctx.ud.classes[v.minimal].label;
    r["value"] = ratfunc_json(value);
    r["columns"] = {"slope", "minimal class", "count"};
    r["rows"] = json::array(
        {json::array({slope.str(), display_label(ctx.ud.classes[v.minimal].label), value.factored()})});
    return r;
}

json springer_report(const std::string& label, int jobs) {
    RootSystem rs = RootSystem::build(label);
    std::vector<int> cand;
    for (int m = 1; m <= rs.num_roots(); ++m)
        if (rs.num_roots() % m == 0 || m == 1) cand.push_back(m);
    struct Row {
        bool regular = false;
        std::size_t found = 0;
        WeylElement w;
        bool chamber = false;
    };
    std::vector<Row> rows(cand.size());
    parallel_for(static_cast<int>(cand.size()), jobs, [&](int i) {
        auto roots = find_root_elements(rs, cand[i]);
        if (roots.empty()) return;
        rows[i].regular = true;
        rows[i].found = roots.size();
        rows[i].w = springer_element(rs, cand[i]);
        rows[i].chamber = springer_chamber_check(rs, rows[i].w, cand[i]);
    });
    json r{{"command", "springer"}, {"type", label}, {"title", label + " regular numbers"}};
    r["columns"] = {"m", "root element", "chamber", "elliptic", "root elements"};
    r["rows"] = json::array();
    r["regular"] = json::array();
    for (size_t i = 0; i < cand.size(); ++i) {
        if (!rows[i].regular) continue;
        const auto& w = rows[i].w;
        std::string word = w.length ? word_str(rs.reduced_word(w)) : "()";
        bool ell = rs.is_elliptic(w);
        r["regular"].push_back(cand[i]);
        r["rows"].push_back({std::to_string(cand[i]), word, rows[i].chamber ? "yes" : "no", ell ? "yes" : "no",
                             std::to_string(rows[i].found)});
    }
    return r;
}

json validate_report(const std::string& label, const std::string& dir) {
    auto wd = WeylData::get(label);
    auto ct = char_table_cached(label);
    UnipotentData ud = load_asset(label, dir);
    auto rep = validate_assets(ud, *wd, *ct);
    json r{{"command", "validate-data"}, {"type", label}, {"ok", rep.ok()}};
    r["title"] = label + " data asset: " + (rep.ok() ? "PASS" : "FAIL");
    r["columns"] = {"check", "result", "detail"};
    r["rows"] = json::array();
    for (auto& c : rep.checks) r["rows"].push_back({c.name, c.ok ? "PASS" : "FAIL", c.detail});
    return r;
}

json oracle_report(int n, int q, const BraidSpec& spec, int jobs) {
    auto ctx = make_context("A" + std::to_string(n - 1), true);
    auto table = count_table(*ctx, spec);
    BraidWord word = spec.braid(ctx->rs());
    int nc = static_cast<int>(table.labels.size());
    std::vector<Rational> brute(nc);
    oracle::FlagSpace::get(n, q);  // build once before fanning out
    parallel_for(nc, jobs, [&](int c) {
        brute[c] = oracle::stack_count_bruteforce(n, q, word, ctx->ud.classes[c].partition);
    });
    json r = header("oracle", *ctx, spec);
    r["q"] = q;
    r["title"] = group_name(*ctx) + " over F_" + std::to_string(q) + ", " + spec.str();
    r["columns"] = {"class", "brute force", "formula", "agree"};
    r["rows"] = json::array();
    bool all = true;
    for (int c = 0; c < nc; ++c) {
        Rational f = table.values[c].eval(q);
        bool ok = f == brute[c];
        all = all && ok;
        r["rows"].push_back({table.labels[c], rational_str(brute[c]), rational_str(f), ok ? "yes" : "NO"});
    }
    r["ok"] = all;
    return r;
}

json coxeter_report(int n, int jobs) {
    std::vector<int> ds;
    for (int d = 1; d < n; ++d)
        if (std::gcd(d, n) == 1) ds.push_back(d);
    std::vector<CoxeterCheck> checks(ds.size());
    parallel_for(static_cast<int>(ds.size()), jobs, [&](int i) { checks[i] = coxeter_check(n, ds[i]); });
    json r{{"command", "coxeter"}, {"type", "A" + std::to_string(n - 1)}, {"group", "GL_" + std::to_string(n)}};
    r["title"] = "GL_" + std::to_string(n) + " Coxeter connections";
    r["columns"] = {"d", "N_d type", "minimal class", "verdict"};
    r["rows"] = json::array();
    bool all = true;
    for (auto& c : checks) {
        all = all && c.agree;
        r["rows"].push_back({std::to_string(c.d), partition_str(c.jordan), c.minimal_label, c.agree ? "agree" : "DIFFER"});
    }
    r["ok"] = all;
    return r;
}

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if ((c & 0xC0) == 0x80) continue;
        // U+0300..U+036F are combining marks: CC 80..CD AF
        if ((c == 0xCC || (c == 0xCD && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) <= 0xAF))) continue;
        ++w;
    }
    return w;
}

std::string render(const json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    std::vector<std::string> cols;
    for (auto& c : report.at("columns")) cols.push_back(c.get<std::string>());
    std::vector<std::vector<std::string>> rows;
    for (auto& row : report.at("rows")) {
        std::vector<std::string> r;
        for (auto& x : row) r.push_back(x.get<std::string>());
        rows.push_back(r);
    }
    std::ostringstream os;
    if (format == "csv") {
        auto line = [&](const std::vector<std::string>& r) {
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
            os << "\n";
        };
        line(cols);
        for (auto& r : rows) line(r);
        return os.str();
    }
    if (format != "table") throw std::invalid_argument("unknown format " + format);
    std::vector<std::size_t> width(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) width[i] = display_width(cols[i]);
    for (auto& r : rows)
        for (size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    auto line = [&](const std::vector<std::string>& r) {
        std::string out;
        for (size_t i = 0; i < r.size(); ++i) {
            out += r[i];
            if (i + 1 < r.size()) out += std::string(width[i] - display_width(r[i]) + 2, ' ');
        }
        os << out << "\n";
    };
    if (report.contains("title")) os << report["title"].get<std::string>() << "\n";
    line(cols);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (auto& r : rows) line(r);
    return os.str();
}

}  // namespace isoc
