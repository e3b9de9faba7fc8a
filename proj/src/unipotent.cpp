#include "isoclinic/unipotent.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef ISOCLINIC_DEFAULT_DATA_DIR
#define ISOCLINIC_DEFAULT_DATA_DIR "data"
#endif

namespace isoc {

using json = nlohmann::json;

namespace {

std::string machine_label(const std::string& label) {
    // display forms: precomposed U+00C3 for A, else a combining tilde
    std::string out;
    const std::string tilde = "\xCC\x83", a_tilde = "\xC3\x83";
    for (size_t i = 0; i < label.size(); ++i) {
        if (label.compare(i, a_tilde.size(), a_tilde) == 0) {
            out += "A~";
            i += a_tilde.size() - 1;
        } else if (label.compare(i, tilde.size(), tilde) == 0) {
            out += '~';
            i += tilde.size() - 1;
        } else {
            out += label[i];
        }
    }
    return out;
}

}  // namespace

std::string display_label(const std::string& label) {
    std::string out;
    for (char c : label) {
        if (c != '~') {
            out += c;
        } else if (!out.empty() && out.back() == 'A') {
            out.pop_back();
            out += "\xC3\x83";  // U+00C3
        } else {
            out += "\xCC\x83";  // combining tilde
        }
    }
    return out;
}

int UnipotentData::class_index(const std::string& label) const {
    std::string m = machine_label(label);
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == m) return static_cast<int>(i);
    throw std::invalid_argument("unknown unipotent class: " + label);
}

int UnipotentData::irrep_index(const std::string& key) const {
    for (size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].key == key) return static_cast<int>(i);
    throw std::invalid_argument("unknown irreducible: " + key);
}

int UnipotentData::bottom() const {
    for (size_t a = 0; a < classes.size(); ++a) {
        bool min = true;
        for (size_t b = 0; b < classes.size(); ++b) min = min && le[a][b];
        if (min) return static_cast<int>(a);
    }
    throw std::logic_error("closure order has no minimum");
}

int UnipotentData::top() const {
    for (size_t b = 0; b < classes.size(); ++b) {
        bool max = true;
        for (size_t a = 0; a < classes.size(); ++a) max = max && le[a][b];
        if (max) return static_cast<int>(b);
    }
    throw std::logic_error("closure order has no maximum");
}

void UnipotentData::close_order() {
    size_t n = classes.size();
    le.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) le[i][i] = true;
    for (auto [a, b] : hasse) le[a][b] = true;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (le[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (le[k][j]) le[i][j] = true;
}

Poly group_order_poly(const RootSystem& rs, bool gl) {
    Poly g(1);
    if (gl) {
        if (rs.family() != 'A') throw std::invalid_argument("GL_n semantics need type A");
        int n = rs.rank() + 1;
        g = Poly::monomial(n * (n - 1) / 2);
        for (int i = 1; i <= n; ++i) g *= Poly::monomial(i) - Poly(1);
        return g;
    }
    g = Poly::monomial(rs.num_positive());
    for (int d : rs.degrees()) g *= Poly::monomial(d) - Poly(1);
    return g;
}

// ------------------------------------------------------------- type A

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

int n_statistic(const Partition& p) {
    int s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

long charge(const std::vector<int>& word) {
    // standard subwords: read leftwards cyclically picking 1, 2, ...; the
    // index goes up each time the search wraps around
    std::vector<bool> used(word.size(), false);
    size_t left = word.size();
    long total = 0;
    while (left) {
        int pos = static_cast<int>(word.size());
        int letter = 1, index = 0;
        for (;;) {
            int found = -1;
            bool wrapped = false;
            for (int step = 1; step <= static_cast<int>(word.size()); ++step) {
                int p = pos - step;
                if (p < 0) {
                    p += static_cast<int>(word.size());
                    wrapped = true;
                }
                if (!used[p] && word[p] == letter) {
                    found = p;
                    break;
                }
            }
            if (found < 0) break;
            if (letter > 1 && wrapped) ++index;
            total += index;
            used[found] = true;
            --left;
            pos = found;
            ++letter;
        }
        if (letter == 1) throw std::invalid_argument("charge needs partition content");
    }
    return total;
}

Poly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (n != std::accumulate(mu.begin(), mu.end(), 0)) throw std::invalid_argument("size mismatch");
    Poly k;
    if (!dominates(lambda, mu)) return k;
    // fill row by row, cell by cell
    std::vector<std::vector<int>> t(lambda.size());
    for (size_t r = 0; r < lambda.size(); ++r) t[r].assign(lambda[r], 0);
    std::vector<int> left = mu;
    std::function<void(size_t, int)> rec = [&](size_t r, int c) {
        if (r == lambda.size()) {
            std::vector<int> word;
            for (size_t i = lambda.size(); i-- > 0;) word.insert(word.end(), t[i].begin(), t[i].end());
            k += Poly::monomial(static_cast<int>(charge(word)));
            return;
        }
        if (c == lambda[r]) {
            rec(r + 1, 0);
            return;
        }
        int lo = c > 0 ? t[r][c - 1] : 1;
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(mu.size()); ++v) {
            if (!left[v - 1]) continue;
            --left[v - 1];
            t[r][c] = v;
            rec(r, c + 1);
            ++left[v - 1];
        }
    };
    rec(0, 0);
    return k;
}

Poly gl_class_size(const Partition& mu) {
    int n = std::accumulate(mu.begin(), mu.end(), 0);
    Partition mc = conjugate(mu);
    int sq = 0;
    for (int x : mc) sq += x * x;
    // a_mu = q^{sum mu'^2} prod_i prod_{k <= m_i} (1 - q^-k)
    std::map<int, int> mult;
    for (int x : mu) mult[x]++;
    int shift = sq;
    Poly cent(1);
    for (auto [part, m] : mult)
        for (int k = 1; k <= m; ++k) {
            cent *= Poly::monomial(k) - Poly(1);
            shift -= k;
        }
    cent = cent.shifted(shift);
    Poly g = Poly::monomial(n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) g *= Poly::monomial(i) - Poly(1);
    return Poly::exact_div(g, cent);
}

std::vector<Partition> dominance_sorted(int n) {
    auto ps = partitions_of(n);
    std::vector<std::pair<int, Partition>> keyed;
    for (auto& p : ps) {
        int sq = 0;
        for (int x : conjugate(p)) sq += x * x;
        keyed.emplace_back(n * n - sq, p);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return partition_str(a.second) < partition_str(b.second);
    });
    std::vector<Partition> out;
    for (auto& [d, p] : keyed) out.push_back(p);
    return out;
}

UnipotentData type_a_data(int n, bool gl) {
    if (n < 2 || n > 7) throw std::invalid_argument("type A data needs 2 <= n <= 7");
    UnipotentData ud;
    ud.type = "A" + std::to_string(n - 1);
    ud.gl = gl;
    ud.n = n;
    auto wd = WeylData::get(ud.type);
    auto ct = char_table_cached(ud.type);
    ud.group_order = group_order_poly(wd->rs(), gl);
    for (auto& mu : dominance_sorted(n)) {
        UnipotentClass c;
        c.label = partition_str(mu);
        c.partition = mu;
        int sq = 0;
        for (int x : conjugate(mu)) sq += x * x;
        c.dim = n * n - sq;
        c.size = gl_class_size(mu);
        ud.classes.push_back(c);
    }
    size_t nc = ud.classes.size();
    for (size_t a = 0; a < nc; ++a)
        for (size_t b = 0; b < nc; ++b) {
            if (a == b || !dominates(ud.classes[b].partition, ud.classes[a].partition)) continue;
            bool cover = true;
            for (size_t c = 0; c < nc && cover; ++c)
                if (c != a && c != b && dominates(ud.classes[c].partition, ud.classes[a].partition) &&
                    dominates(ud.classes[b].partition, ud.classes[c].partition))
                    cover = false;
            if (cover) ud.hasse.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    ud.close_order();
    int npos = wd->rs().num_positive();
    for (int e = 0; e < ct->size(); ++e) {
        IrrepRecord r;
        r.key = ct->keys[e];
        r.dim = ct->dims[e];
        r.b = ct->b[e];
        r.content.a = ct->fake_degrees[e].valuation();
        r.content.A = ct->fake_degrees[e].degree();
        r.content.c = 2 * npos - r.content.a - r.content.A;
        ud.irreps.push_back(r);
        std::vector<Poly> row;
        const Partition& lam = ct->partitions[e];
        for (auto& c : ud.classes) {
            // |C| q^{n(mu)} K(1/q)
            Poly k = kostka_foulkes(lam, c.partition);
            int top = n_statistic(c.partition);
            std::vector<Rational> rev(top + 1, Rational(0));
            for (int i = 0; i <= k.degree(); ++i) {
                if (i > top) throw std::logic_error("Kostka-Foulkes degree exceeds n(mu)");
                rev[top - i] = k.coeff(i);
            }
            row.push_back(c.size * Poly(rev));
        }
        ud.values.push_back(row);
    }
    return ud;
}

// -------------------------------------------------------------- assets

std::string data_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("ISOCLINIC_DATA"); env && *env) return env;
    return ISOCLINIC_DEFAULT_DATA_DIR;
}

namespace {

Rational json_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer or \"n/d\" string");
}

Poly json_poly(const json& v) {
    if (!v.is_array()) throw std::invalid_argument("polynomial must be a coefficient list");
    std::vector<Rational> c;
    for (auto& x : v) c.push_back(json_rational(x));
    return Poly(c);
}

}  // namespace

UnipotentData parse_asset(const std::string& text) {
    json j = json::parse(text);
    UnipotentData ud;
    ud.type = j.at("type").get<std::string>();
    ud.schema_version = j.at("schema_version").get<int>();
    if (ud.schema_version != 1) throw std::invalid_argument("unsupported schema version");
    for (auto& r : j.at("irreps")) {
        IrrepRecord rec;
        rec.key = r.at("key").get<std::string>();
        rec.dim = r.at("dim").get<int>();
        rec.b = r.at("b").get<int>();
        rec.content.a = r.at("a").get<int>();
        rec.content.A = r.at("A").get<int>();
        ud.irreps.push_back(rec);
    }
    for (auto& c : j.at("classes")) {
        UnipotentClass uc;
        uc.label = c.at("label").get<std::string>();
        uc.dim = c.at("dim").get<int>();
        uc.size = json_poly(c.at("size"));
        ud.classes.push_back(uc);
    }
    std::map<std::string, int> idx;
    for (size_t i = 0; i < ud.classes.size(); ++i)
        if (!idx.emplace(ud.classes[i].label, static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate class label " + ud.classes[i].label);
    for (auto& e : j.at("hasse")) {
        auto lo = e.at(0).get<std::string>(), hi = e.at(1).get<std::string>();
        if (!idx.count(lo) || !idx.count(hi)) throw std::invalid_argument("Hasse edge names an unknown class");
        ud.hasse.emplace_back(idx[lo], idx[hi]);
    }
    auto& vals = j.at("values");
    if (vals.size() != ud.irreps.size()) throw std::invalid_argument("value table has the wrong number of rows");
    for (auto& row : vals) {
        if (row.size() != ud.classes.size()) throw std::invalid_argument("value table row has the wrong length");
        std::vector<Poly> r;
        for (auto& p : row) r.push_back(json_poly(p));
        ud.values.push_back(r);
    }
    ud.close_order();
    return ud;
}

UnipotentData load_asset(const std::string& type, const std::string& dir) {
    std::string path = data_dir(dir) + "/" + type + ".json";
    std::ifstream in(path);
    if (!in) throw TierUnavailable("missing data asset " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    UnipotentData ud = parse_asset(ss.str());
    if (ud.type != type) throw std::invalid_argument("asset " + path + " is for type " + ud.type);
    auto rs = RootSystem::build(type);
    ud.group_order = group_order_poly(rs, false);
    int phi = rs.num_roots();
    for (auto& r : ud.irreps) r.content.c = phi - r.content.a - r.content.A;
    return ud;
}

// ---------------------------------------------------------- validation

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

ValidationReport validate_assets(const UnipotentData& ud, const WeylData& wd, const CharacterTable& ct) {
    ValidationReport rep;
    rep.type = ud.type;
    auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.checks.push_back({name, ok, detail});
    };
    const RootSystem& rs = wd.rs();
    int nc = static_cast<int>(ud.classes.size());
    int ni = static_cast<int>(ud.irreps.size());

    // irreducibles line up with the character table
    {
        std::string bad;
        if (ni != ct.size()) bad = "irrep count " + std::to_string(ni) + " vs " + std::to_string(ct.size());
        for (auto& r : ud.irreps) {
            int e = -1;
            for (int k = 0; k < ct.size(); ++k)
                if (ct.keys[k] == r.key) e = k;
            if (e < 0)
                bad += " unknown key " + r.key;
            else if (ct.dims[e] != r.dim || ct.b[e] != r.b)
                bad += " dim/b mismatch on " + r.key;
        }
        add("irrep keys match the character table", bad.empty(), bad);
    }
    {
        std::string bad;
        for (auto& r : ud.irreps) {
            auto [a, A, c] = r.content;
            if (!(0 <= a && a <= r.b && r.b <= A && A <= rs.num_positive())) bad += " " + r.key;
        }
        add("0 <= a <= b <= A <= N", bad.empty(), bad);
    }
    int unit = -1;
    for (int c = 0; c < nc; ++c)
        if (ud.classes[c].dim == 0) unit = c;
    add("trivial class present", unit >= 0);
    if (unit >= 0) {
        std::string bad;
        for (int e = 0; e < ni; ++e) {
            const Poly& deg = ud.values[e][unit];
            if (deg.is_zero() || deg.valuation() != ud.irreps[e].content.a || deg.degree() != ud.irreps[e].content.A)
                bad += " " + ud.irreps[e].key;
        }
        add("identity column has valuation a and degree A", bad.empty(), bad);
    }
    {
        int triv = -1;
        for (int e = 0; e < ni; ++e)
            if (ud.irreps[e].dim == 1 && ud.irreps[e].b == 0) triv = e;
        std::string bad;
        if (triv < 0)
            bad = "no trivial irrep";
        else
            for (int c = 0; c < nc; ++c)
                if (ud.values[triv][c] != ud.classes[c].size) bad += " " + ud.classes[c].label;
        add("trivial row equals class sizes", bad.empty(), bad);
    }
    {
        Poly total;
        for (auto& c : ud.classes) total += c.size;
        int expect = ud.gl ? (ud.n * ud.n - ud.n) : 2 * rs.num_positive();
        add("class sizes sum to q^(dim G - rank)", total == Poly::monomial(expect), total.str());
    }
    {
        std::string bad;
        for (auto& c : ud.classes) {
            Poly quo, rem;
            Poly::divmod(ud.group_order, c.size, quo, rem);
            if (!rem.is_zero() || c.size.degree() != c.dim) bad += " " + c.label;
        }
        add("class sizes divide |G| with degree dim C", bad.empty(), bad);
    }
    {
        std::string bad;
        for (int e = 0; e < ni; ++e)
            for (int c = 0; c < nc; ++c)
                for (int q0 : {2, 3, 4, 5, 7}) {
                    Rational v = ud.values[e][c].eval(q0);
                    if (v.get_den() != 1) bad += " " + ud.irreps[e].key + "@" + ud.classes[c].label;
                }
        add("class totals are integer valued", bad.empty(), bad);
    }
    {
        std::string bad;
        for (auto [a, b] : ud.hasse)
            if (ud.classes[a].dim >= ud.classes[b].dim) bad += " " + ud.classes[a].label + "<" + ud.classes[b].label;
        for (int a = 0; a < nc; ++a)
            for (int b = 0; b < nc; ++b)
                if (a != b && ud.le[a][b] && ud.le[b][a]) bad += " cycle";
        add("closure order: dimension increases along edges", bad.empty(), bad);
        bool has_min = false, has_max = false;
        try {
            has_min = ud.classes[ud.bottom()].dim == 0;
            has_max = ud.classes[ud.top()].dim == 2 * rs.num_positive();
        } catch (const std::logic_error&) {
        }
        add("closure order has a minimum and a regular maximum", has_min && has_max);
    }
    {
        static const std::map<std::string, std::vector<std::string>> expected = {
            {"G2", {"1", "A1", "A~1", "G2(a1)", "G2"}},
            {"F4", {"1", "A1", "A~1", "A1+A~1", "A~2", "A2", "A2+A~1", "A~2+A1", "B2", "C3(a1)", "F4(a3)", "C3",
                    "B3", "F4(a2)", "F4(a1)", "F4"}},
        };
        auto it = expected.find(ud.type);
        if (it != expected.end()) {
            std::vector<std::string> got;
            for (auto& c : ud.classes) got.push_back(c.label);
            add("class labels", got == it->second);
        }
    }
    return rep;
}

}  // namespace isoc
