#include "doctest.h"

#include <fstream>
#include <functional>
#include <sstream>

#include "isoclinic/unipotent.hpp"
#include "json.hpp"

using namespace isoc;

namespace {

// semistandard tableaux of shape lambda and content mu, counted by brute force
long kostka_number(const Partition& lambda, const Partition& mu) {
    std::vector<std::vector<int>> t;
    for (int r : lambda) t.push_back(std::vector<int>(r, 0));
    std::vector<std::pair<int, int>> cells;
    for (size_t r = 0; r < lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.push_back({static_cast<int>(r), c});
    std::vector<int> left(mu.begin(), mu.end());
    long count = 0;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
            if (!left[v - 1]) continue;
            if (c > 0 && t[r][c - 1] > v) continue;
            if (r > 0 && t[r - 1][c] >= v) continue;
            t[r][c] = v;
            --left[v - 1];
            rec(k + 1);
            ++left[v - 1];
        }
    };
    rec(0);
    return count;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool check_passes(const ValidationReport& r, const std::string& name) {
    for (auto& c : r.checks)
        if (c.name == name) return c.ok;
    FAIL("no check named " << name);
    return false;
}

}  // namespace

TEST_CASE("dominance order") {
    CHECK(dominates({3}, {2, 1}));
    CHECK(dominates({2, 1}, {1, 1, 1}));
    CHECK_FALSE(dominates({2, 2, 2}, {3, 1, 1, 1}));
    CHECK_FALSE(dominates({3, 1, 1, 1}, {2, 2, 2}));
    CHECK(n_statistic({2, 1}) == 1);
    CHECK(n_statistic({1, 1, 1}) == 3);
}

TEST_CASE("Kostka-Foulkes polynomials") {
    Poly t = Poly::q();
    CHECK(kostka_foulkes({2, 1}, {1, 1, 1}) == t + t * t);
    CHECK(kostka_foulkes({3}, {1, 1, 1}) == Poly::monomial(3));
    CHECK(kostka_foulkes({1, 1, 1}, {1, 1, 1}) == Poly(1));
    CHECK(kostka_foulkes({2, 2}, {2, 1, 1}) == t);
    CHECK(kostka_foulkes({2, 1}, {3}).is_zero());
    for (int n = 2; n <= 5; ++n)
        for (auto& lam : partitions_of(n))
            for (auto& mu : partitions_of(n)) {
                Poly k = kostka_foulkes(lam, mu);
                CHECK(k.eval(1) == kostka_number(lam, mu));
                if (!k.is_zero()) CHECK(k.degree() <= n_statistic(mu) - n_statistic(lam));
            }
}

TEST_CASE("GL_n unipotent class sizes") {
    for (int n = 2; n <= 6; ++n) {
        Poly total;
        for (auto& mu : partitions_of(n)) total += gl_class_size(mu);
        CHECK(total == Poly::monomial(n * (n - 1)));
    }
    // regular unipotent class in GL_2
    CHECK(gl_class_size({2}) == Poly::monomial(2) - Poly(1));
}

TEST_CASE("type A data") {
    auto ud = type_a_data(4, true);
    CHECK(ud.classes.size() == 5);
    CHECK(ud.classes[ud.bottom()].partition == Partition{1, 1, 1, 1});
    CHECK(ud.classes[ud.top()].partition == Partition{4});
    for (size_t i = 1; i < ud.classes.size(); ++i) CHECK(ud.classes[i - 1].dim <= ud.classes[i].dim);
    int a = ud.class_index("(2,2)"), b = ud.class_index("(3,1)");
    CHECK(ud.le[a][b]);
    CHECK_FALSE(ud.le[b][a]);
    CHECK_THROWS(type_a_data(8, true));
    CHECK_THROWS(ud.class_index("(5)"));
}

TEST_CASE("labels") {
    CHECK(display_label("A~1") == "Ã1");
    CHECK(display_label("A2+A~1") == "A2+Ã1");
    CHECK(display_label("G2(a1)") == "G2(a1)");
}

TEST_CASE("bundled assets validate") {
    for (auto label : {"G2", "F4"}) {
        CAPTURE(label);
        auto ud = load_asset(label);
        auto wd = WeylData::get(label);
        auto ct = char_table_cached(label);
        auto rep = validate_assets(ud, *wd, *ct);
        for (auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.ok);
        }
        CHECK(ud.class_index("Ã1") == ud.class_index("A~1"));
    }
    CHECK_THROWS_AS(load_asset("G2", "/nonexistent"), TierUnavailable);
}

TEST_CASE("fault injection is caught") {
    using nlohmann::json;
    json good = json::parse(read_file(data_dir() + "/G2.json"));
    auto wd = WeylData::get("G2");
    auto ct = char_table_cached("G2");
    auto validate = [&](const json& j) { return validate_assets(parse_asset(j.dump()), *wd, *ct); };
    CHECK(validate(good).ok());

    json j = good;
    j["classes"][1]["dim"] = 7;
    CHECK_FALSE(check_passes(validate(j), "class sizes divide |G| with degree dim C"));

    j = good;
    j["irreps"][0]["key"] = "1_7";
    CHECK_FALSE(check_passes(validate(j), "irrep keys match the character table"));

    j = good;
    j["values"][1][1] = json::array({"1/7"});
    CHECK_FALSE(validate(j).ok());

    j = good;
    j["hasse"].erase(0);
    CHECK_FALSE(check_passes(validate(j), "closure order has a minimum and a regular maximum"));

    j = good;
    j["irreps"][1]["A"] = 13;
    CHECK_FALSE(check_passes(validate(j), "0 <= a <= b <= A <= N"));

    j = good;
    j["schema_version"] = 2;
    CHECK_THROWS(parse_asset(j.dump()));
    CHECK_THROWS(parse_asset("{not json"));
}
