// Property suites: identities every supported type must satisfy.
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "isoclinic/count.hpp"

using namespace isoc;

namespace {

const std::vector<std::string> kTables = {"A1", "A2", "A3", "A4", "A5", "A6", "G2", "F4"};

Poly poincare_product(const RootSystem& rs) {
    Poly p(1);
    for (int d : rs.degrees()) p *= q_int(d);
    return p;
}

int braid_order(const RootSystem& rs, int s, int t) {
    long x = rs.cartan()[s - 1][t - 1] * rs.cartan()[t - 1][s - 1];
    switch (x) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        default: return 6;
    }
}

BraidWord alternating(int s, int t, int m) {
    BraidWord w;
    for (int i = 0; i < m; ++i) w.push_back(i % 2 ? t : s);
    return w;
}

}  // namespace

TEST_CASE("character orthogonality") {
    for (auto& label : kTables) {
        CAPTURE(label);
        auto wd = WeylData::get(label);
        auto ct = char_table_cached(label);
        const auto& sizes = wd->classes().sizes;
        long order = static_cast<long>(wd->rs().group_order());
        int r = ct->size();
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j) {
                long s = 0;
                for (int c = 0; c < r; ++c) s += static_cast<long>(sizes[c]) * ct->values[i][c] * ct->values[j][c];
                CHECK(s == (i == j ? order : 0));
            }
        for (int c = 0; c < r; ++c)
            for (int d = c; d < r; ++d) {
                long s = 0;
                for (int i = 0; i < r; ++i) s += ct->values[i][c] * ct->values[i][d];
                CHECK(s == (c == d ? order / static_cast<long>(sizes[c]) : 0));
            }
    }
}

TEST_CASE("Poincare polynomial is the product of q-integers of the degrees") {
    for (auto label : {"A1", "A3", "A5", "A6", "G2", "F4", "E6"}) {
        CAPTURE(label);
        RootSystem rs = RootSystem::build(label);
        WeylGroup g(rs);
        std::vector<Rational> coeffs(rs.num_positive() + 1, 0);
        for (auto& w : g.elements()) coeffs[w.length] += 1;
        CHECK(Poly(coeffs) == poincare_product(rs));
    }
}

TEST_CASE("fake degrees add up to the coinvariant Hilbert series") {
    for (auto& label : kTables) {
        CAPTURE(label);
        auto wd = WeylData::get(label);
        auto ct = char_table_cached(label);
        Poly sum;
        bool trivial = false, sign = false;
        for (int e = 0; e < ct->size(); ++e) {
            sum += ct->fake_degrees[e] * Rational(ct->dims[e]);
            CHECK(ct->fake_degrees[e].eval(1) == ct->dims[e]);
            trivial = trivial || ct->fake_degrees[e] == Poly(1);
            sign = sign || ct->fake_degrees[e] == Poly::monomial(wd->rs().num_positive());
        }
        CHECK(sum == poincare_product(wd->rs()));
        CHECK(trivial);
        CHECK(sign);
    }
}

TEST_CASE("Garside normal form under random rewrites") {
    std::mt19937 rng(12345);
    std::vector<RootSystem> systems = {RootSystem::build("A3"), RootSystem::build("G2"), RootSystem::build("F4")};
    for (int trial = 0; trial < 1000; ++trial) {
        const RootSystem& rs = systems[trial % systems.size()];
        int r = rs.rank();
        auto word = [&](int len) {
            BraidWord w;
            for (int i = 0; i < len; ++i) w.push_back(1 + static_cast<int>(rng() % r));
            return w;
        };
        BraidWord u = word(static_cast<int>(rng() % 8)), v = word(static_cast<int>(rng() % 8));
        int s = 1 + static_cast<int>(rng() % r), t = 1 + static_cast<int>(rng() % r);
        if (s == t) t = s % r + 1;
        int m = braid_order(rs, s, t);
        BraidWord a = u, b = u;
        auto left = alternating(s, t, m), right = alternating(t, s, m);
        a.insert(a.end(), left.begin(), left.end());
        b.insert(b.end(), right.begin(), right.end());
        a.insert(a.end(), v.begin(), v.end());
        b.insert(b.end(), v.begin(), v.end());
        auto na = normal_form(rs, a);
        auto nb = normal_form(rs, b);
        REQUIRE(na.simples == nb.simples);
        // idempotent: flattening and renormalising changes nothing
        BraidWord flat = flatten(rs, na);
        CHECK(flat.size() == a.size());
        CHECK(normal_form(rs, flat).simples == na.simples);
        // left-greedy: no descent of the next factor can move left
        for (size_t i = 0; i + 1 < na.simples.size(); ++i)
            for (int x : rs.left_descents(na.simples[i + 1])) CHECK(rs.is_right_descent(na.simples[i], x));
    }
}

TEST_CASE("Springer trace exponents are integers") {
    for (auto& label : kTables) {
        CAPTURE(label);
        auto ctx = make_context(label);
        const RootSystem& rs = ctx->rs();
        for (int m = 1; m <= rs.num_roots(); ++m) {
            if (rs.num_roots() % m) continue;
            if (find_root_elements(rs, m).empty()) continue;
            for (int d = 1; d < 2 * m + 1; ++d) {
                if (std::gcd(d, m) != 1) continue;
                CAPTURE(Slope(d, m).str());
                CHECK_NOTHROW(braid_traces(*ctx, BraidSpec::springer(Slope(d, m))));
            }
        }
    }
}

TEST_CASE("every Springer slope below one is nice") {
    for (auto& label : kTables) {
        CAPTURE(label);
        auto ctx = make_context(label);
        const RootSystem& rs = ctx->rs();
        for (int m = 2; m <= rs.coxeter_number(); ++m) {
            if (find_root_elements(rs, m).empty()) continue;
            for (int d = 1; d < m; ++d) {
                if (std::gcd(d, m) != 1) continue;
                CAPTURE(Slope(d, m).str());
                auto v = minimal_class(*ctx, BraidSpec::springer(Slope(d, m)));
                CHECK(v.nice);
                // the top class always has a nonzero count
                CHECK(std::find(v.support.begin(), v.support.end(), ctx->ud.top()) != v.support.end());
            }
        }
    }
}

TEST_CASE("bundled data assets validate") {
    for (auto label : {"G2", "F4"}) {
        CAPTURE(label);
        auto rep = validate_assets(load_asset(label), *WeylData::get(label), *char_table_cached(label));
        for (auto& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.ok);
        }
    }
}
