#include "doctest.h"

#include <numeric>

#include "isoclinic/braid.hpp"

using namespace isoc;

TEST_CASE("slopes") {
    Slope s = Slope::parse("2/3");
    CHECK(s.d == 2);
    CHECK(s.m == 3);
    CHECK(s.str() == "2/3");
    CHECK(s.value() == Rational(2, 3));
    CHECK_THROWS(Slope::parse("2/4"));
    CHECK_THROWS(Slope::parse("0/3"));
    CHECK_THROWS(Slope::parse("abc"));
}

TEST_CASE("word parsing") {
    CHECK(parse_word("1,2,1,2") == BraidWord{1, 2, 1, 2});
    CHECK(parse_word("[2, 3, 2]") == BraidWord{2, 3, 2});
    CHECK(word_str({1, 2}) == "1,2");
    CHECK_THROWS(parse_word("1,x"));
    RootSystem rs = RootSystem::build("G2");
    CHECK_THROWS(check_word(rs, {1, 3}));
}

TEST_CASE("normal form of simple braids") {
    RootSystem rs = RootSystem::build("A2");
    auto nf = normal_form(rs, {1, 2, 1});
    REQUIRE(nf.simples.size() == 1);
    CHECK(nf.simples[0] == rs.longest());
    CHECK(braid_equal(rs, {1, 2, 1}, {2, 1, 2}));
    CHECK_FALSE(braid_equal(rs, {1, 2}, {2, 1}));
    // s1 s1 is not simple
    CHECK(normal_form(rs, {1, 1}).simples.size() == 2);
    CHECK(normal_form(rs, {}).simples.empty());
}

TEST_CASE("full twist") {
    for (auto label : {"A2", "A3", "G2", "F4"}) {
        CAPTURE(label);
        RootSystem rs = RootSystem::build(label);
        BraidWord pi = full_twist(rs);
        CHECK(static_cast<int>(pi.size()) == rs.num_roots());
        CHECK(contains_full_twist(rs, pi));
        BraidWord delta = rs.reduced_word(rs.longest());
        CHECK_FALSE(contains_full_twist(rs, delta));
        // the full twist is central
        BraidWord a = pi, b = {1};
        a.push_back(1);
        b.insert(b.end(), pi.begin(), pi.end());
        CHECK(braid_equal(rs, a, b));
    }
    RootSystem g2 = RootSystem::build("G2");
    CHECK(braid_equal(g2, power({1, 2}, 6), full_twist(g2)));
}

TEST_CASE("power and cyclic shift") {
    CHECK(power({1, 2}, 3) == BraidWord{1, 2, 1, 2, 1, 2});
    CHECK(power({1, 2}, 0).empty());
    CHECK(cyclic_shift({1, 2, 3}) == BraidWord{2, 3, 1});
}

TEST_CASE("G2 root elements") {
    RootSystem rs = RootSystem::build("G2");
    auto six = find_root_elements(rs, 6);
    REQUIRE(six.size() == 2);
    CHECK(rs.reduced_word(six[0]) == std::vector<int>{1, 2});
    CHECK(springer_chamber_check(rs, six[0], 6));
    CHECK(find_root_elements(rs, 5).empty());
    auto one = find_root_elements(rs, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == rs.identity());
    CHECK(springer_braid(rs, Slope(1, 1)) == full_twist(rs));
}

TEST_CASE("S4 Springer distinction") {
    RootSystem rs = RootSystem::build("A3");
    WeylElement good = rs.from_word({1, 3, 2});
    WeylElement bad = rs.from_word({1, 2, 3});
    for (auto* w : {&good, &bad}) {
        CHECK(rs.order(*w) == 4);
        CHECK(braid_equal(rs, power(rs.reduced_word(*w), 4), full_twist(rs)));
    }
    CHECK(springer_chamber_check(rs, good, 4));
    CHECK_FALSE(springer_chamber_check(rs, bad, 4));
    CHECK(springer_element(rs, 4) == good);
    CHECK_THROWS(springer_chamber_check(rs, rs.from_word({1}), 4));
}

TEST_CASE("Springer element lengths") {
    for (auto label : {"A4", "G2", "F4"}) {
        CAPTURE(label);
        RootSystem rs = RootSystem::build(label);
        for (int m = 2; m <= rs.coxeter_number(); ++m) {
            auto roots = find_root_elements(rs, m);
            for (auto& w : roots) {
                CHECK(w.length * m == rs.num_roots());
                CHECK(rs.order(w) == m);
            }
        }
    }
}
