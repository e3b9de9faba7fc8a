#include "doctest.h"

#include <random>

#include "isoclinic/count.hpp"

using namespace isoc;

namespace {

std::string minimal_label(const TypeContext& ctx, const std::string& slope) {
    auto v = minimal_class(ctx, BraidSpec::springer(Slope::parse(slope)));
    REQUIRE(v.nice);
    return display_label(ctx.ud.classes[v.minimal].label);
}

}  // namespace

TEST_CASE("G2 worked example") {
    auto ctx = make_context("G2");
    auto table = count_table(*ctx, BraidSpec::general({1, 2, 1, 2}, 2));
    std::vector<std::string> labels = {"1", "A1", "A~1", "G2(a1)", "G2"};
    std::vector<RatFunc> expect = {0, 1, RatFunc::q_power(2), RatFunc::q_power(4), RatFunc::q_power(6)};
    CHECK(table.labels == labels);
    CHECK(table.values == expect);
    // the same braid as a Springer power
    CHECK(count_table(*ctx, BraidSpec::springer(Slope(2, 3))).values == expect);
}

TEST_CASE("G2 minimal classes") {
    auto ctx = make_context("G2");
    CHECK(minimal_label(*ctx, "1/6") == "G2");
    CHECK(minimal_label(*ctx, "1/3") == "G2(a1)");
    CHECK(minimal_label(*ctx, "1/2") == "Ã1");
    CHECK(minimal_label(*ctx, "2/3") == "A1");
    CHECK(minimal_label(*ctx, "5/6") == "A1");
    CHECK(is_rigid(*ctx, Slope(2, 3)));
    CHECK_FALSE(is_rigid(*ctx, Slope(5, 6)));
    CHECK(count_at_minimal(*ctx, Slope(5, 6)) == RatFunc(cyclotomic(4)));
}

TEST_CASE("F4 rigidity") {
    auto ctx = make_context("F4");
    for (auto sl : {"3/8", "5/8", "3/4"}) CHECK(is_rigid(*ctx, Slope::parse(sl)));
    CHECK_FALSE(is_rigid(*ctx, Slope(2, 3)));
    CHECK(count_at_minimal(*ctx, Slope(2, 3)) == RatFunc(cyclotomic(1) * cyclotomic(1)));
    // the longest element: the count over A1+Ã1 is identically 1 as well
    CHECK(is_rigid(*ctx, Slope(1, 2)));
}

TEST_CASE("slopes above one contain the full twist") {
    auto ctx = make_context("G2");
    auto spec = BraidSpec::springer(Slope(7, 6));
    auto v = minimal_class(*ctx, spec);
    CHECK(v.nice);
    CHECK(v.shortcut);
    CHECK(ctx->ud.classes[v.minimal].label == "1");
    for (auto& x : count_table(*ctx, spec).values) CHECK_FALSE(x.is_zero());
    // words are tested the same way
    auto w = minimal_class(*ctx, BraidSpec::general({1, 2}, 7));
    CHECK(w.shortcut);
}

TEST_CASE("GL_2 counts") {
    auto ctx = make_context("A1", true);
    auto table = count_table(*ctx, BraidSpec::general({1}, 1));
    REQUIRE(table.labels.size() == 2);
    CHECK(table.labels[0] == "(1,1)");
    CHECK(table.values[0].is_zero());
    CHECK(table.values[1] == RatFunc(Poly(1), Poly::q() - Poly(1)));
    CHECK_THROWS(make_context("G2", true));
}

TEST_CASE("type A minimal classes for the Coxeter slope") {
    auto ctx = make_context("A3", true);
    CHECK(minimal_label(*ctx, "1/4") == "(4)");
    CHECK(minimal_label(*ctx, "3/4") == "(2,1,1)");
}

TEST_CASE("counts are invariant under cyclic shifts") {
    std::mt19937 rng(7);
    auto ctx = make_context("A3", true);
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord w;
        int len = 2 + static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i) w.push_back(1 + static_cast<int>(rng() % 3));
        CAPTURE(word_str(w));
        auto a = count_table(*ctx, BraidSpec::general(w, 1));
        auto b = count_table(*ctx, BraidSpec::general(cyclic_shift(w), 1));
        CHECK(a.values == b.values);
    }
}

TEST_CASE("counts are non-negative on prime powers") {
    for (auto label : {"G2", "F4"}) {
        auto ctx = make_context(label);
        for (auto sl : {"1/2", "1/3", "2/3"}) {
            auto table = count_table(*ctx, BraidSpec::springer(Slope::parse(sl)));
            for (auto& v : table.values)
                for (int q : {2, 3, 4, 5, 7}) CHECK(v.eval(q) >= 0);
        }
    }
}

TEST_CASE("general words outside type A need the Hecke tier") {
    auto ctx = make_context("F4");
    CHECK_THROWS_AS(count_table(*ctx, BraidSpec::general({2, 3, 2, 4, 3, 2, 3}, 1)), TierUnavailable);
}

TEST_CASE("bad data directory is a tier failure") {
    CHECK_THROWS_AS(make_context("F4", false, "/nonexistent"), TierUnavailable);
}
