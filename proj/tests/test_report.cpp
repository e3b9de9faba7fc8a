#include "doctest.h"

#include "isoclinic/report.hpp"

using namespace isoc;

TEST_CASE("display width ignores combining marks") {
    CHECK(display_width("A1") == 2);
    CHECK(display_width("Ã1") == 2);
    CHECK(display_width("B\xCC\x832") == 2);
    CHECK(display_width("q^-4Φ1^-1") == 9);
}

TEST_CASE("rendering") {
    json r{{"title", "t"}, {"columns", {"a", "bb"}}, {"rows", json::array({json::array({"Ã1", "x,y"}), json::array({"long", "z"})})}};
    CHECK(render(r, "table") == "t\na     bb\n----  ---\nÃ1    x,y\nlong  z\n");
    CHECK(render(r, "csv") == "a,bb\nÃ1,\"x,y\"\nlong,z\n");
    CHECK_THROWS(render(r, "xml"));
}

TEST_CASE("JSON reports round-trip") {
    auto g2 = make_context("G2");
    auto a3 = make_context("A3", true);
    std::vector<json> reports = {
        count_report(*g2, BraidSpec::general({1, 2, 1, 2}, 2)),
        interval_report(*g2, BraidSpec::springer(Slope(2, 3))),
        count_min_report(*g2, Slope(2, 3)),
        count_report(*a3, BraidSpec::springer(Slope(3, 4))),
        springer_report("G2"),
        validate_report("G2"),
        coxeter_report(5),
    };
    for (auto& r : reports) {
        CAPTURE(r["command"].get<std::string>());
        std::string text = render(r, "json");
        json back = json::parse(text);
        CHECK(back == r);
        CHECK(render(back, "json") == text);
        CHECK(render(back, "table") == render(r, "table"));
        CHECK(render(back, "csv") == render(r, "csv"));
    }
}

TEST_CASE("report contents") {
    auto g2 = make_context("G2");
    auto iv = interval_report(*g2, BraidSpec::springer(Slope(2, 3)));
    CHECK(iv["rows"][0][1] == "(A1, G2)");
    auto cm = count_min_report(*g2, Slope(2, 3));
    CHECK(cm["rows"][0][2] == "1");
    auto sp = springer_report("F4");
    CHECK(sp["regular"] == json({1, 2, 3, 4, 6, 8, 12}));
    auto sh = interval_report(*g2, BraidSpec::springer(Slope(7, 6)));
    CHECK(sh["rows"][0][1] == "(1, G2)");
    CHECK(sh["shortcut"] == true);
    auto orc = oracle_report(2, 3, BraidSpec::general({1}, 1));
    CHECK(orc["ok"] == true);
    CHECK(orc["rows"][1][1] == "1/2");
}
