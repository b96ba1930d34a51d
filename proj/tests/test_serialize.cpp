#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betamaps/serialize.hpp"

using namespace betamaps;
using nlohmann::json;

namespace {
const char* kFigTree = "(4 (0) (0) (1 (0)) (2 (1 (3 (2 (1 (0))) (0)))))";
}

TEST_CASE("tree JSON round-trip and validation") {
    BetaTree t = parse_tree(kFigTree);
    json j = tree_to_json(t);
    CHECK(j["label"] == 4);
    CHECK(tree_from_json(j) == t);

    json bad = {{"label", 2}, {"children", {{{"label", 0}, {"children", json::array()}}}}};
    CHECK_THROWS_AS(tree_from_json(bad), ValidationError);
}

TEST_CASE("expression JSON round-trip") {
    DecompExpr e = parse_expr(parse_tree(kFigTree), DecompKind::sigma_nu);
    json j = expr_to_json(e);
    CHECK(j["kind"] == "white");
    CHECK(j["i"] == 2);
    CHECK(expr_from_json(j) == e);
}

TEST_CASE("map JSON round-trip and validation") {
    BicubicMap m = to_map(parse_tree(kFigTree));
    json j = map_to_json(m);
    BicubicMap back = map_from_json(j);
    CHECK(maps_equal(m, back));
    CHECK(back.alpha == m.alpha);

    json corrupt = j;
    corrupt["alpha"][0] = 0; // fixed point
    CHECK_THROWS_AS(map_from_json(corrupt), MapError);
}

TEST_CASE("stat vectors and tables") {
    json sv = stats_to_json(statistics(parse_tree(kFigTree)));
    CHECK(sv["root"] == 4);
    CHECK(sv["exc"] == 6);

    json ms = map_stats_to_json(map_statistics(to_map(parse_tree(kFigTree))));
    CHECK(ms["f1r3"] == 4);
    CHECK(ms["one"] == 6);

    JointDistTable tab = joint_distribution(3, Stat::root, Stat::rmod);
    json tj = table_to_json(tab, Stat::root, Stat::rmod, 3);
    CHECK(tj["total"] == "3");
    CHECK(tj["entries"].size() == 3);
}

TEST_CASE("series coefficient dump") {
    json dump = series_to_json(solve_f(2));
    REQUIRE(dump.is_array());
    bool found = false;
    for (const auto& row : dump)
        if (row["n"] == 1 && row["a"] == 1 && row["b"] == 1 && row["coeff"] == "1") found = true;
    CHECK(found);
}

TEST_CASE("report JSON round-trip") {
    VerifyReport r;
    r.check = "golden";
    r.max_nodes = 12;
    r.pass = true;
    r.detail = "ok";
    r.seconds = 1.5;
    auto back = report_from_json(report_to_json(r));
    REQUIRE(back.has_value());
    CHECK(back->check == "golden");
    CHECK(back->pass);
    CHECK(!back->counterexample);

    CHECK(!report_from_json(json{{"bogus", 1}}).has_value());
}
