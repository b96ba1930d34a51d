#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betamaps/enumeration.hpp"
#include "betamaps/tree.hpp"

#include <random>
#include <string>

using namespace betamaps;

namespace {

const char* kFigTree = "(4 (0) (0) (1 (0)) (2 (1 (3 (2 (1 (0))) (0)))))";

// all-zero chain below a root labeled 1: (1 (0 (0 ... )))
std::string chain_code(int nodes) {
    std::string s = "(1";
    for (int i = 1; i < nodes; ++i) s += " (0";
    s.append(nodes, ')');
    return s;
}

// uniform-ish random valid tree: random ordered shape, labels drawn bottom-up
BetaTree random_tree(int nodes, std::mt19937& rng) {
    if (nodes == 1) return BetaTree(0);
    // subtree sizes of the root's children: random composition of nodes-1
    std::vector<int> sizes;
    int left = nodes - 1;
    while (left > 0) {
        int s = std::uniform_int_distribution<int>(1, left)(rng);
        sizes.push_back(s);
        left -= s;
    }
    BetaTree root(0);
    int sum = 0;
    for (int s : sizes) {
        BetaTree child = random_tree(s, rng);
        if (!child.is_leaf())
            child.label = std::uniform_int_distribution<int>(0, child_label_sum(child) + 1)(rng);
        sum += child.label;
        root.children.push_back(std::move(child));
    }
    root.label = sum + 1;
    return root;
}

} // namespace

TEST_CASE("parse and render round-trip on fixtures") {
    for (const char* code : {"(0)", "(1 (0))", "(1 (0) (0))", kFigTree,
                             "(3 (2 (1 (0)) (1 (0 (0)))))"}) {
        BetaTree t = parse_tree(code);
        CHECK(render_tree(t) == code);
        CHECK(parse_tree(render_tree(t)) == t);
    }
}

TEST_CASE("parser accepts only the grammar") {
    CHECK(parse_tree("(0)").is_trivial());
    CHECK(render_tree(parse_tree("  ( 1  ( 0 ) ) ")) == "(1 (0))");
    CHECK_THROWS_AS(parse_raw_tree(""), ParseError);
    CHECK_THROWS_AS(parse_raw_tree("1 (0)"), ParseError);
    CHECK_THROWS_AS(parse_raw_tree("(1 (0)"), ParseError);
    CHECK_THROWS_AS(parse_raw_tree("(1 (0)))"), ParseError);
    CHECK_THROWS_AS(parse_raw_tree("(a)"), ParseError);
    CHECK_THROWS_AS(parse_raw_tree("(-1)"), ParseError);
    try {
        parse_raw_tree("(1 x)");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("validation rules") {
    CHECK(validate_tree(parse_raw_tree("(1 (0) (0))")).empty());
    CHECK(validate_tree(parse_raw_tree("(3 (2 (0) (1 (0))))")).empty());

    // root must be 0+1 = 1
    CHECK_THROWS_AS(parse_tree("(2 (0))"), ValidationError);
    auto v1 = validate_tree(parse_raw_tree("(2 (0))"));
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].rule == TreeRule::root_label);
    CHECK(v1[0].path.empty());

    // leaf labeled 1
    CHECK_THROWS_AS(parse_tree("(1 (1))"), ValidationError);
    auto v2 = validate_tree(parse_raw_tree("(2 (1) (0))"));
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].rule == TreeRule::leaf_label);
    CHECK(v2[0].path == NodePath{0});

    // non-root node exceeding children sum + 1
    auto v3 = validate_tree(parse_raw_tree("(3 (2 (0)))" /* inner 2 > 0+1 */));
    REQUIRE(v3.size() == 1);
    CHECK(v3[0].rule == TreeRule::node_label);

    // trivial tree with nonzero label
    CHECK(!validate_tree(parse_raw_tree("(1)")).empty());
}

TEST_CASE("statistics fixtures") {
    StatVector fig = statistics(parse_tree(kFigTree));
    CHECK(fig.root == 4);
    CHECK(fig.sub == 4);
    CHECK(fig.rzero == 1);
    CHECK(fig.rmod == 2);
    CHECK(fig.open == 2);
    CHECK(fig.exc == 6);
    CHECK(fig.nodes == 12);
    CHECK(fig.edges == 11);

    StatVector edge = statistics(parse_tree("(1 (0))"));
    CHECK(edge == StatVector{1, 1, 1, 1, 1, 1, 2, 1});

    StatVector triv = statistics(parse_tree("(0)"));
    CHECK(triv == StatVector{0, 0, 0, 0, 0, 0, 1, 0});
}

TEST_CASE("open nodes") {
    CHECK(open_nodes(parse_tree("(1 (0))")) == std::vector<NodePath>{{0}});

    auto fig = open_nodes(parse_tree(kFigTree));
    REQUIRE(fig.size() == 2);
    CHECK(fig[0] == NodePath{3});
    CHECK(fig[1] == NodePath{3, 0, 0, 1});

    auto three = open_nodes(parse_tree("(3 (2 (1 (0)) (1 (0 (0)))))"));
    REQUIRE(three.size() == 3);
    CHECK(three[0] == NodePath{});
    CHECK(three[1] == NodePath{0, 1});
    CHECK(three[2] == NodePath{0, 1, 0, 0});

    CHECK_THROWS_AS(open_nodes(parse_tree("(0)")), std::invalid_argument);
}

TEST_CASE("node_at follows paths") {
    BetaTree fig = parse_tree(kFigTree);
    CHECK(node_at(fig, {}).label == 4);
    CHECK(node_at(fig, {3}).label == 2);
    CHECK(node_at(fig, {3, 0, 0, 1}).label == 0);
    CHECK_THROWS_AS(node_at(fig, {9}), std::out_of_range);
}

TEST_CASE("parse inverts render on every small tree and on random larger ones") {
    for (int n = 1; n <= 9; ++n)
        for_each_tree(n, [&](const BetaTree& t) { CHECK(parse_tree(render_tree(t)) == t); });

    std::mt19937 rng(20240817);
    for (int i = 0; i < 10000; ++i) {
        int nodes = std::uniform_int_distribution<int>(10, 80)(rng);
        BetaTree t = random_tree(nodes, rng);
        REQUIRE(is_valid_tree(t));
        CHECK(parse_tree(render_tree(t)) == t);
    }
}

TEST_CASE("statistic properties over all small trees") {
    for (int n = 2; n <= 8; ++n) {
        for_each_tree(n, [&](const BetaTree& t) {
            StatVector sv = statistics(t);
            CHECK(sv.exc >= 1); // the root of a nontrivial tree is excessive
            CHECK(sv.rmod == sv.open);
            CHECK(sv.edges == sv.nodes - 1);

            auto opens = open_nodes(t);
            CHECK(static_cast<int>(opens.size()) == sv.open);
            // all open nodes sit on the rightmost path, the leaf last
            NodePath rightmost;
            const BetaTree* v = &t;
            while (!v->is_leaf()) {
                rightmost.push_back(static_cast<int>(v->children.size()) - 1);
                v = &v->children.back();
            }
            CHECK(opens.back() == rightmost);
            for (const NodePath& p : opens) {
                CHECK(p.size() <= rightmost.size());
                for (std::size_t d = 0; d < p.size(); ++d) CHECK(p[d] == rightmost[d]);
            }
        });
    }
}

TEST_CASE("deep path trees survive the full value lifecycle") {
    const int n = 1000000;
    std::string code = chain_code(n);
    BetaTree t = parse_tree(code);
    CHECK(tree_size(t) == n);
    CHECK(render_tree(t) == code);

    StatVector sv = statistics(t);
    CHECK(sv.nodes == n);
    CHECK(sv.root == 1);
    CHECK(sv.rzero == n - 1);
    CHECK(sv.rmod == n - 1);
    CHECK(sv.open == n - 1);
    CHECK(sv.exc == 1);

    BetaTree copy = t;
    CHECK(copy == t);
    copy.children[0].label = 1; // now a different (still deep) tree
    CHECK(copy != t);

    // open_nodes materializes one path per open node, which is quadratic data
    // on a chain; exercise it at a depth where that is still small
    BetaTree medium = parse_tree(chain_code(3000));
    CHECK(open_nodes(medium).size() == 2999);
} // deep destructors run here
