#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betamaps/enumeration.hpp"
#include "betamaps/involution.hpp"
#include "betamaps/tree.hpp"
#include "betamaps/tree_algebra.hpp"

#include <string>

using namespace betamaps;

namespace {

const char* kFigTree = "(4 (0) (0) (1 (0)) (2 (1 (3 (2 (1 (0))) (0)))))";
const char* kGFigTree = "(2 (1 (2 (1 (0 (0)))) (0 (0 (1 (0) (0) (0))))))";

BetaTree T(const char* code) { return parse_tree(code); }

} // namespace

TEST_CASE("g fixtures") {
    CHECK(g(T("(0)")) == T("(0)"));
    CHECK(g(T("(1 (0))")) == T("(1 (0))"));
    CHECK(g(T("(1 (0 (0)))")) == T("(2 (1 (0)))"));
    CHECK(g(T("(2 (1 (0)))")) == T("(1 (0 (0)))"));
    CHECK(g(T(kFigTree)) == T(kGFigTree));
    CHECK(g(T(kGFigTree)) == T(kFigTree));
}

TEST_CASE("parse_expr fixtures") {
    CHECK(parse_expr(T("(0)"), DecompKind::rho_mu) == DecompExpr::black());
    CHECK(parse_expr(T("(0)"), DecompKind::sigma_nu) == DecompExpr::black());

    std::vector<DecompExpr> one;
    one.push_back(DecompExpr::black());
    CHECK(parse_expr(T("(1 (0))"), DecompKind::rho_mu) == DecompExpr::black(std::move(one)));

    // the bicolored tree of the worked example under sigma/nu
    auto B = [](std::vector<DecompExpr> kids) { return DecompExpr::black(std::move(kids)); };
    auto Bl = [&]() { return DecompExpr::black(); };
    auto mk3 = [&](DecompExpr a, DecompExpr b, DecompExpr c) {
        std::vector<DecompExpr> v;
        v.push_back(std::move(a));
        v.push_back(std::move(b));
        v.push_back(std::move(c));
        return v;
    };
    auto mk1 = [&](DecompExpr a) {
        std::vector<DecompExpr> v;
        v.push_back(std::move(a));
        return v;
    };
    DecompExpr left = B(mk1(B(mk1(
        DecompExpr::white(1, B(mk3(Bl(), Bl(), Bl())), B(mk1(Bl())))))));
    DecompExpr right = B(mk1(
        DecompExpr::white(2, B(mk1(B(mk1(Bl())))), B(mk1(B(mk1(Bl())))))));
    DecompExpr expected = DecompExpr::white(2, std::move(left), std::move(right));
    CHECK(parse_expr(T(kFigTree), DecompKind::sigma_nu) == expected);
}

TEST_CASE("eval_expr fixtures and errors") {
    CHECK(eval_expr(DecompExpr::black(), DecompKind::rho_mu) == T("(0)"));
    std::vector<DecompExpr> one;
    one.push_back(DecompExpr::black());
    DecompExpr e = DecompExpr::black(std::move(one));
    CHECK(eval_expr(e, DecompKind::rho_mu) == T("(1 (0))"));
    CHECK(eval_expr(e, DecompKind::sigma_nu) == T("(1 (0))"));

    // white label outside [1, kappa(right)]
    std::vector<DecompExpr> kid;
    kid.push_back(DecompExpr::black());
    DecompExpr bad = DecompExpr::white(2, DecompExpr::black(std::move(kid)),
                                       [] {
                                           std::vector<DecompExpr> k2;
                                           k2.push_back(DecompExpr::black());
                                           return DecompExpr::black(std::move(k2));
                                       }());
    CHECK(expr_violation(bad).has_value());
    CHECK_THROWS_AS(eval_expr(bad, DecompKind::sigma_nu), std::invalid_argument);
}

TEST_CASE("kappa and weight fixtures") {
    CHECK(kappa(DecompExpr::black()) == 0);
    CHECK(weight(DecompExpr::black()) == 1);

    DecompExpr fig_sn = parse_expr(T(kFigTree), DecompKind::sigma_nu);
    DecompExpr fig_rm = parse_expr(T(kFigTree), DecompKind::rho_mu);
    CHECK(kappa(fig_sn) == 4); // root label
    CHECK(kappa(fig_rm) == 2); // open count
    CHECK(weight(fig_sn) == 12);
    CHECK(weight(fig_rm) == 12);
    CHECK(weight(parse_expr(T("(1 (0))"), DecompKind::rho_mu)) == 2);
}

TEST_CASE("parse and eval invert each other; g is the semantics swap") {
    for (int n = 1; n <= 9; ++n) {
        for_each_tree(n, [&](const BetaTree& t) {
            DecompExpr rm = parse_expr(t, DecompKind::rho_mu);
            DecompExpr sn = parse_expr(t, DecompKind::sigma_nu);
            CHECK(!expr_violation(rm));
            CHECK(!expr_violation(sn));
            CHECK(eval_expr(rm, DecompKind::rho_mu) == t);
            CHECK(eval_expr(sn, DecompKind::sigma_nu) == t);

            BetaTree gt = g(t);
            CHECK(eval_expr(sn, DecompKind::rho_mu) == gt);
            CHECK(eval_expr(rm, DecompKind::sigma_nu) == gt);

            StatVector st = statistics(t);
            CHECK(kappa(sn) == st.root);
            CHECK(kappa(rm) == st.open);
            CHECK(weight(sn) == st.nodes);
            CHECK(weight(rm) == st.nodes);
        });
    }
}

TEST_CASE("g distributes over sigma and nu") {
    std::vector<BetaTree> trees;
    for (int n = 1; n <= 5; ++n)
        for_each_tree(n, [&](const BetaTree& t) { trees.push_back(t); });

    // g(sigma(T_1..T_k)) = rho(g(T_1)..g(T_k)), tuples of length <= 2
    for (const BetaTree& a : trees) {
        {
            std::vector<BetaTree> in;
            in.push_back(a);
            std::vector<BetaTree> gs;
            gs.push_back(g(a));
            CHECK(g(sigma(std::move(in))) == rho(std::move(gs)));
        }
        for (const BetaTree& b : trees) {
            std::vector<BetaTree> in;
            in.push_back(a);
            in.push_back(b);
            std::vector<BetaTree> gs;
            gs.push_back(g(a));
            gs.push_back(g(b));
            CHECK(g(sigma(std::move(in))) == rho(std::move(gs)));
        }
    }

    // g(nu_i(S,T)) = mu_i(g(S), g(T)) for open(S) = 1
    for (const BetaTree& s : trees) {
        if (statistics(s).open != 1) continue;
        for (const BetaTree& t : trees) {
            if (t.is_trivial()) continue;
            int top = statistics(t).root;
            for (int i = 1; i <= top; ++i)
                CHECK(g(nu(i, s, t)) == mu(i, g(s), g(t)));
        }
    }
}

TEST_CASE("g survives adversarial deep trees") {
    // iterated rho(T, eps): one million nodes, half a million levels of
    // decomposition; every level is O(1) work, so this isolates stack safety
    BetaTree comb(0);
    const int levels = 500000;
    for (int k = 0; k < levels; ++k) {
        BetaTree next(1);
        next.children.reserve(2);
        comb.label = 0;
        next.children.push_back(std::move(comb));
        next.children.emplace_back(0);
        comb = std::move(next);
    }
    CHECK(tree_size(comb) == 2 * levels + 1);
    CHECK(g(comb) == comb); // this family is fixed by g

    // all-zero chain: the image is the staircase, so labels genuinely move;
    // g costs Theta(n^2) on chains, which caps the depth used here
    const int n = 10000;
    std::string code = "(1";
    for (int i = 1; i < n; ++i) code += " (0";
    code.append(n, ')');
    BetaTree chain = parse_tree(code);

    BetaTree image = g(chain);
    CHECK(tree_size(image) == n);
    const BetaTree* v = &image;
    for (int expect = n - 1; expect >= 0; --expect) {
        CHECK(v->label == expect);
        if (expect > 0) {
            REQUIRE(v->children.size() == 1);
            v = &v->children.front();
        }
    }
    CHECK(g(image) == chain);
}
