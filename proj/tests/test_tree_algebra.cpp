#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betamaps/enumeration.hpp"
#include "betamaps/tree.hpp"
#include "betamaps/tree_algebra.hpp"

using namespace betamaps;

namespace {

const char* kFigTree = "(4 (0) (0) (1 (0)) (2 (1 (3 (2 (1 (0))) (0)))))";

BetaTree T(const char* code) { return parse_tree(code); }

std::string rt(const BetaTree& t) { return render_tree(t); }

BetaTree recompose(RhoMuStep step) {
    if (auto* rs = std::get_if<RhoStep>(&step)) return rho(std::move(rs->parts));
    auto& ms = std::get<MuStep>(step);
    return mu(ms.index, std::move(ms.s), std::move(ms.t));
}

BetaTree recompose(SigmaNuStep step) {
    if (auto* ss = std::get_if<SigmaStep>(&step)) return sigma(std::move(ss->parts));
    auto& ns = std::get<NuStep>(step);
    return nu(ns.index, std::move(ns.s), std::move(ns.t));
}

BetaTree recompose(LambdaOplusStep step) {
    if (auto* ls = std::get_if<LambdaStep>(&step)) return lambda_op(ls->index, std::move(ls->t));
    auto& os = std::get<OplusStep>(step);
    BetaTree acc = std::move(os.parts.front());
    for (std::size_t i = 1; i < os.parts.size(); ++i)
        acc = oplus(std::move(acc), std::move(os.parts[i]));
    return acc;
}

} // namespace

TEST_CASE("lambda fixtures") {
    BetaTree base = T("(2 (0) (1 (0)))");
    CHECK(rt(lambda_op(0, base)) == "(1 (0 (0) (1 (0))))");
    CHECK(rt(lambda_op(1, base)) == "(2 (1 (0) (1 (0))))");
    CHECK(rt(lambda_op(2, base)) == "(3 (2 (0) (1 (0))))");
    CHECK_THROWS_AS(lambda_op(3, base), std::invalid_argument);
    CHECK_THROWS_AS(lambda_op(-1, base), std::invalid_argument);
    CHECK(rt(lambda_op(0, T("(0)"))) == "(1 (0))");
}

TEST_CASE("oplus fixtures") {
    CHECK(rt(oplus(T("(1 (0))"), T("(1 (0))"))) == "(1 (0) (0))");
    CHECK(rt(oplus(T("(2 (1 (0)))"), T("(1 (0))"))) == "(2 (1 (0)) (0))");
    BetaTree sum = oplus(oplus(oplus(T("(1 (0))"), T("(1 (0))")), T("(2 (1 (0)))")),
                         T("(3 (2 (1 (3 (2 (1 (0))) (0)))))"));
    CHECK(rt(sum) == kFigTree);
    CHECK_THROWS_AS(oplus(T("(0)"), T("(1 (0))")), std::invalid_argument);
}

TEST_CASE("rho fixtures") {
    std::vector<BetaTree> one;
    one.push_back(T("(0)"));
    CHECK(rt(rho(std::move(one))) == "(1 (0))");

    std::vector<BetaTree> two;
    two.push_back(T("(0)"));
    two.push_back(T("(0)"));
    CHECK(rt(rho(std::move(two))) == "(1 (0) (0))");

    std::vector<BetaTree> three;
    three.push_back(T("(0)"));
    three.push_back(T("(0)"));
    three.push_back(T("(1 (0))"));
    CHECK(rt(rho(std::move(three))) == "(1 (0) (0) (0 (0)))");

    CHECK_THROWS_AS(rho({}), std::invalid_argument);
}

TEST_CASE("mu fixtures") {
    CHECK(rt(mu(2, T("(1 (0 (0)) (0))"), T("(3 (2 (1 (0)) (1 (0 (0)))))"))) ==
          "(4 (3 (1 (0)) (2 (1 (0)) (0 (0)) (0))))");
    CHECK(rt(mu(1, T("(1 (0 (0)))"), T("(1 (0))"))) == "(2 (1 (0 (0))))");
    CHECK(rt(mu(1, T("(1 (0))"), T("(0)"))) == "(1 (0))");

    CHECK_THROWS_AS(mu(1, T("(2 (1 (0)))"), T("(1 (0))")), std::invalid_argument);
    CHECK_THROWS_AS(mu(2, T("(1 (0))"), T("(1 (0))")), std::invalid_argument); // open = 1
    CHECK_THROWS_AS(mu(2, T("(1 (0))"), T("(0)")), std::invalid_argument);
}

TEST_CASE("sigma fixtures") {
    std::vector<BetaTree> one;
    one.push_back(T("(0)"));
    CHECK(rt(sigma(std::move(one))) == "(1 (0))");

    std::vector<BetaTree> two;
    two.push_back(T("(0)"));
    two.push_back(T("(0)"));
    CHECK(rt(sigma(std::move(two))) == "(1 (0) (0))");

    std::vector<BetaTree> three;
    three.push_back(T("(2 (1 (0) (0)))"));
    three.push_back(T("(1 (0))"));
    three.push_back(T("(2 (1 (0 (0))))"));
    CHECK(rt(sigma(std::move(three))) == "(3 (2 (1 (0)) (0 (0)) (0 (1 (0) (0))) (0)))");
}

TEST_CASE("nu fixtures") {
    CHECK(rt(nu(2, T("(2 (1 (0 (0)) (0)))"), T("(3 (2 (0) (1 (0))))"))) ==
          "(3 (2 (0 (0)) (1 (2 (0) (1 (0))))))");
    CHECK(rt(nu(1, T("(1 (0))"), T("(0)"))) == "(1 (0))");
    CHECK(rt(nu(1, T("(1 (0))"), T("(1 (0))"))) == "(1 (0 (0)))");

    // open((1 (0) (0))) = 1 (only the rightmost leaf is open), so this is legal
    CHECK(rt(nu(1, T("(1 (0) (0))"), T("(1 (0))"))) == "(1 (0) (0 (0)))");
    CHECK_THROWS_AS(nu(1, T("(1 (0 (0)))"), T("(1 (0))")), std::invalid_argument); // open = 2
    CHECK_THROWS_AS(nu(3, T("(1 (0))"), T("(2 (1 (0)))")), std::invalid_argument); // i > root(T)
    CHECK_THROWS_AS(nu(2, T("(1 (0))"), T("(0)")), std::invalid_argument);
}

TEST_CASE("rho/mu decomposition fixtures") {
    auto rs = decompose_rho_mu(T("(1 (0) (0))"));
    REQUIRE(std::holds_alternative<RhoStep>(rs));
    auto& parts = std::get<RhoStep>(rs).parts;
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].is_trivial());
    CHECK(parts[1].is_trivial());

    auto ms = decompose_rho_mu(T(kFigTree));
    REQUIRE(std::holds_alternative<MuStep>(ms));
    auto& mu_step = std::get<MuStep>(ms);
    CHECK(mu_step.index == 2);
    CHECK(rt(mu_step.s) == "(1 (0))");
    CHECK(rt(mu_step.t) == "(3 (0) (0) (1 (0)) (1 (0 (2 (1 (1 (0)))))))");

    auto ms2 = decompose_rho_mu(T("(2 (1 (0 (0))))"));
    REQUIRE(std::holds_alternative<MuStep>(ms2));
    auto& mu2 = std::get<MuStep>(ms2);
    CHECK(mu2.index == 1);
    CHECK(rt(mu2.s) == "(1 (0 (0)))");
    CHECK(rt(mu2.t) == "(1 (0))");

    CHECK_THROWS_AS(decompose_rho_mu(T("(0)")), std::invalid_argument);
}

TEST_CASE("sigma/nu decomposition fixtures") {
    auto ss = decompose_sigma_nu(T("(1 (0))"));
    REQUIRE(std::holds_alternative<SigmaStep>(ss));
    REQUIRE(std::get<SigmaStep>(ss).parts.size() == 1);
    CHECK(std::get<SigmaStep>(ss).parts[0].is_trivial());

    auto ns = decompose_sigma_nu(T("(3 (2 (0 (0)) (1 (2 (0) (1 (0))))))"));
    REQUIRE(std::holds_alternative<NuStep>(ns));
    auto& nu_step = std::get<NuStep>(ns);
    CHECK(nu_step.index == 2);
    CHECK(rt(nu_step.s) == "(2 (1 (0 (0)) (0)))");
    CHECK(rt(nu_step.t) == "(3 (2 (0) (1 (0))))");

    auto nfig = decompose_sigma_nu(T(kFigTree));
    REQUIRE(std::holds_alternative<NuStep>(nfig));
    auto& fig_step = std::get<NuStep>(nfig);
    CHECK(fig_step.index == 2);
    CHECK(rt(fig_step.s) == "(3 (0) (0) (1 (0)) (1 (0)))");
    CHECK(rt(fig_step.t) == "(4 (3 (2 (1 (0))) (0)))");

    CHECK_THROWS_AS(decompose_sigma_nu(T("(0)")), std::invalid_argument);
}

TEST_CASE("lambda/oplus decomposition fixtures") {
    auto ls = decompose_lambda_oplus(T("(3 (2 (0) (1 (0))))"));
    REQUIRE(std::holds_alternative<LambdaStep>(ls));
    CHECK(std::get<LambdaStep>(ls).index == 2);
    CHECK(rt(std::get<LambdaStep>(ls).t) == "(2 (0) (1 (0)))");

    auto os = decompose_lambda_oplus(T(kFigTree));
    REQUIRE(std::holds_alternative<OplusStep>(os));
    auto& parts = std::get<OplusStep>(os).parts;
    REQUIRE(parts.size() == 4);
    CHECK(rt(parts[0]) == "(1 (0))");
    CHECK(rt(parts[1]) == "(1 (0))");
    CHECK(rt(parts[2]) == "(2 (1 (0)))");
    CHECK(rt(parts[3]) == "(3 (2 (1 (3 (2 (1 (0))) (0)))))");

    auto le = decompose_lambda_oplus(T("(1 (0))"));
    REQUIRE(std::holds_alternative<LambdaStep>(le));
    CHECK(std::get<LambdaStep>(le).index == 0);
    CHECK(std::get<LambdaStep>(le).t.is_trivial());
}

TEST_CASE("golden operator expressions rebuild the worked example") {
    BetaTree fig = T(kFigTree);
    CHECK(eval_op_literal("mu(2, rho[eps], mu(1, rho[mu(2, rho[eps], mu(1, rho[rho[eps]], "
                          "rho[eps]))], mu(1, rho[eps], rho[eps, eps, rho[eps]])))") == fig);
    CHECK(eval_op_literal("nu(2, sigma[sigma[nu(1, sigma[eps, eps, eps], sigma[eps])]], "
                          "sigma[nu(2, sigma[sigma[eps]], sigma[sigma[eps]])])") == fig);
}

TEST_CASE("operator literal rejects malformed input") {
    CHECK(eval_op_literal("  sigma [ eps , eps ]  ") == T("(1 (0) (0))"));
    CHECK_THROWS_AS(eval_op_literal("tau[eps]"), ParseError);
    CHECK_THROWS_AS(eval_op_literal("rho[eps] extra"), ParseError);
    CHECK_THROWS_AS(eval_op_literal("mu(1, eps)"), ParseError);
    CHECK_THROWS_AS(eval_op_literal("mu(99999999999, eps, eps)"), ParseError);
    CHECK_THROWS_AS(eval_op_literal("sigma[]"), std::invalid_argument); // empty part list
    CHECK_THROWS_AS(mu(0, T("(1 (0))"), T("(1 (0))")), std::invalid_argument);
}

TEST_CASE("label bookkeeping of lambda and oplus") {
    for (int n = 1; n <= 6; ++n) {
        for_each_tree(n, [&](const BetaTree& t) {
            StatVector st = statistics(t);
            for (int i = 0; i <= st.root; ++i) {
                BetaTree lt = lambda_op(i, t);
                CHECK(is_valid_tree(lt));
                StatVector sl = statistics(lt);
                CHECK(sl.root == i + 1);
                CHECK(sl.sub == 1);
                CHECK(sl.rzero == st.rzero + (i == 0 ? 1 : 0));
            }
        });
    }
    for (int n = 2; n <= 5; ++n) {
        for_each_tree(n, [&](const BetaTree& u) {
            StatVector su = statistics(u);
            for_each_tree(n, [&](const BetaTree& v) {
                BetaTree s = oplus(u, v);
                CHECK(is_valid_tree(s));
                CHECK(statistics(s).root == su.root + statistics(v).root - 1);
            });
        });
    }
}

TEST_CASE("decompositions round-trip over all small trees") {
    for (int n = 2; n <= 9; ++n) {
        for_each_tree(n, [&](const BetaTree& t) {
            CHECK(recompose(decompose_rho_mu(t)) == t);
            CHECK(recompose(decompose_sigma_nu(t)) == t);
            CHECK(recompose(decompose_lambda_oplus(t)) == t);
        });
    }
}

TEST_CASE("decomposition case split matches root/open/sub") {
    for (int n = 2; n <= 7; ++n) {
        for_each_tree(n, [&](const BetaTree& t) {
            StatVector st = statistics(t);
            CHECK(std::holds_alternative<RhoStep>(decompose_rho_mu(t)) == (st.root == 1));
            CHECK(std::holds_alternative<SigmaStep>(decompose_sigma_nu(t)) == (st.open == 1));
            CHECK(std::holds_alternative<LambdaStep>(decompose_lambda_oplus(t)) == (st.sub == 1));
        });
    }
}
