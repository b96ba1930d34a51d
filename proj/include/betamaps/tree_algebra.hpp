#pragma once

#include "betamaps/tree.hpp"

#include <variant>
#include <vector>

namespace betamaps {

// One step of the rho/mu decomposition. Every nontrivial tree U splits
// uniquely: root(U) = 1 gives the rho case, root(U) > 1 gives U = mu_i(S, T)
// with root(S) = 1 and T nontrivial.
struct RhoStep {
    std::vector<BetaTree> parts;
};
struct MuStep {
    int index = 0;
    BetaTree s;
    BetaTree t;
};
using RhoMuStep = std::variant<RhoStep, MuStep>;

// Dual split: open(U) = 1 gives the sigma case, open(U) > 1 gives
// U = nu_i(S, T) with open(S) = 1 and T nontrivial.
struct SigmaStep {
    std::vector<BetaTree> parts;
};
struct NuStep {
    int index = 0;
    BetaTree s;
    BetaTree t;
};
using SigmaNuStep = std::variant<SigmaStep, NuStep>;

// Classical split: sub(U) = 1 gives U = lambda_i(T); otherwise U is the sum
// of at least two irreducible trees.
struct LambdaStep {
    int index = 0;
    BetaTree t;
};
struct OplusStep {
    std::vector<BetaTree> parts;
};
using LambdaOplusStep = std::variant<LambdaStep, OplusStep>;

// New root labeled i+1 over T whose root is relabeled i; needs 0 <= i <= root(T).
BetaTree lambda_op(int i, BetaTree t);

// Identify the roots; new root label = root(U) + root(V) - 1. Arguments must
// be nontrivial.
BetaTree oplus(BetaTree u, BetaTree v);

// rho(T_1,...,T_k) = lambda_0(T_1) (+) ... (+) lambda_0(T_k); k >= 1.
BetaTree rho(std::vector<BetaTree> parts);

// Graft S at the i-th open node x of T (counted from the root along the
// rightmost path): keep x's label, append S's root children after x's
// children, and add one to every label on the rightmost path from the root
// down to y, where y is x itself when x is a leaf and x's rightmost child
// otherwise. Needs root(S) = 1 and 1 <= i <= open(T); mu(1, S, trivial) = S.
BetaTree mu(int i, BetaTree s, BetaTree t);

// sigma(T_1,...,T_k) = mu_1(rho(T_{k-1},...,T_1,eps), T_k); k >= 1.
BetaTree sigma(std::vector<BetaTree> parts);

// Graft T's root children at the rightmost leaf x of S (keeping the zero
// label of x) and add i-1 to every label on S's rightmost path from the root
// down to x. Needs open(S) = 1 and 1 <= i <= root(T); nu(1, S, trivial) = S.
BetaTree nu(int i, BetaTree s, BetaTree t);

RhoMuStep decompose_rho_mu(BetaTree u);
SigmaNuStep decompose_sigma_nu(BetaTree u);
LambdaOplusStep decompose_lambda_oplus(BetaTree u);

// Tiny prefix grammar for operator expressions used as test fixtures:
//   expr := "eps" | "rho" "[" expr { "," expr } "]"
//         | "sigma" "[" expr { "," expr } "]"
//         | "mu" "(" int "," expr "," expr ")"
//         | "nu" "(" int "," expr "," expr ")"
BetaTree eval_op_literal(std::string_view src);

} // namespace betamaps
