#pragma once

#include "betamaps/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace betamaps {

// Bicolored parse tree of an operator expression. A black node stands for a
// rho (or sigma) application to its child list; the empty black node is the
// trivial tree. A white node labeled i stands for mu_i (or nu_i) and has
// exactly two children. The same expression can be read under either operator
// pair, which is what makes the involution computable by reinterpretation.
struct DecompExpr {
    int white_index = 0; // 0 = black node, >= 1 = white node labeled i
    std::vector<DecompExpr> children;

    bool is_black() const { return white_index == 0; }

    static DecompExpr black(std::vector<DecompExpr> kids = {}) {
        DecompExpr e;
        e.children = std::move(kids);
        return e;
    }
    static DecompExpr white(int i, DecompExpr left, DecompExpr right) {
        DecompExpr e;
        e.white_index = i;
        e.children.push_back(std::move(left));
        e.children.push_back(std::move(right));
        return e;
    }

    DecompExpr() = default;
    DecompExpr(const DecompExpr&) = default;
    DecompExpr(DecompExpr&&) noexcept = default;
    DecompExpr& operator=(const DecompExpr&) = default;
    DecompExpr& operator=(DecompExpr&&) noexcept = default;
    ~DecompExpr();

    bool operator==(const DecompExpr& other) const;
    bool operator!=(const DecompExpr& other) const { return !(*this == other); }
};

enum class DecompKind { rho_mu, sigma_nu };

// kappa(leaf) = 0; kappa(black with children) = 1 + kappa(last child);
// kappa(white i) = i - 1 + kappa(left child). Under sigma/nu parsing this is
// the root label of the evaluated tree; under rho/mu it is the open count.
int kappa(const DecompExpr& e);

// Number of black nodes minus number of white nodes = node count of the
// evaluated tree.
int weight(const DecompExpr& e);

// First structural defect, if any: a white node needs exactly two children,
// a nontrivial black left child, and a label in [1, kappa(right)].
std::optional<std::string> expr_violation(const DecompExpr& e);

// Full recursive decomposition of a valid tree under the chosen operator pair.
DecompExpr parse_expr(const BetaTree& t, DecompKind semantics);

// Inverse of parse_expr under matching semantics; throws on expressions
// outside the valid set.
BetaTree eval_expr(const DecompExpr& e, DecompKind semantics);

// The involution: g(trivial) = trivial, g(rho(T_1,...,T_k)) =
// sigma(g(T_1),...,g(T_k)), g(mu_i(S,T)) = nu_i(g(S), g(T)). Runs on an
// explicit work stack, so path trees far deeper than the call stack are fine.
BetaTree g(const BetaTree& t);

} // namespace betamaps
