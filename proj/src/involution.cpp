#include "betamaps/involution.hpp"

#include "betamaps/tree_algebra.hpp"

#include <stdexcept>
#include <utility>
#include <variant>

namespace betamaps {

DecompExpr::~DecompExpr() {
    if (children.empty()) return;
    std::vector<DecompExpr> flat;
    for (DecompExpr& c : children) flat.push_back(std::move(c));
    children.clear();
    while (!flat.empty()) {
        DecompExpr e = std::move(flat.back());
        flat.pop_back();
        for (DecompExpr& c : e.children) flat.push_back(std::move(c));
        e.children.clear();
    }
}

bool DecompExpr::operator==(const DecompExpr& other) const {
    std::vector<std::pair<const DecompExpr*, const DecompExpr*>> work{{this, &other}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (a->white_index != b->white_index || a->children.size() != b->children.size())
            return false;
        for (std::size_t i = 0; i < a->children.size(); ++i)
            work.push_back({&a->children[i], &b->children[i]});
    }
    return true;
}

int kappa(const DecompExpr& e) {
    // kappa only ever descends through last (black) or left (white) children,
    // so a simple loop accumulates it.
    int k = 0;
    const DecompExpr* v = &e;
    while (true) {
        if (v->is_black()) {
            if (v->children.empty()) return k;
            k += 1;
            v = &v->children.back();
        } else {
            if (v->children.empty())
                throw std::invalid_argument("kappa: white node without children");
            k += v->white_index - 1;
            v = &v->children.front();
        }
    }
}

int weight(const DecompExpr& e) {
    int w = 0;
    std::vector<const DecompExpr*> st{&e};
    while (!st.empty()) {
        const DecompExpr* v = st.back();
        st.pop_back();
        w += v->is_black() ? 1 : -1;
        for (const DecompExpr& c : v->children) st.push_back(&c);
    }
    return w;
}

std::optional<std::string> expr_violation(const DecompExpr& e) {
    // structure first, so the kappa pass can descend safely
    std::vector<const DecompExpr*> st{&e};
    while (!st.empty()) {
        const DecompExpr* v = st.back();
        st.pop_back();
        if (!v->is_black()) {
            if (v->white_index < 1) return "white node with label < 1";
            if (v->children.size() != 2) return "white node without exactly two children";
            const DecompExpr& left = v->children.front();
            if (!left.is_black() || left.children.empty())
                return "white node's left child must be a nontrivial black node";
        }
        for (const DecompExpr& c : v->children) st.push_back(&c);
    }
    st.push_back(&e);
    while (!st.empty()) {
        const DecompExpr* v = st.back();
        st.pop_back();
        if (!v->is_black()) {
            int k = kappa(v->children.back());
            if (v->white_index > k)
                return "white label " + std::to_string(v->white_index) +
                       " outside [1, kappa(right) = " + std::to_string(k) + "]";
        }
        for (const DecompExpr& c : v->children) st.push_back(&c);
    }
    return std::nullopt;
}

DecompExpr parse_expr(const BetaTree& t, DecompKind semantics) {
    // Post-order over an explicit stack: decompose each pending tree, then
    // assemble its expression once the children are done.
    struct Assemble {
        int white_index;       // 0 for black
        std::size_t arity;
    };
    std::vector<std::variant<BetaTree, Assemble>> tasks;
    std::vector<DecompExpr> done;
    tasks.emplace_back(BetaTree(t));
    while (!tasks.empty()) {
        auto task = std::move(tasks.back());
        tasks.pop_back();
        if (auto* fin = std::get_if<Assemble>(&task)) {
            std::vector<DecompExpr> kids;
            kids.reserve(fin->arity);
            for (std::size_t i = done.size() - fin->arity; i < done.size(); ++i)
                kids.push_back(std::move(done[i]));
            done.resize(done.size() - fin->arity);
            if (fin->white_index == 0) {
                done.push_back(DecompExpr::black(std::move(kids)));
            } else {
                done.push_back(DecompExpr::white(fin->white_index, std::move(kids[0]),
                                                 std::move(kids[1])));
            }
            continue;
        }
        BetaTree cur = std::move(std::get<BetaTree>(task));
        if (cur.is_trivial()) {
            done.push_back(DecompExpr::black());
            continue;
        }
        if (semantics == DecompKind::rho_mu) {
            auto step = decompose_rho_mu(std::move(cur));
            if (auto* rs = std::get_if<RhoStep>(&step)) {
                tasks.emplace_back(Assemble{0, rs->parts.size()});
                for (auto it = rs->parts.rbegin(); it != rs->parts.rend(); ++it)
                    tasks.emplace_back(std::move(*it));
            } else {
                auto& ms = std::get<MuStep>(step);
                tasks.emplace_back(Assemble{ms.index, 2});
                tasks.emplace_back(std::move(ms.t));
                tasks.emplace_back(std::move(ms.s));
            }
        } else {
            auto step = decompose_sigma_nu(std::move(cur));
            if (auto* ss = std::get_if<SigmaStep>(&step)) {
                tasks.emplace_back(Assemble{0, ss->parts.size()});
                for (auto it = ss->parts.rbegin(); it != ss->parts.rend(); ++it)
                    tasks.emplace_back(std::move(*it));
            } else {
                auto& ns = std::get<NuStep>(step);
                tasks.emplace_back(Assemble{ns.index, 2});
                tasks.emplace_back(std::move(ns.t));
                tasks.emplace_back(std::move(ns.s));
            }
        }
    }
    return std::move(done.back());
}

BetaTree eval_expr(const DecompExpr& e, DecompKind semantics) {
    if (auto bad = expr_violation(e))
        throw std::invalid_argument("eval_expr: " + *bad);
    struct Build {
        int white_index;
        std::size_t arity;
    };
    std::vector<std::variant<const DecompExpr*, Build>> tasks;
    std::vector<BetaTree> done;
    tasks.emplace_back(&e);
    while (!tasks.empty()) {
        auto task = tasks.back();
        tasks.pop_back();
        if (auto* b = std::get_if<Build>(&task)) {
            std::vector<BetaTree> args;
            args.reserve(b->arity);
            for (std::size_t i = done.size() - b->arity; i < done.size(); ++i)
                args.push_back(std::move(done[i]));
            done.resize(done.size() - b->arity);
            if (b->white_index == 0) {
                done.push_back(semantics == DecompKind::rho_mu ? rho(std::move(args))
                                                               : sigma(std::move(args)));
            } else {
                BetaTree t = std::move(args[1]);
                BetaTree s = std::move(args[0]);
                done.push_back(semantics == DecompKind::rho_mu
                                   ? mu(b->white_index, std::move(s), std::move(t))
                                   : nu(b->white_index, std::move(s), std::move(t)));
            }
            continue;
        }
        const DecompExpr* v = std::get<const DecompExpr*>(task);
        if (v->is_black() && v->children.empty()) {
            done.emplace_back(0);
            continue;
        }
        tasks.emplace_back(Build{v->white_index, v->children.size()});
        for (auto it = v->children.rbegin(); it != v->children.rend(); ++it)
            tasks.emplace_back(&*it);
    }
    return std::move(done.back());
}

BetaTree g(const BetaTree& t) {
    // Reinterpretation of the rho/mu decomposition under sigma/nu, run
    // bottom-up on an explicit stack.
    struct Rebuild {
        int white_index;     // 0: sigma over `arity` parts; else nu index
        std::size_t arity;
    };
    std::vector<std::variant<BetaTree, Rebuild>> tasks;
    std::vector<BetaTree> done;
    tasks.emplace_back(BetaTree(t));
    while (!tasks.empty()) {
        auto task = std::move(tasks.back());
        tasks.pop_back();
        if (auto* rb = std::get_if<Rebuild>(&task)) {
            std::vector<BetaTree> args;
            args.reserve(rb->arity);
            for (std::size_t i = done.size() - rb->arity; i < done.size(); ++i)
                args.push_back(std::move(done[i]));
            done.resize(done.size() - rb->arity);
            if (rb->white_index == 0) {
                done.push_back(sigma(std::move(args)));
            } else {
                BetaTree second = std::move(args[1]);
                BetaTree first = std::move(args[0]);
                done.push_back(nu(rb->white_index, std::move(first), std::move(second)));
            }
            continue;
        }
        BetaTree cur = std::move(std::get<BetaTree>(task));
        if (cur.is_trivial()) {
            done.push_back(std::move(cur));
            continue;
        }
        auto step = decompose_rho_mu(std::move(cur));
        if (auto* rs = std::get_if<RhoStep>(&step)) {
            tasks.emplace_back(Rebuild{0, rs->parts.size()});
            for (auto it = rs->parts.rbegin(); it != rs->parts.rend(); ++it)
                tasks.emplace_back(std::move(*it));
        } else {
            auto& ms = std::get<MuStep>(step);
            tasks.emplace_back(Rebuild{ms.index, 2});
            tasks.emplace_back(std::move(ms.t));
            tasks.emplace_back(std::move(ms.s));
        }
    }
    return std::move(done.back());
}

} // namespace betamaps
