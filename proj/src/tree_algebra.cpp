#include "betamaps/tree_algebra.hpp"

#include <stdexcept>
#include <string>

namespace betamaps {

namespace {

// Nodes of the rightmost path, root first.
std::vector<BetaTree*> rightmost_path(BetaTree& t) {
    std::vector<BetaTree*> path{&t};
    while (!path.back()->is_leaf()) path.push_back(&path.back()->children.back());
    return path;
}

bool node_is_open(const BetaTree& v) {
    if (v.is_leaf()) return true;
    const BetaTree& rc = v.children.back();
    return !rc.is_leaf() && !is_excessive(rc);
}

int open_count(const BetaTree& t) {
    if (t.is_trivial()) return 0;
    int n = 0;
    for (const BetaTree* v = &t;; v = &v->children.back()) {
        if (node_is_open(*v)) ++n;
        if (v->is_leaf()) break;
    }
    return n;
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

} // namespace

BetaTree lambda_op(int i, BetaTree t) {
    if (i < 0 || i > t.label)
        bad("lambda: index " + std::to_string(i) + " not in [0, root(T) = " +
            std::to_string(t.label) + "]");
    t.label = i;
    std::vector<BetaTree> kids;
    kids.push_back(std::move(t));
    return BetaTree(i + 1, std::move(kids));
}

BetaTree oplus(BetaTree u, BetaTree v) {
    if (u.is_trivial() || v.is_trivial()) bad("oplus: arguments must be nontrivial");
    u.label += v.label - 1;
    u.children.reserve(u.children.size() + v.children.size());
    for (BetaTree& c : v.children) u.children.push_back(std::move(c));
    return u;
}

BetaTree rho(std::vector<BetaTree> parts) {
    if (parts.empty()) bad("rho: needs at least one part");
    std::vector<BetaTree> kids;
    kids.reserve(parts.size());
    for (BetaTree& p : parts) {
        p.label = 0; // old root relabeled by lambda_0
        kids.push_back(std::move(p));
    }
    return BetaTree(1, std::move(kids));
}

BetaTree mu(int i, BetaTree s, BetaTree t) {
    if (s.label != 1) bad("mu: root(S) must be 1, got " + std::to_string(s.label));
    if (t.is_trivial()) {
        if (i != 1) bad("mu: index must be 1 when T is trivial");
        return s;
    }
    if (i < 1) bad("mu: index must be >= 1");
    auto path = rightmost_path(t);
    BetaTree* x = nullptr;
    std::size_t y_depth = 0;
    int seen = 0;
    for (std::size_t d = 0; d < path.size(); ++d) {
        if (node_is_open(*path[d]) && ++seen == i) {
            x = path[d];
            y_depth = x->is_leaf() ? d : d + 1; // y = x, or x's rightmost child
            break;
        }
    }
    if (!x)
        bad("mu: index " + std::to_string(i) + " exceeds open(T) = " +
            std::to_string(seen));
    for (std::size_t d = 0; d <= y_depth; ++d) ++path[d]->label;
    x->children.reserve(x->children.size() + s.children.size());
    for (BetaTree& c : s.children) x->children.push_back(std::move(c));
    return t;
}

BetaTree sigma(std::vector<BetaTree> parts) {
    if (parts.empty()) bad("sigma: needs at least one part");
    BetaTree last = std::move(parts.back());
    parts.pop_back();
    std::vector<BetaTree> rev;
    rev.reserve(parts.size() + 1);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) rev.push_back(std::move(*it));
    rev.emplace_back(0); // trailing trivial tree
    return mu(1, rho(std::move(rev)), std::move(last));
}

BetaTree nu(int i, BetaTree s, BetaTree t) {
    if (open_count(s) != 1)
        bad("nu: open(S) must be 1, got " + std::to_string(open_count(s)));
    if (t.is_trivial()) {
        if (i != 1) bad("nu: index must be 1 when T is trivial");
        return s;
    }
    if (i < 1 || i > t.label)
        bad("nu: index " + std::to_string(i) + " not in [1, root(T) = " +
            std::to_string(t.label) + "]");
    auto path = rightmost_path(s);
    for (BetaTree* v : path) v->label += i - 1;
    path.back()->children = std::move(t.children);
    return s;
}

RhoMuStep decompose_rho_mu(BetaTree u) {
    if (u.is_trivial()) bad("decompose_rho_mu: trivial tree");
    if (u.label == 1) {
        // undo one lambda_0 per root child
        RhoStep step;
        step.parts.reserve(u.children.size());
        for (BetaTree& c : u.children) {
            c.label = c.is_leaf() ? 0 : 1 + child_label_sum(c);
            step.parts.push_back(std::move(c));
        }
        return step;
    }
    // x is the parent of the first 0-labeled node on the rightmost path
    auto path = rightmost_path(u);
    std::size_t k = 1;
    while (path[k]->label != 0) ++k;
    BetaTree* x = path[k - 1];

    // S's children are the maximal all-zero suffix of x's children;
    // y, the node that got +1 for x's rightmost pre-graft child, is the last
    // child before the suffix (or x itself when the suffix is everything).
    std::size_t j = x->children.size();
    while (j > 0 && x->children[j - 1].label == 0) --j;

    MuStep step;
    step.s.label = 1;
    step.s.children.reserve(x->children.size() - j);
    for (std::size_t c = j; c < x->children.size(); ++c)
        step.s.children.push_back(std::move(x->children[c]));
    x->children.resize(j);

    for (std::size_t d = 0; d < k; ++d) --path[d]->label;
    if (j > 0) --x->children[j - 1].label;

    // index of x among the open nodes of the remainder
    int idx = 0;
    bool found = false;
    for (const BetaTree* v = &u;; v = &v->children.back()) {
        if (node_is_open(*v)) ++idx;
        if (v == x) {
            found = node_is_open(*v);
            break;
        }
        if (v->is_leaf()) break;
    }
    if (!found)
        throw std::logic_error("decompose_rho_mu: graft node is not open in remainder");
    step.index = idx;
    step.t = std::move(u);
    return step;
}

namespace {

// Undo the sigma construction: rho-split S' = rho(T_{k-1},...,T_1,eps), reverse, and
// put back the final argument.
std::vector<BetaTree> sigma_parts_from(BetaTree rho_form, BetaTree last) {
    auto inner = decompose_rho_mu(std::move(rho_form));
    auto* rs = std::get_if<RhoStep>(&inner);
    if (!rs) throw std::logic_error("sigma split: expected a rho form");
    if (rs->parts.empty() || !rs->parts.back().is_trivial())
        throw std::logic_error("sigma split: missing trailing trivial part");
    rs->parts.pop_back();
    std::vector<BetaTree> parts;
    parts.reserve(rs->parts.size() + 1);
    for (auto it = rs->parts.rbegin(); it != rs->parts.rend(); ++it)
        parts.push_back(std::move(*it));
    parts.push_back(std::move(last));
    return parts;
}

} // namespace

SigmaNuStep decompose_sigma_nu(BetaTree u) {
    if (u.is_trivial()) bad("decompose_sigma_nu: trivial tree");
    if (open_count(u) == 1) {
        SigmaStep step;
        if (u.label == 1) {
            // u is already the rho form; the final sigma argument is trivial
            step.parts = sigma_parts_from(std::move(u), BetaTree(0));
        } else {
            auto outer = decompose_rho_mu(std::move(u));
            auto* ms = std::get_if<MuStep>(&outer);
            if (!ms || ms->index != 1)
                throw std::logic_error("sigma split: expected mu_1 wrapper");
            step.parts = sigma_parts_from(std::move(ms->s), std::move(ms->t));
        }
        return step;
    }

    // nu case: scan the rightmost path for the unique graft node.
    auto path = rightmost_path(u);
    int hits = 0;
    std::size_t hit_depth = 0;
    for (std::size_t d = 0; d < path.size() - 1; ++d) { // leaf cannot host T
        int delta = path[d]->label;
        if (delta + 1 > 1 + child_label_sum(*path[d]))
            continue; // i would exceed root(T)
        bool ok = true;
        for (std::size_t a = 0; a <= d; ++a)
            if (path[a]->label < delta) { ok = false; break; }
        if (!ok) continue;
        // candidate S: strip the graft, subtract delta along the path
        BetaTree s(u); // copy
        {
            auto spath = rightmost_path(s);
            spath.resize(d + 1);
            spath.back()->children.clear();
            for (BetaTree* v : spath) v->label -= delta;
        }
        if (open_count(s) != 1 || !is_valid_tree(s)) continue;
        ++hits;
        hit_depth = d;
    }
    if (hits != 1)
        throw std::logic_error("decompose_sigma_nu: nu split not unique (" +
                               std::to_string(hits) + " candidates)");

    NuStep step;
    BetaTree* x = path[hit_depth];
    step.index = x->label + 1;
    step.t.label = 1 + child_label_sum(*x);
    step.t.children = std::move(x->children);
    x->children.clear();
    for (std::size_t a = 0; a <= hit_depth; ++a) path[a]->label -= step.index - 1;
    step.s = std::move(u);
    return step;
}

LambdaOplusStep decompose_lambda_oplus(BetaTree u) {
    if (u.is_trivial()) bad("decompose_lambda_oplus: trivial tree");
    if (u.children.size() == 1) {
        LambdaStep step;
        BetaTree& c = u.children.front();
        step.index = c.label;
        c.label = c.is_leaf() ? 0 : 1 + child_label_sum(c);
        step.t = std::move(c);
        return step;
    }
    OplusStep step;
    step.parts.reserve(u.children.size());
    for (BetaTree& c : u.children) {
        BetaTree part(c.label + 1);
        part.children.push_back(std::move(c));
        step.parts.push_back(std::move(part));
    }
    return step;
}

namespace {

struct LiteralParser {
    std::string_view src;
    std::size_t pos = 0;

    void skip() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\n' || src[pos] == '\t'))
            ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
    std::string word() {
        skip();
        std::size_t start = pos;
        while (pos < src.size() && src[pos] >= 'a' && src[pos] <= 'z') ++pos;
        return std::string(src.substr(start, pos - start));
    }
    int number() {
        skip();
        if (pos >= src.size() || src[pos] < '0' || src[pos] > '9')
            throw ParseError("expected integer", pos);
        long long v = 0;
        while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') {
            v = v * 10 + (src[pos++] - '0');
            if (v > 1000000000LL) throw ParseError("index too large", pos);
        }
        return static_cast<int>(v);
    }

    BetaTree expr() {
        std::string w = word();
        if (w == "eps") return BetaTree(0);
        if (w == "rho" || w == "sigma") {
            expect('[');
            std::vector<BetaTree> parts;
            if (!eat(']')) {
                parts.push_back(expr());
                while (eat(',')) parts.push_back(expr());
                expect(']');
            }
            return w == "rho" ? rho(std::move(parts)) : sigma(std::move(parts));
        }
        if (w == "mu" || w == "nu") {
            expect('(');
            int i = number();
            expect(',');
            BetaTree s = expr();
            expect(',');
            BetaTree t = expr();
            expect(')');
            return w == "mu" ? mu(i, std::move(s), std::move(t))
                             : nu(i, std::move(s), std::move(t));
        }
        throw ParseError("unknown operator '" + w + "'", pos);
    }
};

} // namespace

BetaTree eval_op_literal(std::string_view src) {
    LiteralParser p{src};
    BetaTree t = p.expr();
    p.skip();
    if (p.pos != src.size()) throw ParseError("trailing characters", p.pos);
    return t;
}

} // namespace betamaps
