#include "betamaps/tree.hpp"

#include <utility>

namespace betamaps {

namespace {

const char* rule_text(TreeRule r) {
    switch (r) {
    case TreeRule::leaf_label: return "leaf rule";
    case TreeRule::root_label: return "root rule";
    case TreeRule::node_label: return "node rule";
    }
    return "?";
}

std::string path_text(const NodePath& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    s += ")";
    return s;
}

} // namespace

BetaTree::BetaTree(const BetaTree& other) : label(other.label) {
    std::vector<std::pair<const BetaTree*, BetaTree*>> work{{&other, this}};
    while (!work.empty()) {
        auto [src, dst] = work.back();
        work.pop_back();
        dst->children.reserve(src->children.size());
        for (const BetaTree& c : src->children)
            dst->children.emplace_back(c.label);
        for (std::size_t i = 0; i < src->children.size(); ++i)
            work.push_back({&src->children[i], &dst->children[i]});
    }
}

BetaTree& BetaTree::operator=(const BetaTree& other) {
    if (this != &other) {
        BetaTree tmp(other);
        *this = std::move(tmp);
    }
    return *this;
}

BetaTree::~BetaTree() {
    if (children.empty()) return;
    std::vector<BetaTree> flat;
    flat.reserve(children.size());
    for (BetaTree& c : children) flat.push_back(std::move(c));
    children.clear();
    while (!flat.empty()) {
        BetaTree t = std::move(flat.back());
        flat.pop_back();
        for (BetaTree& c : t.children) flat.push_back(std::move(c));
        t.children.clear();
    }
}

bool BetaTree::operator==(const BetaTree& other) const {
    std::vector<std::pair<const BetaTree*, const BetaTree*>> work{{this, &other}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (a->label != b->label || a->children.size() != b->children.size())
            return false;
        for (std::size_t i = 0; i < a->children.size(); ++i)
            work.push_back({&a->children[i], &b->children[i]});
    }
    return true;
}

BetaTree parse_raw_tree(std::string_view s) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r'))
            ++i;
    };
    skip();
    if (i >= s.size() || s[i] != '(')
        throw ParseError("expected '('", i);

    BetaTree root;
    std::vector<BetaTree*> open;
    bool done = false;
    while (!done) {
        // at '(' — open a node and read its label
        ++i;
        skip();
        if (i >= s.size() || s[i] < '0' || s[i] > '9')
            throw ParseError("expected nonnegative integer label", i);
        long long v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000LL)
                throw ParseError("label too large", i);
            ++i;
        }
        BetaTree* node;
        if (open.empty()) {
            root.label = static_cast<int>(v);
            node = &root;
        } else {
            open.back()->children.emplace_back(static_cast<int>(v));
            node = &open.back()->children.back();
        }
        open.push_back(node);

        // read children until this node (and possibly ancestors) close
        while (true) {
            skip();
            if (i >= s.size())
                throw ParseError("unexpected end of input", i);
            if (s[i] == ')') {
                ++i;
                open.pop_back();
                if (open.empty()) {
                    skip();
                    if (i != s.size())
                        throw ParseError("trailing characters", i);
                    done = true;
                    break;
                }
                continue;
            }
            if (s[i] == '(') break; // next child of the top node
            throw ParseError("expected '(' or ')'", i);
        }
    }
    return root;
}

std::vector<TreeViolation> validate_tree(const BetaTree& t) {
    std::vector<TreeViolation> out;
    // (node, next child index); immediate child labels give each node's sum,
    // so a single pre-order walk suffices.
    std::vector<std::pair<const BetaTree*, std::size_t>> st{{&t, 0}};
    NodePath path;
    auto report = [&](TreeRule rule, const std::string& msg) {
        out.push_back({path, rule, msg + " at node " + path_text(path)});
    };
    while (!st.empty()) {
        auto& [node, next] = st.back();
        if (next == 0) {
            int sum = child_label_sum(*node);
            bool root = st.size() == 1;
            if (node->label < 0) {
                report(TreeRule::node_label, "negative label");
            } else if (node->is_leaf()) {
                if (root) {
                    if (node->label != 0)
                        report(TreeRule::root_label,
                               "trivial tree must have root label 0, got " +
                                   std::to_string(node->label));
                } else if (node->label != 0) {
                    report(TreeRule::leaf_label,
                           "leaf labeled " + std::to_string(node->label));
                }
            } else if (root) {
                if (node->label != sum + 1)
                    report(TreeRule::root_label,
                           "root label " + std::to_string(node->label) +
                               " must equal 1 + children sum " + std::to_string(sum));
            } else if (node->label > sum + 1) {
                report(TreeRule::node_label,
                       "label " + std::to_string(node->label) +
                           " exceeds 1 + children sum " + std::to_string(sum));
            }
        }
        if (next < node->children.size()) {
            path.push_back(static_cast<int>(next));
            const BetaTree* c = &node->children[next];
            ++next;
            st.push_back({c, 0});
        } else {
            st.pop_back();
            if (!path.empty()) path.pop_back();
        }
    }
    return out;
}

bool is_valid_tree(const BetaTree& t) { return validate_tree(t).empty(); }

BetaTree parse_tree(std::string_view text) {
    BetaTree t = parse_raw_tree(text);
    auto violations = validate_tree(t);
    if (!violations.empty()) {
        std::string what = "invalid beta(0,1)-tree: ";
        what += rule_text(violations.front().rule);
        what += ": ";
        what += violations.front().message;
        if (violations.size() > 1)
            what += " (+" + std::to_string(violations.size() - 1) + " more)";
        throw ValidationError(what, std::move(violations));
    }
    return t;
}

std::string render_tree(const BetaTree& t) {
    std::string out;
    std::vector<std::pair<const BetaTree*, std::size_t>> st{{&t, 0}};
    out.push_back('(');
    out += std::to_string(t.label);
    while (!st.empty()) {
        auto& [node, next] = st.back();
        if (next < node->children.size()) {
            const BetaTree& c = node->children[next];
            ++next;
            out += " (";
            out += std::to_string(c.label);
            st.push_back({&c, 0});
        } else {
            out.push_back(')');
            st.pop_back();
        }
    }
    return out;
}

int tree_size(const BetaTree& t) {
    int n = 0;
    std::vector<const BetaTree*> st{&t};
    while (!st.empty()) {
        const BetaTree* v = st.back();
        st.pop_back();
        ++n;
        for (const BetaTree& c : v->children) st.push_back(&c);
    }
    return n;
}

int child_label_sum(const BetaTree& t) {
    int s = 0;
    for (const BetaTree& c : t.children) s += c.label;
    return s;
}

bool is_excessive(const BetaTree& t) { return t.label > child_label_sum(t); }

StatVector statistics(const BetaTree& t) {
    StatVector sv;
    sv.nodes = tree_size(t);
    sv.edges = sv.nodes - 1;
    if (t.is_trivial()) return sv; // rzero = rmod = open = exc = 0 by convention

    sv.root = t.label;
    sv.sub = static_cast<int>(t.children.size());

    std::vector<const BetaTree*> st{&t};
    while (!st.empty()) {
        const BetaTree* v = st.back();
        st.pop_back();
        if (is_excessive(*v)) ++sv.exc;
        for (const BetaTree& c : v->children) st.push_back(&c);
    }

    for (const BetaTree* v = &t;; v = &v->children.back()) {
        if (v->label == 0) ++sv.rzero;
        if (!is_excessive(*v)) ++sv.rmod;
        if (v->is_leaf()) {
            ++sv.open; // the rightmost leaf is always open
            break;
        }
        const BetaTree& rc = v->children.back();
        if (!rc.is_leaf() && !is_excessive(rc)) ++sv.open;
    }
    return sv;
}

std::vector<NodePath> open_nodes(const BetaTree& t) {
    if (t.is_trivial())
        throw std::invalid_argument("open_nodes: trivial tree has no rightmost path");
    std::vector<NodePath> out;
    NodePath path;
    for (const BetaTree* v = &t;; v = &v->children.back()) {
        if (v->is_leaf()) {
            out.push_back(path);
            break;
        }
        const BetaTree& rc = v->children.back();
        if (!rc.is_leaf() && !is_excessive(rc)) out.push_back(path);
        path.push_back(static_cast<int>(v->children.size()) - 1);
    }
    return out;
}

const BetaTree& node_at(const BetaTree& t, const NodePath& path) {
    const BetaTree* v = &t;
    for (int idx : path) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= v->children.size())
            throw std::out_of_range("node_at: child index " + std::to_string(idx) +
                                    " out of range");
        v = &v->children[idx];
    }
    return *v;
}

} // namespace betamaps
