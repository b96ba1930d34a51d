#include "betamaps/bicubic.hpp"

#include "betamaps/tree_algebra.hpp"

#include <algorithm>
#include <deque>
#include <variant>

namespace betamaps {

namespace {

struct Checked {
    MapAnalysis a;
    std::vector<std::string> violations;
};

Checked analyze_impl(const BicubicMap& m) {
    Checked out;
    auto& bad = out.violations;
    int n = m.dart_count();

    if (n == 0 || n % 6 != 0) {
        bad.push_back("dart count must be a positive multiple of 6");
        return out;
    }
    if (static_cast<int>(m.rot.size()) != n) {
        bad.push_back("rot and alpha must have equal size");
        return out;
    }
    if (m.root < 0 || m.root >= n) {
        bad.push_back("root dart out of range");
        return out;
    }
    auto in_range = [&](const std::vector<int>& p) {
        for (int v : p)
            if (v < 0 || v >= n) return false;
        return true;
    };
    if (!in_range(m.alpha) || !in_range(m.rot)) {
        bad.push_back("permutation entry out of range");
        return out;
    }
    for (int d = 0; d < n; ++d) {
        if (m.alpha[d] == d) {
            bad.push_back("alpha has a fixed point at dart " + std::to_string(d));
            return out;
        }
        if (m.alpha[m.alpha[d]] != d) {
            bad.push_back("alpha is not an involution at dart " + std::to_string(d));
            return out;
        }
    }
    for (int d = 0; d < n; ++d) {
        if (m.rot[d] == d || m.rot[m.rot[d]] == d || m.rot[m.rot[m.rot[d]]] != d) {
            bad.push_back("not 3-regular: rot orbit of dart " + std::to_string(d) +
                          " does not have size 3");
            return out;
        }
    }

    MapAnalysis& a = out.a;
    a.vertex_of.assign(n, -1);
    std::vector<int> vrep; // one dart per vertex
    for (int d = 0; d < n; ++d) {
        if (a.vertex_of[d] >= 0) continue;
        int id = a.vertex_count++;
        vrep.push_back(d);
        for (int e = d; a.vertex_of[e] < 0; e = m.rot[e]) a.vertex_of[e] = id;
    }
    a.edge_count = n / 2;

    // connectivity under {alpha, rot}
    {
        std::vector<char> seen(n, 0);
        std::vector<int> st{m.root};
        seen[m.root] = 1;
        int cnt = 0;
        while (!st.empty()) {
            int d = st.back();
            st.pop_back();
            ++cnt;
            for (int e : {m.alpha[d], m.rot[d]})
                if (!seen[e]) {
                    seen[e] = 1;
                    st.push_back(e);
                }
        }
        if (cnt != n) bad.push_back("disconnected");
    }

    // vertex 2-coloring, root vertex black
    a.vertex_color.assign(a.vertex_count, -1);
    a.vertex_color[a.vertex_of[m.root]] = 0;
    {
        std::vector<int> st{a.vertex_of[m.root]};
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            int d = vrep[v];
            for (int e : {d, m.rot[d], m.rot[m.rot[d]]}) {
                int u = a.vertex_of[m.alpha[e]];
                int want = 1 - a.vertex_color[v];
                if (a.vertex_color[u] < 0) {
                    a.vertex_color[u] = want;
                    st.push_back(u);
                } else if (a.vertex_color[u] != want) {
                    bad.push_back("not bipartite");
                    return out;
                }
            }
        }
    }

    // faces: orbits of rot[alpha[d]]
    a.face_of.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        if (a.face_of[d] >= 0) continue;
        int id = a.face_count++;
        for (int e = d; a.face_of[e] < 0; e = m.face_next(e)) a.face_of[e] = id;
    }

    if (a.vertex_count - a.edge_count + a.face_count != 2)
        bad.push_back("not planar: V - E + F = " +
                      std::to_string(a.vertex_count - a.edge_count + a.face_count));

    // face 3-coloring: colors 1,2,3 counterclockwise around white vertices,
    // root face colored 3
    a.face_color.assign(a.face_count, 0);
    a.face_color[a.face_of[m.root]] = 3;
    {
        std::vector<std::vector<std::pair<int, int>>> adj(a.face_count); // (face, delta)
        for (int d = 0; d < n; ++d) {
            if (a.vertex_color[a.vertex_of[d]] != 1) continue;
            int f = a.face_of[d];
            int gnext = a.face_of[m.rot[d]];
            adj[f].push_back({gnext, 1});
            adj[gnext].push_back({f, -1});
        }
        std::vector<int> st{a.face_of[m.root]};
        while (!st.empty()) {
            int f = st.back();
            st.pop_back();
            for (auto [g, delta] : adj[f]) {
                int want = (a.face_color[f] - 1 + delta + 3) % 3 + 1;
                if (a.face_color[g] == 0) {
                    a.face_color[g] = want;
                    st.push_back(g);
                } else if (a.face_color[g] != want) {
                    bad.push_back("face 3-coloring inconsistent");
                    return out;
                }
            }
        }
        for (int f = 0; f < a.face_count; ++f)
            if (a.face_color[f] == 0) {
                bad.push_back("face 3-coloring incomplete");
                return out;
            }
        // every vertex must see all three colors
        for (int d = 0; d < n; ++d) {
            int f1 = a.face_color[a.face_of[d]];
            int f2 = a.face_color[a.face_of[m.rot[d]]];
            if (f1 == f2) {
                bad.push_back("two faces of one vertex share a color");
                return out;
            }
        }
    }
    return out;
}

[[noreturn]] void bad_arg(const std::string& what) { throw std::invalid_argument(what); }

// Darts of the vertex of d, starting at d.
std::array<int, 3> vertex_darts(const BicubicMap& m, int d) {
    return {d, m.rot[d], m.rot[m.rot[d]]};
}

int face_at_vertex_with_color(const BicubicMap& m, const MapAnalysis& a, int d, int color) {
    for (int e : vertex_darts(m, d))
        if (a.face_color[a.face_of[e]] == color) return a.face_of[e];
    throw std::logic_error("vertex without a face of color " + std::to_string(color));
}

MapStats statistics_impl(const BicubicMap& m, const MapAnalysis& a) {
    MapStats st;
    int n = m.dart_count();
    int r3 = a.face_of[m.root];
    int r1 = face_at_vertex_with_color(m, a, m.root, 1);
    int r2 = face_at_vertex_with_color(m, a, m.root, 2);
    int s1 = face_at_vertex_with_color(m, a, m.alpha[m.root], 1);

    std::vector<char> f1_touch(a.face_count, 0), f3_touch(a.face_count, 0);
    for (int d = 0; d < n; ++d) {
        if (d > m.alpha[d]) continue; // one dart per edge
        int f = a.face_of[d], g = a.face_of[m.alpha[d]];
        for (int k = 0; k < 2; ++k) {
            if (g == r3 && a.face_color[f] == 1) f1_touch[f] = 1;
            if (g == r2 && a.face_color[f] == 3) f3_touch[f] = 1;
            std::swap(f, g);
        }
        if ((f == s1 && g == r3) || (f == r3 && g == s1)) ++st.s1r3;
    }
    st.f1r3 = static_cast<int>(std::count(f1_touch.begin(), f1_touch.end(), 1));
    st.f3r2 = static_cast<int>(std::count(f3_touch.begin(), f3_touch.end(), 1));
    st.one = static_cast<int>(std::count(a.face_color.begin(), a.face_color.end(), 1));

    std::vector<char> has_r1(a.vertex_count, 0), has_r2(a.vertex_count, 0);
    for (int d = 0; d < n; ++d) {
        if (a.face_of[d] == r1) has_r1[a.vertex_of[d]] = 1;
        if (a.face_of[d] == r2) has_r2[a.vertex_of[d]] = 1;
    }
    st.b = 0;
    for (int v = 0; v < a.vertex_count; ++v)
        if (a.vertex_color[v] == 0 && has_r1[v] && has_r2[v]) ++st.b;
    return st;
}

// Removes the listed darts, renumbering the rest and keeping orientation.
BicubicMap compact(const BicubicMap& m, const std::vector<int>& dead) {
    std::vector<char> drop(m.dart_count(), 0);
    for (int d : dead) drop[d] = 1;
    std::vector<int> newid(m.dart_count(), -1);
    int next = 0;
    for (int d = 0; d < m.dart_count(); ++d)
        if (!drop[d]) newid[d] = next++;
    BicubicMap out;
    out.alpha.resize(next);
    out.rot.resize(next);
    for (int d = 0; d < m.dart_count(); ++d) {
        if (drop[d]) continue;
        out.alpha[newid[d]] = newid[m.alpha[d]];
        out.rot[newid[d]] = newid[m.rot[d]];
    }
    out.root = newid[m.root];
    return out;
}

} // namespace

std::vector<std::string> validate_map(const BicubicMap& m) { return analyze_impl(m).violations; }

MapAnalysis analyze_map(const BicubicMap& m) {
    Checked c = analyze_impl(m);
    if (!c.violations.empty()) {
        std::string what = "invalid bicubic map: " + c.violations.front();
        if (c.violations.size() > 1)
            what += " (+" + std::to_string(c.violations.size() - 1) + " more)";
        throw MapError(what, std::move(c.violations));
    }
    return std::move(c.a);
}

BicubicMap theta() {
    BicubicMap m;
    m.alpha = {3, 4, 5, 0, 1, 2};
    // black vertex darts 0,1,2 ccw; white vertex 3,5,4 ccw
    m.rot = {1, 2, 0, 5, 3, 4};
    m.root = 0;
    return m;
}

BicubicMap op1(const BicubicMap& m) {
    BicubicMap out = m;
    int n = out.dart_count();
    out.alpha.resize(n + 6);
    out.rot.resize(n + 6);
    int d0 = out.root, e0 = m.alpha[d0];
    // darts of the new white vertex a and black vertex b
    int a1 = n, a2 = n + 1, a3 = n + 2, b2 = n + 3, b3 = n + 4, b4 = n + 5;
    out.alpha[d0] = a1;
    out.alpha[a1] = d0;
    out.alpha[a2] = b2;
    out.alpha[b2] = a2;
    out.alpha[a3] = b3;
    out.alpha[b3] = a3;
    out.alpha[b4] = e0;
    out.alpha[e0] = b4;
    out.rot[a3] = a2;
    out.rot[a2] = a1;
    out.rot[a1] = a3;
    out.rot[b4] = b2;
    out.rot[b2] = b3;
    out.rot[b3] = b4;
    return out;
}

BicubicMap op2(const BicubicMap& m, int i) {
    MapAnalysis a = analyze_map(m);
    if (i < 1) bad_arg("op2: index must be >= 1");

    // walk the root face clockwise (against the face orbit), looking for the
    // first edge of the i-th distinct 1-colored face across the boundary
    int d0 = m.root;
    int dc = -1;
    {
        std::vector<char> seen(a.face_count, 0);
        int distinct = 0;
        for (int cur = m.face_prev(d0); cur != d0; cur = m.face_prev(cur)) {
            int across = a.face_of[m.alpha[cur]];
            if (a.face_color[across] == 1 && !seen[across]) {
                seen[across] = 1;
                if (++distinct == i) {
                    dc = cur;
                    break;
                }
            }
        }
        if (dc < 0)
            bad_arg("op2: index " + std::to_string(i) + " exceeds f1r3 = " +
                    std::to_string(distinct));
    }
    int tc = m.alpha[dc], e0 = m.alpha[d0];

    BicubicMap out = m;
    int n = out.dart_count();
    out.alpha.resize(n + 6);
    out.rot.resize(n + 6);
    // darts of the new black vertex A and white vertex B
    int As = n, Ab = n + 1, Aq = n + 2, Br = n + 3, Ba = n + 4, Bcb = n + 5;
    out.alpha[d0] = Br;
    out.alpha[Br] = d0;
    out.alpha[e0] = As;
    out.alpha[As] = e0;
    out.alpha[dc] = Aq;
    out.alpha[Aq] = dc;
    out.alpha[tc] = Bcb;
    out.alpha[Bcb] = tc;
    out.alpha[Ab] = Ba;
    out.alpha[Ba] = Ab;
    out.rot[Ab] = Aq;
    out.rot[Aq] = As;
    out.rot[As] = Ab;
    out.rot[Bcb] = Ba;
    out.rot[Ba] = Br;
    out.rot[Br] = Bcb;
    return out;
}

BicubicMap op3(std::vector<BicubicMap> parts) {
    if (parts.size() < 2) bad_arg("op3: needs at least two parts");
    std::vector<int> offset(parts.size()), sig(parts.size()), tau(parts.size());
    int total = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        MapStats st = map_statistics(parts[j]);
        if (st.s1r3 != 1)
            bad_arg("op3: part " + std::to_string(j) + " is reducible (s1r3 = " +
                    std::to_string(st.s1r3) + ")");
        offset[j] = total;
        total += parts[j].dart_count();
        sig[j] = offset[j] + parts[j].face_next(parts[j].root);
        tau[j] = offset[j] + parts[j].alpha[parts[j].face_next(parts[j].root)];
    }
    BicubicMap out;
    out.alpha.resize(total);
    out.rot.resize(total);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        const BicubicMap& p = parts[j];
        for (int d = 0; d < p.dart_count(); ++d) {
            out.alpha[offset[j] + d] = offset[j] + p.alpha[d];
            out.rot[offset[j] + d] = offset[j] + p.rot[d];
        }
    }
    std::size_t k = parts.size();
    out.alpha[sig[k - 1]] = tau[0];
    out.alpha[tau[0]] = sig[k - 1];
    for (std::size_t j = 0; j + 1 < k; ++j) {
        out.alpha[sig[j]] = tau[j + 1];
        out.alpha[tau[j + 1]] = sig[j];
    }
    out.root = offset[k - 1] + parts[k - 1].root;
    return out;
}

BicubicMap to_map(const BetaTree& t) {
    if (t.is_trivial()) bad_arg("to_map: trivial tree has no map");
    static const BetaTree edge_tree = parse_tree("(1 (0))");

    struct Op1Mark {};
    struct Op2Mark {
        int target;
    };
    struct Op3Mark {
        std::size_t arity;
    };
    using Task = std::variant<BetaTree, Op1Mark, Op2Mark, Op3Mark>;
    std::vector<Task> tasks;
    std::vector<BicubicMap> done;
    tasks.emplace_back(BetaTree(t));
    while (!tasks.empty()) {
        Task task = std::move(tasks.back());
        tasks.pop_back();
        if (std::holds_alternative<Op1Mark>(task)) {
            BicubicMap mm = op1(done.back());
            done.back() = std::move(mm);
            continue;
        }
        if (auto* o2 = std::get_if<Op2Mark>(&task)) {
            BicubicMap mm = op2(done.back(), o2->target);
            done.back() = std::move(mm);
            continue;
        }
        if (auto* o3 = std::get_if<Op3Mark>(&task)) {
            std::vector<BicubicMap> args;
            args.reserve(o3->arity);
            for (std::size_t i = done.size() - o3->arity; i < done.size(); ++i)
                args.push_back(std::move(done[i]));
            done.resize(done.size() - o3->arity);
            done.push_back(op3(std::move(args)));
            continue;
        }
        BetaTree cur = std::move(std::get<BetaTree>(task));
        if (cur == edge_tree) {
            done.push_back(theta());
            continue;
        }
        auto step = decompose_lambda_oplus(std::move(cur));
        if (auto* ls = std::get_if<LambdaStep>(&step)) {
            if (ls->index == ls->t.label)
                tasks.emplace_back(Op1Mark{});
            else
                tasks.emplace_back(Op2Mark{ls->index + 1});
            tasks.emplace_back(std::move(ls->t));
        } else {
            auto& os = std::get<OplusStep>(step);
            tasks.emplace_back(Op3Mark{os.parts.size()});
            for (auto it = os.parts.rbegin(); it != os.parts.rend(); ++it)
                tasks.emplace_back(std::move(*it));
        }
    }
    return std::move(done.back());
}

namespace {

// Splits a reducible map into its irreducible parts, tree order.
std::vector<BicubicMap> split_op3(const BicubicMap& m, const MapAnalysis& a) {
    int s1 = face_at_vertex_with_color(m, a, m.alpha[m.root], 1);

    // touch darts along the root face orbit: sigma_k, sigma_1, ..., sigma_{k-1}
    std::vector<int> touches;
    int d = m.root;
    do {
        if (a.face_of[m.alpha[d]] == s1) touches.push_back(d);
        d = m.face_next(d);
    } while (d != m.root);

    std::size_t k = touches.size();
    BicubicMap cut = m;
    // alpha[touches[j]] currently crosses into the next part; re-pair each
    // sigma with its own tau to restore the removed edges
    std::vector<int> old_alpha(k);
    for (std::size_t j = 0; j < k; ++j) old_alpha[j] = m.alpha[touches[j]];
    for (std::size_t j = 0; j < k; ++j) {
        int sigma = touches[(j + 1) % k]; // sigma_1, ..., sigma_{k-1}, sigma_k
        int tau = old_alpha[j];           // tau_1, ..., tau_{k-1}, tau_k
        cut.alpha[sigma] = tau;
        cut.alpha[tau] = sigma;
    }

    // connected components, one per part, in touch order starting at the part
    // that hosts the original root (= sigma_k's component)
    int n = cut.dart_count();
    std::vector<int> comp(n, -1);
    auto flood = [&](int start, int id) {
        std::vector<int> st{start};
        comp[start] = id;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int e : {cut.alpha[x], cut.rot[x]})
                if (comp[e] < 0) {
                    comp[e] = id;
                    st.push_back(e);
                }
        }
    };
    for (std::size_t j = 0; j < k; ++j) flood(touches[j], static_cast<int>(j));

    std::vector<BicubicMap> parts(k);
    std::vector<std::vector<int>> ids(k, std::vector<int>(n, -1));
    std::vector<int> sizes(k, 0);
    for (int x = 0; x < n; ++x) {
        if (comp[x] < 0) throw std::logic_error("split_op3: dart outside every part");
        ids[comp[x]][x] = sizes[comp[x]]++;
    }
    for (std::size_t j = 0; j < k; ++j) {
        parts[j].alpha.resize(sizes[j]);
        parts[j].rot.resize(sizes[j]);
    }
    for (int x = 0; x < n; ++x) {
        int j = comp[x];
        parts[j].alpha[ids[j][x]] = ids[j][cut.alpha[x]];
        parts[j].rot[ids[j][x]] = ids[j][cut.rot[x]];
    }
    // roots: the original root for the part that hosts it; for the others the
    // face-orbit predecessor of their sigma dart (sigma = face_next(root))
    for (std::size_t j = 0; j < k; ++j) {
        int sigma = touches[j];
        if (comp[sigma] != static_cast<int>(j))
            throw std::logic_error("split_op3: sigma dart in wrong part");
        if (comp[m.root] == static_cast<int>(j))
            parts[j].root = ids[j][m.root];
        else
            parts[j].root = ids[j][cut.face_prev(sigma)];
    }

    // touch order is [part_k, part_1, ..., part_{k-1}]; tree order wants
    // [part_1, ..., part_k]
    std::vector<BicubicMap> ordered;
    ordered.reserve(k);
    for (std::size_t j = 1; j < k; ++j) ordered.push_back(std::move(parts[j]));
    ordered.push_back(std::move(parts[0]));
    return ordered;
}

} // namespace

BetaTree to_tree(const BicubicMap& m0) {
    struct LambdaRootMark {}; // op1: index = root of the inner tree
    struct LambdaMark {
        int index;
    };
    struct OplusMark {
        std::size_t arity;
    };
    using Task = std::variant<BicubicMap, LambdaRootMark, LambdaMark, OplusMark>;
    std::vector<Task> tasks;
    std::vector<BetaTree> done;
    tasks.emplace_back(m0);
    while (!tasks.empty()) {
        Task task = std::move(tasks.back());
        tasks.pop_back();
        if (std::holds_alternative<LambdaRootMark>(task)) {
            BetaTree inner = std::move(done.back());
            done.pop_back();
            int idx = inner.label;
            done.push_back(lambda_op(idx, std::move(inner)));
            continue;
        }
        if (auto* lm = std::get_if<LambdaMark>(&task)) {
            BetaTree inner = std::move(done.back());
            done.pop_back();
            done.push_back(lambda_op(lm->index, std::move(inner)));
            continue;
        }
        if (auto* om = std::get_if<OplusMark>(&task)) {
            BetaTree acc = std::move(done[done.size() - om->arity]);
            for (std::size_t i = done.size() - om->arity + 1; i < done.size(); ++i)
                acc = oplus(std::move(acc), std::move(done[i]));
            done.resize(done.size() - om->arity);
            done.push_back(std::move(acc));
            continue;
        }

        BicubicMap m = std::move(std::get<BicubicMap>(task));
        MapAnalysis a = analyze_map(m);
        if (a.vertex_count == 2) {
            done.push_back(parse_tree("(1 (0))"));
            continue;
        }
        MapStats st = statistics_impl(m, a);
        if (st.s1r3 > 1) {
            auto parts = split_op3(m, a);
            tasks.emplace_back(OplusMark{parts.size()});
            for (auto it = parts.rbegin(); it != parts.rend(); ++it)
                tasks.emplace_back(std::move(*it));
            continue;
        }
        // irreducible: decide between an op1 and an op2 root pattern
        int d0 = m.root;
        int a1 = m.alpha[d0];
        int x = m.rot[a1], y = m.rot[m.rot[a1]];
        bool digon = a.vertex_of[m.alpha[x]] == a.vertex_of[m.alpha[y]];
        if (digon) {
            // undo op1
            int a3 = m.rot[a1], a2 = m.rot[a3];
            int b3 = m.alpha[a3], b2 = m.alpha[a2];
            int b4 = m.rot[b3];
            int e0 = m.alpha[b4];
            BicubicMap undone = m;
            undone.alpha[d0] = e0;
            undone.alpha[e0] = d0;
            undone = compact(undone, {a1, a2, a3, b2, b3, b4});
            tasks.emplace_back(LambdaRootMark{});
            tasks.emplace_back(std::move(undone));
        } else {
            // undo op2; the lambda index is the current f1r3 minus one
            int Br = a1;
            int Bcb = m.rot[Br], Ba = m.rot[Bcb];
            int Ab = m.alpha[Ba];
            int Aq = m.rot[Ab], As = m.rot[Aq];
            int tc = m.alpha[Bcb], dc = m.alpha[Aq], e0 = m.alpha[As];
            BicubicMap undone = m;
            undone.alpha[d0] = e0;
            undone.alpha[e0] = d0;
            undone.alpha[dc] = tc;
            undone.alpha[tc] = dc;
            undone = compact(undone, {As, Ab, Aq, Br, Ba, Bcb});
            tasks.emplace_back(LambdaMark{st.f1r3 - 1});
            tasks.emplace_back(std::move(undone));
        }
    }
    return std::move(done.back());
}

MapStats map_statistics(const BicubicMap& m) {
    MapAnalysis a = analyze_map(m);
    return statistics_impl(m, a);
}

BicubicMap phi(const BicubicMap& m) {
    BicubicMap out = m;
    out.root = m.rot[m.root];
    return out;
}

std::vector<int> canonical_form(const BicubicMap& m) {
    int n = m.dart_count();
    std::vector<int> newid(n, -1);
    std::vector<int> order;
    order.reserve(n);
    std::deque<int> queue{m.root};
    newid[m.root] = 0;
    order.push_back(m.root);
    while (!queue.empty()) {
        int d = queue.front();
        queue.pop_front();
        for (int e : {m.rot[d], m.alpha[d]}) {
            if (newid[e] < 0) {
                newid[e] = static_cast<int>(order.size());
                order.push_back(e);
                queue.push_back(e);
            }
        }
    }
    std::vector<int> canon;
    canon.reserve(2 * n + 1);
    canon.push_back(n);
    for (int d : order) {
        canon.push_back(newid[m.rot[d]]);
        canon.push_back(newid[m.alpha[d]]);
    }
    return canon;
}

bool maps_equal(const BicubicMap& a, const BicubicMap& b) {
    return canonical_form(a) == canonical_form(b);
}

std::string map_to_dot(const BicubicMap& m) {
    MapAnalysis a = analyze_map(m);
    std::string out = "graph bicubic {\n";
    for (int v = 0; v < a.vertex_count; ++v) {
        out += "  v" + std::to_string(v) + " [shape=circle, style=filled, fillcolor=" +
               (a.vertex_color[v] == 0 ? "black, fontcolor=white" : "white") + "];\n";
    }
    for (int d = 0; d < m.dart_count(); ++d) {
        int e = m.alpha[d];
        if (d > e) continue;
        bool is_root = (d == m.root || e == m.root);
        int rd = (d == m.root || e != m.root) ? d : e;
        out += "  v" + std::to_string(a.vertex_of[rd]) + " -- v" +
               std::to_string(a.vertex_of[m.alpha[rd]]) + " [label=\"" +
               std::to_string(a.face_color[a.face_of[rd]]) + "|" +
               std::to_string(a.face_color[a.face_of[m.alpha[rd]]]) + "\"";
        if (is_root) out += ", color=red, penwidth=2";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace betamaps
