#include "betamaps/enumeration.hpp"

#include "betamaps/bicubic.hpp"
#include "betamaps/gf_series.hpp"
#include "betamaps/involution.hpp"
#include "betamaps/serialize.hpp"
#include "betamaps/tree_algebra.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace betamaps {

namespace {

BigInt pow2(int k) {
    BigInt v = 1;
    return v << k;
}

} // namespace

BigInt tutte_count(int m) {
    if (m < 1) throw std::invalid_argument("tutte_count: m must be >= 1");
    BigInt num = 3 * pow2(m - 1) * binomial(2 * m, m);
    BigInt den = BigInt(m + 1) * (m + 2);
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("tutte_count: formula not integral");
    return q;
}

BigInt count_trees(int n) {
    if (n < 1) throw std::invalid_argument("count_trees: n must be >= 1");
    if (n == 1) return 1;
    return tutte_count(n - 1);
}

BigInt a_seq(int n) {
    if (n < 1) throw std::invalid_argument("a_seq: n must be >= 1");
    return pow2(n - 1) * catalan(n);
}

const std::vector<std::pair<long long, BigInt>>& a003645_table() {
    static const std::vector<std::pair<long long, BigInt>> table = {
        {1, BigInt(1)},       {2, BigInt(4)},       {3, BigInt(20)},
        {4, BigInt(112)},     {5, BigInt(672)},     {6, BigInt(4224)},
        {7, BigInt(27456)},   {8, BigInt(183040)},  {9, BigInt(1244672)},
        {10, BigInt(8599552)},
    };
    return table;
}

std::vector<std::pair<long long, BigInt>> read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path);
    std::vector<std::pair<long long, BigInt>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long idx;
        std::string value;
        if (ls >> idx >> value) out.emplace_back(idx, BigInt(value));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::optional<Stat> stat_from_name(std::string_view name) {
    if (name == "root") return Stat::root;
    if (name == "sub") return Stat::sub;
    if (name == "rzero") return Stat::rzero;
    if (name == "rmod") return Stat::rmod;
    if (name == "open") return Stat::open;
    if (name == "exc") return Stat::exc;
    return std::nullopt;
}

std::string_view stat_name(Stat s) {
    switch (s) {
    case Stat::root: return "root";
    case Stat::sub: return "sub";
    case Stat::rzero: return "rzero";
    case Stat::rmod: return "rmod";
    case Stat::open: return "open";
    case Stat::exc: return "exc";
    }
    return "?";
}

int stat_value(const StatVector& sv, Stat s) {
    switch (s) {
    case Stat::root: return sv.root;
    case Stat::sub: return sv.sub;
    case Stat::rzero: return sv.rzero;
    case Stat::rmod: return sv.rmod;
    case Stat::open: return sv.open;
    case Stat::exc: return sv.exc;
    }
    return 0;
}

JointDistTable JointDistTable::transposed() const {
    JointDistTable out;
    out.total = total;
    for (const auto& [key, count] : counts) out.counts[{key.second, key.first}] = count;
    return out;
}

void JointDistTable::add(int a, int b) {
    counts[{a, b}] += 1;
    total += 1;
}

void JointDistTable::merge(JointDistTable&& other) {
    for (auto& [key, count] : other.counts) counts[key] += count;
    total += other.total;
}

JointDistTable joint_distribution(int n, Stat a, Stat b, int jobs) {
    return parallel_tree_scan<JointDistTable>(n, jobs,
                                              [a, b](JointDistTable& st, const BetaTree& t) {
                                                  StatVector sv = statistics(t);
                                                  st.add(stat_value(sv, a), stat_value(sv, b));
                                              });
}

namespace {

struct FpState {
    BigInt count = 0;
    std::vector<std::string> trees;
    void merge(FpState&& o) {
        count += o.count;
        for (auto& s : o.trees) trees.push_back(std::move(s));
    }
};

struct SumState {
    BigInt sum = 0;
    void merge(SumState&& o) { sum += o.sum; }
};

struct CountState {
    BigInt n = 0;
    void merge(CountState&& o) { n += o.n; }
};

} // namespace

FixedPointResult fixed_points(int n, bool collect, int jobs) {
    FpState st = parallel_tree_scan<FpState>(n, jobs, [collect](FpState& s, const BetaTree& t) {
        if (g(t) == t) {
            s.count += 1;
            if (collect) s.trees.push_back(render_tree(t));
        }
    });
    return {std::move(st.count), std::move(st.trees)};
}

BigInt excessive_marked_count(int n, int jobs) {
    SumState st = parallel_tree_scan<SumState>(n + 1, jobs, [](SumState& s, const BetaTree& t) {
        s.sum += statistics(t).exc;
    });
    return st.sum;
}

VerifyReport check_equidistribution(int n, std::pair<Stat, Stat> pair_a,
                                    std::pair<Stat, Stat> pair_b, int jobs) {
    auto pair_name = [](std::pair<Stat, Stat> p) {
        return "(" + std::string(stat_name(p.first)) + "," + std::string(stat_name(p.second)) +
               ")";
    };
    VerifyReport r;
    r.check = "equidistribution " + pair_name(pair_a) + " vs " + pair_name(pair_b);
    r.max_nodes = n;
    JointDistTable lhs = joint_distribution(n, pair_a.first, pair_a.second, jobs);
    JointDistTable rhs = joint_distribution(n, pair_b.first, pair_b.second, jobs);
    r.pass = lhs == rhs;
    if (r.pass) {
        r.detail = "tables agree on all " + lhs.total.str() + " trees";
    } else {
        for (const auto& [key, count] : lhs.counts) {
            auto it = rhs.counts.find(key);
            BigInt other = (it == rhs.counts.end()) ? BigInt(0) : it->second;
            if (count != other) {
                r.detail = "cell (" + std::to_string(key.first) + "," +
                           std::to_string(key.second) + ") holds " + count.str() + " vs " +
                           other.str();
                break;
            }
        }
        if (r.detail.empty()) r.detail = "right table has cells missing from the left";
    }
    return r;
}

// ---------------------------------------------------------------------------
// verify suite
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kFigTree = "(4 (0) (0) (1 (0)) (2 (1 (3 (2 (1 (0))) (0)))))";
constexpr const char* kGFigTree = "(2 (1 (2 (1 (0 (0)))) (0 (0 (1 (0) (0) (0))))))";
constexpr const char* kRhoMuExpr =
    "mu(2, rho[eps], mu(1, rho[mu(2, rho[eps], mu(1, rho[rho[eps]], rho[eps]))], "
    "mu(1, rho[eps], rho[eps, eps, rho[eps]])))";
constexpr const char* kSigmaNuExpr =
    "nu(2, sigma[sigma[nu(1, sigma[eps, eps, eps], sigma[eps])]], "
    "sigma[nu(2, sigma[sigma[eps]], sigma[sigma[eps]])])";

const std::vector<std::string>& figure2_trees() {
    static const std::vector<std::string> trees = {
        "(1 (0 (0 (0))))", "(2 (1 (0 (0))))", "(1 (0 (1 (0))))", "(2 (1 (1 (0))))",
        "(3 (2 (1 (0))))", "(1 (0 (0) (0)))", "(2 (1 (0) (0)))", "(1 (0 (0)) (0))",
        "(2 (1 (0)) (0))", "(1 (0) (0 (0)))", "(2 (0) (1 (0)))", "(1 (0) (0) (0))",
    };
    return trees;
}

struct CheckContext {
    int bound;
    int jobs;
    std::optional<std::string> oeis_bfile;
};

VerifyReport check_census(const CheckContext& cx) {
    VerifyReport r;
    r.check = "census";
    r.max_nodes = cx.bound;
    r.pass = true;
    std::string counts;
    for (int n = 1; n <= cx.bound; ++n) {
        CountState st = parallel_tree_scan<CountState>(
            n, cx.jobs, [](CountState& s, const BetaTree&) { s.n += 1; });
        BigInt expect = count_trees(n);
        if (!counts.empty()) counts += ",";
        counts += st.n.str();
        if (st.n != expect) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": enumerated " + st.n.str() +
                       " trees, formula says " + expect.str();
            return r;
        }
    }

    if (cx.bound >= 4) {
        std::set<std::string> seen;
        for_each_tree(4, [&](const BetaTree& t) { seen.insert(render_tree(t)); });
        std::set<std::string> expect(figure2_trees().begin(), figure2_trees().end());
        if (seen != expect) {
            r.pass = false;
            r.detail = "4-node census does not match the known list of 12 trees";
            return r;
        }
    }

    // rooted-map census: distinct canonical forms from trees on n nodes must
    // hit the map count at 2(n-1) vertices
    int map_bound = std::min(cx.bound, 8);
    for (int n = 2; n <= map_bound; ++n) {
        std::set<std::vector<int>> forms;
        for_each_tree(n, [&](const BetaTree& t) { forms.insert(canonical_form(to_map(t))); });
        BigInt expect = tutte_count(n - 1);
        if (BigInt(forms.size()) != expect) {
            r.pass = false;
            r.detail = "maps on " + std::to_string(2 * (n - 1)) + " vertices: " +
                       std::to_string(forms.size()) + " distinct, formula says " + expect.str();
            return r;
        }
    }
    r.detail = "tree counts 1.." + std::to_string(cx.bound) + " = " + counts +
               "; 4-node list matches; map census to " +
               std::to_string(2 * (map_bound - 1)) + " vertices matches";
    return r;
}

VerifyReport check_golden(const CheckContext& cx) {
    VerifyReport r;
    r.check = "golden";
    r.max_nodes = cx.bound;
    r.pass = true;
    BetaTree fig = parse_tree(kFigTree);
    BetaTree viaRhoMu = eval_op_literal(kRhoMuExpr);
    BetaTree viaSigmaNu = eval_op_literal(kSigmaNuExpr);
    BetaTree gfig = g(fig);
    std::string problems;
    if (viaRhoMu != fig) problems += "rho/mu expression does not evaluate to the target tree; ";
    if (viaSigmaNu != fig) problems += "sigma/nu expression does not evaluate to the target tree; ";
    if (gfig != parse_tree(kGFigTree))
        problems += "g(target) = " + render_tree(gfig) + " differs from the expected tree; ";
    if (g(gfig) != fig) problems += "g is not an involution on the target tree; ";
    if (!problems.empty()) {
        r.pass = false;
        r.detail = problems;
        return r;
    }
    r.detail = "both operator expressions evaluate to " + std::string(kFigTree) +
               "; g maps it to " + std::string(kGFigTree);
    return r;
}

struct FirstFail {
    bool ok = true;
    std::string witness;
    std::string why;
    void merge(FirstFail&& o) {
        if (ok && !o.ok) *this = std::move(o);
    }
    void fail(const BetaTree& t, const std::string& reason) {
        if (!ok) return;
        ok = false;
        witness = render_tree(t);
        why = reason;
    }
};

VerifyReport scan_check(const char* name, const CheckContext& cx, int n_min,
                        void (*body)(FirstFail&, const BetaTree&), const char* ok_detail) {
    VerifyReport r;
    r.check = name;
    r.max_nodes = cx.bound;
    r.pass = true;
    BigInt scanned = 0;
    for (int n = n_min; n <= cx.bound; ++n) {
        FirstFail ff = parallel_tree_scan<FirstFail>(
            n, cx.jobs, [body](FirstFail& s, const BetaTree& t) {
                if (s.ok) body(s, t);
            });
        scanned += count_trees(n);
        if (!ff.ok) {
            r.pass = false;
            r.detail = ff.why;
            r.counterexample = ff.witness;
            return r;
        }
    }
    r.detail = std::string(ok_detail) + " on all " + scanned.str() + " trees with <= " +
               std::to_string(cx.bound) + " nodes";
    return r;
}

VerifyReport check_involution(const CheckContext& cx) {
    return scan_check(
        "involution", cx, 1,
        [](FirstFail& s, const BetaTree& t) {
            if (g(g(t)) != t) s.fail(t, "g(g(T)) != T");
        },
        "g o g = id");
}

VerifyReport check_transport(const CheckContext& cx) {
    return scan_check(
        "transport", cx, 1,
        [](FirstFail& s, const BetaTree& t) {
            StatVector st = statistics(t);
            StatVector sg = statistics(g(t));
            if (sg.root != st.open || sg.open != st.root)
                s.fail(t, "root/open not exchanged by g");
        },
        "root(g(T)) = open(T) and open(g(T)) = root(T)");
}

void lemma5_tuple_case(FirstFail& ff, const std::vector<const BetaTree*>& tuple) {
    std::vector<BetaTree> parts;
    parts.reserve(tuple.size());
    for (auto* p : tuple) parts.push_back(*p);
    BetaTree r = rho(parts);
    BetaTree sg = sigma(std::move(parts));
    StatVector last = statistics(*tuple.back());
    if (statistics(r).open != 1 + last.open) ff.fail(r, "open(rho(...)) != 1 + open(T_k)");
    if (statistics(sg).root != 1 + last.root) ff.fail(sg, "root(sigma(...)) != 1 + root(T_k)");
    if (statistics(sg).open != 1) ff.fail(sg, "open(sigma(...)) != 1");
    if (!is_valid_tree(r)) ff.fail(r, "rho image invalid");
    if (!is_valid_tree(sg)) ff.fail(sg, "sigma image invalid");
    if (statistics(r).root != 1) ff.fail(r, "root(rho(...)) != 1");

    // bridge identity: rho(T_1..T_k) = nu_1(sigma(T_{k-1},...,T_1,eps), T_k)
    std::vector<BetaTree> rev;
    for (std::size_t i = tuple.size() - 1; i-- > 0;) rev.push_back(*tuple[i]);
    rev.emplace_back(0);
    BetaTree lhs = nu(1, sigma(std::move(rev)), *tuple.back());
    if (lhs != r) ff.fail(r, "rho/nu bridge identity fails");
}

VerifyReport check_lemmas(const CheckContext& cx) {
    VerifyReport r;
    r.check = "lemmas";
    r.max_nodes = cx.bound;
    r.pass = true;

    // rmod = open over the full range
    {
        VerifyReport l4 = scan_check(
            "lemmas", cx, 1,
            [](FirstFail& s, const BetaTree& t) {
                StatVector sv = statistics(t);
                if (sv.rmod != sv.open) s.fail(t, "rmod != open");
            },
            "rmod = open");
        if (!l4.pass) return l4;
    }

    int small = std::min(cx.bound, 5);
    std::vector<BetaTree> trees;
    for (int n = 1; n <= small; ++n)
        for_each_tree(n, [&](const BetaTree& t) { trees.push_back(t); });

    FirstFail ff;

    // root/open bookkeeping for rho/sigma and the bridge identity,
    // over tuples of length 1..3
    for (const BetaTree& t1 : trees) {
        lemma5_tuple_case(ff, {&t1});
        if (!ff.ok) break;
        for (const BetaTree& t2 : trees) {
            lemma5_tuple_case(ff, {&t1, &t2});
            if (!ff.ok) break;
            for (const BetaTree& t3 : trees) {
                lemma5_tuple_case(ff, {&t1, &t2, &t3});
                if (!ff.ok) break;
            }
            if (!ff.ok) break;
        }
        if (!ff.ok) break;
    }

    // root/open bookkeeping for mu/nu over all admissible pairs
    if (ff.ok) {
        for (const BetaTree& s : trees) {
            StatVector ss = statistics(s);
            for (const BetaTree& t : trees) {
                StatVector st = statistics(t);
                if (s.label == 1) {
                    if (t.is_trivial()) {
                        if (mu(1, s, t) != s) ff.fail(s, "mu(1,S,eps) != S");
                    } else {
                        for (int i = 1; i <= st.open; ++i) {
                            BetaTree m = mu(i, s, t);
                            StatVector sm = statistics(m);
                            if (sm.root != 1 + st.root) ff.fail(m, "root(mu_i(S,T)) != 1+root(T)");
                            if (sm.open != i - 1 + ss.open)
                                ff.fail(m, "open(mu_i(S,T)) != i-1+open(S)");
                            if (!is_valid_tree(m)) ff.fail(m, "mu image invalid");
                        }
                    }
                }
                if (ss.open == 1) {
                    if (t.is_trivial()) {
                        if (nu(1, s, t) != s) ff.fail(s, "nu(1,S,eps) != S");
                    } else {
                        for (int i = 1; i <= st.root; ++i) {
                            BetaTree m = nu(i, s, t);
                            StatVector sm = statistics(m);
                            if (sm.root != i - 1 + ss.root)
                                ff.fail(m, "root(nu_i(S,T)) != i-1+root(S)");
                            if (sm.open != 1 + st.open) ff.fail(m, "open(nu_i(S,T)) != 1+open(T)");
                            if (!is_valid_tree(m)) ff.fail(m, "nu image invalid");
                        }
                    }
                }
                if (!ff.ok) break;
            }
            if (!ff.ok) break;
        }
    }

    // exchange identity: nu_{i+1}(R, mu_j(S,T)) = mu_{j+1}(S, nu_i(R,T))
    if (ff.ok) {
        for (const BetaTree& rr : trees) {
            if (statistics(rr).open != 1) continue;
            for (const BetaTree& s : trees) {
                if (s.label != 1) continue;
                for (const BetaTree& t : trees) {
                    if (t.is_trivial()) continue;
                    StatVector st = statistics(t);
                    for (int i = 1; i <= st.root; ++i)
                        for (int j = 1; j <= st.open; ++j) {
                            BetaTree lhs = nu(i + 1, rr, mu(j, s, t));
                            BetaTree rhs = mu(j + 1, s, nu(i, rr, t));
                            if (lhs != rhs) {
                                ff.fail(t, "nu/mu exchange identity fails (i=" + std::to_string(i) +
                                               ", j=" + std::to_string(j) + ")");
                                break;
                            }
                        }
                    if (!ff.ok) break;
                }
                if (!ff.ok) break;
            }
            if (!ff.ok) break;
        }
    }

    // commutation at index 1: mu_1(nu_1(R,S),T) = nu_1(mu_1(R,T),S)
    // for root(R) = open(R) = 1
    if (ff.ok) {
        for (const BetaTree& rr : trees) {
            StatVector sr = statistics(rr);
            if (sr.root != 1 || sr.open != 1) continue;
            for (const BetaTree& s : trees) {
                for (const BetaTree& t : trees) {
                    BetaTree lhs = mu(1, nu(1, rr, s), t);
                    BetaTree rhs = nu(1, mu(1, rr, t), s);
                    if (lhs != rhs) {
                        ff.fail(t, "mu_1/nu_1 commutation fails");
                        break;
                    }
                }
                if (!ff.ok) break;
            }
            if (!ff.ok) break;
        }
    }

    if (!ff.ok) {
        r.pass = false;
        r.detail = ff.why;
        r.counterexample = ff.witness;
        return r;
    }
    r.detail = "rmod = open to " + std::to_string(cx.bound) +
               " nodes; operator identities over tuples from trees with <= " +
               std::to_string(small) + " nodes";
    return r;
}

VerifyReport check_equidist(const CheckContext& cx) {
    VerifyReport r;
    r.check = "equidist";
    r.max_nodes = cx.bound;
    r.pass = true;
    for (int n = 1; n <= cx.bound; ++n) {
        JointDistTable tab = joint_distribution(n, Stat::root, Stat::rmod, cx.jobs);
        if (tab != tab.transposed()) {
            r.pass = false;
            r.detail = "(root,rmod) table is not symmetric at n = " + std::to_string(n);
            return r;
        }
    }
    r.detail = "(root,rmod) jointly equidistributed with (rmod,root) up to " +
               std::to_string(cx.bound) + " nodes";
    return r;
}

VerifyReport check_conj_fp(const CheckContext& cx) {
    VerifyReport r;
    r.check = "conj-fp";
    r.max_nodes = cx.bound;
    r.pass = true;
    static const long long published[] = {1, 1, 4, 4, 20, 20, 112, 112, 672, 672, 4224};
    std::string got;
    for (int n = 2; n <= cx.bound; ++n) {
        BigInt fp = fixed_points(n, false, cx.jobs).count;
        BigInt expect = a_seq(n / 2);
        if (!got.empty()) got += ",";
        got += fp.str();
        if (fp != expect) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": " + fp.str() + " fixed points, a(" +
                       std::to_string(n / 2) + ") = " + expect.str();
            return r;
        }
        if (n <= 12 && fp != published[n - 2]) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": " + fp.str() +
                       " fixed points, published sequence says " +
                       std::to_string(published[n - 2]);
            return r;
        }
    }
    r.detail = "fixed points for n=2.." + std::to_string(cx.bound) + ": " + got;
    return r;
}

VerifyReport check_conj_joint(const CheckContext& cx) {
    VerifyReport r;
    r.check = "conj-joint";
    r.max_nodes = cx.bound;
    r.pass = true;
    for (int n = 1; n <= cx.bound; ++n) {
        JointDistTable lhs = joint_distribution(n, Stat::root, Stat::rzero, cx.jobs);
        JointDistTable rhs = joint_distribution(n, Stat::rmod, Stat::sub, cx.jobs);
        if (lhs != rhs) {
            r.pass = false;
            r.detail = "(root,rzero) and (rmod,sub) tables differ at n = " + std::to_string(n);
            return r;
        }
    }
    r.detail = "(root,rzero) and (rmod,sub) jointly equidistributed up to " +
               std::to_string(cx.bound) + " nodes";
    return r;
}

VerifyReport check_prop3(const CheckContext& cx) {
    return scan_check(
        "prop3", cx, 2,
        [](FirstFail& s, const BetaTree& t) {
            BicubicMap m = to_map(t);
            auto violations = validate_map(m);
            if (!violations.empty()) {
                s.fail(t, "constructed map invalid: " + violations.front());
                return;
            }
            StatVector sv = statistics(t);
            MapStats ms = map_statistics(m);
            if (sv.exc != ms.one || sv.root != ms.f1r3 || sv.rmod != ms.f3r2 ||
                sv.rzero != ms.b || sv.sub != ms.s1r3) {
                s.fail(t, "statistic correspondence fails");
                return;
            }
            if (to_tree(m) != t) s.fail(t, "to_tree(to_map(T)) != T");
        },
        "bijection round-trip, map validity and all five statistic equalities");
}

VerifyReport check_phi(const CheckContext& cx) {
    VerifyReport r;
    r.check = "phi";
    r.max_nodes = cx.bound;
    r.pass = true;
    bool pointwise = true;
    std::string pw_note;
    for (int n = 2; n <= cx.bound; ++n) {
        std::map<int, long long> dist_f1r3, dist_f3r2;
        FirstFail ff;
        for_each_tree(n, [&](const BetaTree& t) {
            if (!ff.ok) return;
            BicubicMap m = to_map(t);
            BicubicMap p = phi(m);
            MapStats base = map_statistics(m);
            ++dist_f1r3[base.f1r3];
            ++dist_f3r2[base.f3r2];
            if (!maps_equal(phi(phi(p)), m)) {
                ff.fail(t, "phi^3 != id");
                return;
            }
            if (map_statistics(p).f1r3 != base.f3r2) {
                pointwise = false;
                pw_note = "pointwise f1r3(phi(M)) = f3r2(M) fails at " + render_tree(t);
            }
        });
        if (!ff.ok) {
            r.pass = false;
            r.detail = ff.why;
            r.counterexample = ff.witness;
            return r;
        }
        if (dist_f1r3 != dist_f3r2) {
            r.pass = false;
            r.detail = "f1r3 and f3r2 distributions differ on maps from trees on " +
                       std::to_string(n) + " nodes";
            return r;
        }
    }
    r.detail = "phi^3 = id and f1r3 ~ f3r2 equidistributed up to trees on " +
               std::to_string(cx.bound) + " nodes; " +
               (pointwise ? "pointwise f1r3(phi(M)) = f3r2(M) holds"
                          : "pointwise transport FAILS, distribution level only (" + pw_note + ")");
    return r;
}

VerifyReport check_prop15(const CheckContext& cx) {
    VerifyReport r;
    r.check = "prop15";
    r.max_nodes = cx.bound;
    r.pass = true;
    std::vector<std::pair<long long, BigInt>> reference;
    std::string ref_name;
    if (cx.oeis_bfile) {
        reference = read_bfile(*cx.oeis_bfile);
        ref_name = "b-file " + *cx.oeis_bfile;
    } else {
        reference = a003645_table();
        ref_name = "embedded A003645 table";
    }
    std::string got;
    for (int n = 1; n <= cx.bound; ++n) {
        BigInt total = excessive_marked_count(n, cx.jobs);
        BigInt formula = a_seq(n);
        if (!got.empty()) got += ",";
        got += total.str();
        if (total != formula) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": sum of exc = " + total.str() +
                       ", a(n) = " + formula.str();
            return r;
        }
        if (n <= static_cast<int>(reference.size())) {
            const BigInt& tab = reference[n - 1].second;
            if (total != tab) {
                r.pass = false;
                r.detail = "n=" + std::to_string(n) + ": sum of exc = " + total.str() + ", " +
                           ref_name + " says " + tab.str();
                return r;
            }
        }
    }
    r.detail = "sum of exc over (n+1)-node trees = a(n) for n=1.." + std::to_string(cx.bound) +
               " (" + got + "), cross-checked against " + ref_name;
    return r;
}

VerifyReport check_gf(const CheckContext& cx) {
    VerifyReport r;
    r.check = "gf";
    r.max_nodes = cx.bound;
    int order = cx.bound;
    Series3 f = solve_f(order);

    std::vector<BigInt> expected;
    for (int n = 0; n <= order; ++n) expected.push_back(count_trees(n + 1));
    GfCheckResult basic = gf_checks(f, expected);
    if (!basic.pass) {
        r.pass = false;
        r.detail = basic.detail;
        return r;
    }

    // coefficient-level agreement with the enumeration tables
    int cross = std::min(order, 9);
    for (int n = 0; n <= cross; ++n) {
        JointDistTable tab = joint_distribution(n + 1, Stat::root, Stat::rmod, cx.jobs);
        const BivarPoly& p = f.at(n);
        BigInt mass = 0;
        for (const auto& [key, count] : tab.counts) {
            if (p.coeff(key.first, key.second) != count) {
                r.pass = false;
                r.detail = "coefficient (root=" + std::to_string(key.first) + ", rmod=" +
                           std::to_string(key.second) + ") at t^" + std::to_string(n) +
                           " disagrees with enumeration";
                return r;
            }
            mass += count;
        }
        if (mass != expected[n]) {
            r.pass = false;
            r.detail = "coefficient mass mismatch at t^" + std::to_string(n);
            return r;
        }
    }
    r.pass = true;
    r.detail = "order " + std::to_string(order) + ": symmetry, counts, and coefficients vs "
               "enumeration through t^" + std::to_string(cross) + " all exact";
    return r;
}

struct CheckDef {
    const char* name;
    int default_bound;
    VerifyReport (*run)(const CheckContext&);
};

const CheckDef kChecks[] = {
    {"census", 11, check_census},       {"golden", 12, check_golden},
    {"involution", 10, check_involution}, {"transport", 10, check_transport},
    {"lemmas", 10, check_lemmas},       {"equidist", 10, check_equidist},
    {"conj-fp", 12, check_conj_fp},     {"conj-joint", 11, check_conj_joint},
    {"prop3", 8, check_prop3},          {"phi", 7, check_phi},
    {"prop15", 10, check_prop15},       {"gf", 12, check_gf},
};

} // namespace

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& c : kChecks) v.push_back(c.name);
        return v;
    }();
    return names;
}

std::vector<VerifyReport> verify_suite(const std::vector<std::string>& checks,
                                       const VerifyOptions& opt) {
    std::vector<VerifyReport> out;
    for (const std::string& name : checks) {
        const CheckDef* def = nullptr;
        for (const auto& c : kChecks)
            if (name == c.name) def = &c;
        if (!def) throw std::invalid_argument("unknown check '" + name + "'");

        CheckContext cx{opt.max_nodes.value_or(def->default_bound), std::max(opt.jobs, 1),
                        opt.oeis_bfile};

        std::filesystem::path cache_file;
        if (opt.cache_dir) {
            cache_file = std::filesystem::path(*opt.cache_dir) /
                         (name + "-n" + std::to_string(cx.bound) + ".json");
            std::ifstream in(cache_file);
            if (in) {
                try {
                    nlohmann::json j = nlohmann::json::parse(in);
                    if (auto cached = report_from_json(j); cached && cached->check == name &&
                                                           cached->max_nodes == cx.bound) {
                        cached->cached = true;
                        out.push_back(std::move(*cached));
                        continue;
                    }
                } catch (const nlohmann::json::exception&) {
                    // unreadable cache entries are recomputed
                }
            }
        }

        auto start = Clock::now();
        VerifyReport r = def->run(cx);
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (opt.cache_dir) {
            std::error_code ec;
            std::filesystem::create_directories(*opt.cache_dir, ec);
            std::ofstream outf(cache_file);
            if (outf) outf << report_to_json(r).dump(2) << "\n";
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace betamaps
