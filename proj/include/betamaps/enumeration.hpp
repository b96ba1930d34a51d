#pragma once

#include "betamaps/bigint.hpp"
#include "betamaps/tree.hpp"

#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace betamaps {

// Number of bicubic maps with 2m vertices: 3 * 2^(m-1) * (2m)! / (m! (m+2)!).
BigInt tutte_count(int m);

// Number of beta(0,1)-trees on n nodes; equals tutte_count(n-1) for n >= 2.
BigInt count_trees(int n);

// a(n) = 2^(n-1) * Catalan(n) (OEIS A003645 read off by value order).
BigInt a_seq(int n);

// Embedded a(n) reference values for n = 1..10, independent of the formula.
const std::vector<std::pair<long long, BigInt>>& a003645_table();

// Reads a local OEIS b-file: lines of "index value"; '#' comments skipped.
std::vector<std::pair<long long, BigInt>> read_bfile(const std::string& path);

enum class Stat { root, sub, rzero, rmod, open, exc };

std::optional<Stat> stat_from_name(std::string_view name);
std::string_view stat_name(Stat s);
int stat_value(const StatVector& sv, Stat s);

struct JointDistTable {
    std::map<std::pair<int, int>, BigInt> counts;
    BigInt total = 0;

    bool operator==(const JointDistTable&) const = default;
    JointDistTable transposed() const;
    void add(int a, int b);
    void merge(JointDistTable&& other);
};

namespace detail {

// Non-owning nullary callable; continuations live on the caller's stack.
class FnRef {
  public:
    template <typename F>
    FnRef(F& f) : obj_(&f), call_([](void* p) { (*static_cast<F*>(p))(); }) {}
    void operator()() const { call_(obj_); }

  private:
    void* obj_;
    void (*call_)(void*);
};

// Streaming generator. Every child vector is reserved up front, so references
// held across sibling insertions stay valid. Order: forests by first-subtree
// size ascending, then recursively within the first subtree (child forest
// first, then its root label ascending 0..sum+1), then the rest of the
// forest. Root label is forced by the root rule on emission.
template <typename Visitor>
class TreeGen {
  public:
    TreeGen(int n, Visitor& visit) : n_(n), visit_(visit) {}

    void run() {
        if (n_ == 1) {
            BetaTree t(0);
            visit_(static_cast<const BetaTree&>(t));
            return;
        }
        prepare();
        auto emit = make_emit();
        FnRef done(emit);
        forest(root_, n_ - 1, done);
    }

    // Only trees whose first root child has exactly `s` nodes.
    void run_first_size(int s) {
        prepare();
        auto emit = make_emit();
        FnRef done(emit);
        auto rest = [&, done] { forest(root_, n_ - 1 - s, done); };
        FnRef rest_ref(rest);
        subtree(root_, s, rest_ref);
    }

  private:
    auto make_emit() {
        return [this] {
            root_.label = 1 + child_label_sum(root_);
            visit_(static_cast<const BetaTree&>(root_));
        };
    }
    void prepare() {
        root_ = BetaTree(0);
        root_.children.reserve(n_ - 1);
    }
    void forest(BetaTree& parent, int budget, FnRef done) {
        if (budget == 0) {
            done();
            return;
        }
        for (int first = 1; first <= budget; ++first) {
            auto rest = [&, first, done] { forest(parent, budget - first, done); };
            FnRef rest_ref(rest);
            subtree(parent, first, rest_ref);
        }
    }
    void subtree(BetaTree& parent, int size, FnRef done) {
        parent.children.emplace_back(0);
        BetaTree& node = parent.children.back();
        if (size == 1) {
            done();
        } else {
            node.children.reserve(size - 1);
            auto labels = [&node, done] {
                int sum = child_label_sum(node);
                for (int lab = 0; lab <= sum + 1; ++lab) {
                    node.label = lab;
                    done();
                }
            };
            FnRef labels_ref(labels);
            forest(node, size - 1, labels_ref);
        }
        parent.children.pop_back();
    }

    int n_;
    Visitor& visit_;
    BetaTree root_{0};
};

} // namespace detail

// Visits every beta(0,1)-tree on n nodes exactly once, in a deterministic
// documented order. The visited reference is only valid during the call.
template <typename Visitor>
void for_each_tree(int n, Visitor&& visit) {
    if (n < 1) throw std::invalid_argument("for_each_tree: n must be >= 1");
    detail::TreeGen<std::remove_reference_t<Visitor>> gen(n, visit);
    gen.run();
}

// Shard of the enumeration: trees whose first root child subtree has exactly
// `first_size` nodes (1 <= first_size <= n-1, n >= 2).
template <typename Visitor>
void for_each_tree_first_size(int n, int first_size, Visitor&& visit) {
    if (n < 2) throw std::invalid_argument("for_each_tree_first_size: n must be >= 2");
    if (first_size < 1 || first_size > n - 1)
        throw std::invalid_argument("for_each_tree_first_size: bad shard size");
    detail::TreeGen<std::remove_reference_t<Visitor>> gen(n, visit);
    gen.run_first_size(first_size);
}

// Scans all trees on n nodes with per-shard state, merging shard results in
// shard order so parallel runs reproduce the sequential outcome exactly.
// The single-child shard (first size n-1) holds over half of all trees, so it
// is scheduled first; that also caps the parallel speedup near 2x.
template <typename State, typename Visit>
State parallel_tree_scan(int n, int jobs, Visit visit) {
    if (n == 1 || jobs <= 1) {
        State st{};
        for_each_tree(n, [&](const BetaTree& t) { visit(st, t); });
        return st;
    }
    int shards = n - 1;
    std::vector<int> order(shards);
    order[0] = shards; // the dominant shard goes first
    for (int i = 1; i < shards; ++i) order[i] = i;
    std::vector<State> results(shards);
    std::atomic<int> next{0};
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= shards) break;
            int s = order[i];
            State st{};
            for_each_tree_first_size(n, s, [&](const BetaTree& t) { visit(st, t); });
            results[s - 1] = std::move(st);
        }
    };
    std::vector<std::thread> pool;
    int workers = std::min(jobs, shards);
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    State acc = std::move(results.front());
    for (int s = 1; s < shards; ++s) acc.merge(std::move(results[s]));
    return acc;
}

// Exact table of (stat a, stat b) over all trees on n nodes.
JointDistTable joint_distribution(int n, Stat a, Stat b, int jobs = 1);

struct FixedPointResult {
    BigInt count = 0;
    std::vector<std::string> trees; // rendered, only when collect was requested
};

// Trees on n nodes with g(T) = T.
FixedPointResult fixed_points(int n, bool collect = false, int jobs = 1);

// Sum of exc(T) over trees on n+1 nodes (trees with one marked excessive node).
BigInt excessive_marked_count(int n, int jobs = 1);

struct VerifyReport {
    std::string check;
    int max_nodes = 0;
    bool pass = false;
    std::string detail;
    std::optional<std::string> counterexample;
    double seconds = 0.0;
    bool cached = false;
};

struct VerifyOptions {
    std::optional<int> max_nodes; // overrides the per-check default bound
    int jobs = 1;
    std::optional<std::string> cache_dir;
    std::optional<std::string> oeis_bfile;
};

// Pass iff the two statistic pairs have identical joint tables over all
// trees on n nodes. The detail carries both totals; a failing report names
// the first differing cell.
VerifyReport check_equidistribution(int n, std::pair<Stat, Stat> pair_a,
                                    std::pair<Stat, Stat> pair_b, int jobs = 1);

// Check names, in acceptance order: census, golden, involution, transport,
// lemmas, equidist, conj-fp, conj-joint, prop3, phi, prop15, gf.
const std::vector<std::string>& all_check_names();

std::vector<VerifyReport> verify_suite(const std::vector<std::string>& checks,
                                       const VerifyOptions& opt = {});

} // namespace betamaps
