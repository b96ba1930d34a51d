#include "betamaps/bicubic.hpp"
#include "betamaps/enumeration.hpp"
#include "betamaps/gf_series.hpp"
#include "betamaps/involution.hpp"
#include "betamaps/serialize.hpp"
#include "betamaps/tree.hpp"
#include "betamaps/tree_algebra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace betamaps;
using nlohmann::json;

int g_exit = 0;

BicubicMap load_map(const std::string& tree_code, const std::string& map_file) {
    if (!tree_code.empty()) return to_map(parse_tree(tree_code));
    if (map_file == "-") {
        json j = json::parse(std::cin);
        return map_from_json(j);
    }
    std::ifstream in(map_file);
    if (!in) throw std::runtime_error("cannot open map file: " + map_file);
    return map_from_json(json::parse(in));
}

void print_reports(const std::vector<VerifyReport>& reports, bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            char secs[32];
            std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.check << " (n<=" << r.max_nodes
                      << ", " << secs << "s" << (r.cached ? ", cached" : "") << "): "
                      << r.detail;
            if (r.counterexample) std::cout << " [counterexample: " << *r.counterexample << "]";
            std::cout << "\n";
        }
    }
    for (const auto& r : reports)
        if (!r.pass) g_exit = 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for labeled plane trees, bicubic maps and their statistics"};
    app.require_subcommand(1);

    // stats
    std::string stats_tree;
    auto* stats_cmd = app.add_subcommand("stats", "statistics of a tree");
    stats_cmd->add_option("--tree", stats_tree, "tree code")->required();

    // g
    std::string g_tree;
    auto* g_cmd = app.add_subcommand("g", "apply the involution to a tree");
    g_cmd->add_option("--tree", g_tree, "tree code")->required();

    // enumerate
    int enum_nodes = 0, enum_jobs = 1;
    std::string enum_format = "count";
    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate all trees of a size");
    enum_cmd->add_option("--nodes", enum_nodes, "node count")->required();
    enum_cmd->add_option("--format", enum_format, "jsonl|count (default count)")
        ->check(CLI::IsMember({"jsonl", "count"}));
    enum_cmd->add_option("--jobs", enum_jobs, "worker threads for counting");

    // dist
    int dist_nodes = 0, dist_jobs = 1;
    std::string dist_pair = "root,rmod";
    auto* dist_cmd = app.add_subcommand("dist", "joint distribution table of two statistics");
    dist_cmd->add_option("--nodes", dist_nodes, "node count")->required();
    dist_cmd->add_option("--pair", dist_pair, "statA,statB (root|sub|rzero|rmod|open|exc)");
    dist_cmd->add_option("--jobs", dist_jobs, "worker threads");

    // fixed-points
    int fp_nodes = 0, fp_jobs = 1;
    bool fp_list = false;
    auto* fp_cmd = app.add_subcommand("fixed-points", "trees fixed by the involution");
    fp_cmd->add_option("--nodes", fp_nodes, "node count")->required();
    fp_cmd->add_flag("--list", fp_list, "print the fixed trees");
    fp_cmd->add_option("--jobs", fp_jobs, "worker threads");

    // map
    auto* map_cmd = app.add_subcommand("map", "bicubic map operations");
    map_cmd->require_subcommand(1);
    std::string mft_tree, mft_format = "json";
    auto* map_from = map_cmd->add_subcommand("from-tree", "build the map of a tree");
    map_from->add_option("tree", mft_tree, "tree code")->required();
    map_from->add_option("--format", mft_format, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    std::string ms_tree, ms_file;
    auto* map_stats = map_cmd->add_subcommand("stats", "map statistics");
    map_stats->add_option("--tree", ms_tree, "tree code (map built via the bijection)");
    map_stats->add_option("--map", ms_file, "map JSON file ('-' for stdin)");
    std::string mp_tree, mp_file, mp_format = "json";
    int mp_times = 1;
    auto* map_phi = map_cmd->add_subcommand("phi", "apply the face-recoloring rotation");
    map_phi->add_option("--tree", mp_tree, "tree code");
    map_phi->add_option("--map", mp_file, "map JSON file ('-' for stdin)");
    map_phi->add_option("--times", mp_times, "number of applications (default 1)");
    map_phi->add_option("--format", mp_format, "json|dot")->check(CLI::IsMember({"json", "dot"}));

    // gf
    int gf_order = 12;
    bool gf_dump = false;
    auto* gf_cmd = app.add_subcommand("gf", "solve the generating-function equation");
    gf_cmd->add_option("--order", gf_order, "truncation order in t (default 12)");
    gf_cmd->add_flag("--dump", gf_dump, "dump all coefficients as JSON");

    // verify
    std::vector<std::string> verify_names;
    int verify_max = -1, verify_jobs = 1;
    std::string verify_report, verify_cache, verify_oeis;
    auto* verify_cmd = app.add_subcommand("verify", "run named verification checks");
    verify_cmd->add_option("checks", verify_names, "check names or 'all'")->required();
    verify_cmd->add_option("--max-nodes", verify_max, "override the per-check size bound");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
    verify_cmd->add_option("--report", verify_report, "report format: json")
        ->check(CLI::IsMember({"json"}));
    verify_cmd->add_option("--cache", verify_cache, "cache directory for finished reports");
    verify_cmd->add_option("--oeis", verify_oeis, "local OEIS b-file for cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*stats_cmd) {
            std::cout << stats_to_json(statistics(parse_tree(stats_tree))).dump() << "\n";
        } else if (*g_cmd) {
            std::cout << render_tree(g(parse_tree(g_tree))) << "\n";
        } else if (*enum_cmd) {
            if (enum_format == "jsonl") {
                for_each_tree(enum_nodes, [](const BetaTree& t) {
                    std::cout << tree_to_json(t).dump() << "\n";
                });
            } else {
                struct CountState {
                    BigInt n = 0;
                    void merge(CountState&& o) { n += o.n; }
                };
                CountState st = parallel_tree_scan<CountState>(
                    enum_nodes, enum_jobs, [](CountState& s, const BetaTree&) { s.n += 1; });
                std::cout << st.n.str() << "\n";
            }
        } else if (*dist_cmd) {
            auto comma = dist_pair.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("--pair wants statA,statB");
            auto a = stat_from_name(dist_pair.substr(0, comma));
            auto b = stat_from_name(dist_pair.substr(comma + 1));
            if (!a || !b) throw std::invalid_argument("unknown statistic in '" + dist_pair + "'");
            JointDistTable tab = joint_distribution(dist_nodes, *a, *b, dist_jobs);
            std::cout << table_to_json(tab, *a, *b, dist_nodes).dump() << "\n";
        } else if (*fp_cmd) {
            FixedPointResult res = fixed_points(fp_nodes, fp_list, fp_jobs);
            std::cout << res.count.str() << "\n";
            for (const auto& s : res.trees) std::cout << s << "\n";
        } else if (*map_cmd) {
            if (*map_from) {
                BicubicMap m = to_map(parse_tree(mft_tree));
                if (mft_format == "dot")
                    std::cout << map_to_dot(m);
                else
                    std::cout << map_to_json(m).dump() << "\n";
            } else if (*map_stats) {
                if (ms_tree.empty() == ms_file.empty())
                    throw std::invalid_argument("map stats wants exactly one of --tree/--map");
                std::cout << map_stats_to_json(map_statistics(load_map(ms_tree, ms_file))).dump()
                          << "\n";
            } else if (*map_phi) {
                if (mp_tree.empty() == mp_file.empty())
                    throw std::invalid_argument("map phi wants exactly one of --tree/--map");
                BicubicMap m = load_map(mp_tree, mp_file);
                for (int k = 0; k < mp_times; ++k) m = phi(m);
                if (mp_format == "dot")
                    std::cout << map_to_dot(m);
                else
                    std::cout << map_to_json(m).dump() << "\n";
            }
        } else if (*gf_cmd) {
            Series3 f = solve_f(gf_order);
            std::vector<BigInt> expected;
            for (int n = 0; n <= f.order(); ++n) expected.push_back(count_trees(n + 1));
            GfCheckResult checks = gf_checks(f, expected);
            json summary;
            summary["order"] = f.order();
            summary["pass"] = checks.pass;
            summary["detail"] = checks.detail;
            json counts = json::array();
            Series3 f11 = f.subst_x1().subst_y1();
            for (int n = 0; n <= f.order(); ++n) counts.push_back(f11.at(n).coeff(0, 0).str());
            summary["tree_counts"] = std::move(counts);
            if (gf_dump) summary["coefficients"] = series_to_json(f);
            std::cout << summary.dump(2) << "\n";
            if (!checks.pass) g_exit = 1;
        } else if (*verify_cmd) {
            std::vector<std::string> names;
            for (const std::string& n : verify_names) {
                if (n == "all") {
                    for (const auto& c : all_check_names()) names.push_back(c);
                } else {
                    names.push_back(n);
                }
            }
            VerifyOptions opt;
            if (verify_max > 0) opt.max_nodes = verify_max;
            opt.jobs = verify_jobs;
            if (!verify_cache.empty()) opt.cache_dir = verify_cache;
            if (!verify_oeis.empty()) opt.oeis_bfile = verify_oeis;
            print_reports(verify_suite(names, opt), verify_report == "json");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
