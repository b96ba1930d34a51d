#include "betamaps/serialize.hpp"

namespace betamaps {

using nlohmann::json;

json tree_to_json(const BetaTree& t) {
    json j;
    j["label"] = t.label;
    json kids = json::array();
    for (const BetaTree& c : t.children) kids.push_back(tree_to_json(c));
    j["children"] = std::move(kids);
    return j;
}

namespace {

BetaTree tree_from_json_raw(const json& j) {
    BetaTree t(j.at("label").get<int>());
    if (j.contains("children"))
        for (const json& c : j.at("children")) t.children.push_back(tree_from_json_raw(c));
    return t;
}

} // namespace

BetaTree tree_from_json(const json& j) {
    BetaTree t = tree_from_json_raw(j);
    auto violations = validate_tree(t);
    if (!violations.empty()) {
        std::string what = "invalid beta(0,1)-tree: " + violations.front().message;
        throw ValidationError(what, std::move(violations));
    }
    return t;
}

json expr_to_json(const DecompExpr& e) {
    json j;
    if (e.is_black()) {
        j["kind"] = "black";
        json kids = json::array();
        for (const DecompExpr& c : e.children) kids.push_back(expr_to_json(c));
        j["children"] = std::move(kids);
    } else {
        j["kind"] = "white";
        j["i"] = e.white_index;
        j["left"] = expr_to_json(e.children.front());
        j["right"] = expr_to_json(e.children.back());
    }
    return j;
}

DecompExpr expr_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "black") {
        std::vector<DecompExpr> kids;
        if (j.contains("children"))
            for (const json& c : j.at("children")) kids.push_back(expr_from_json(c));
        return DecompExpr::black(std::move(kids));
    }
    if (kind == "white")
        return DecompExpr::white(j.at("i").get<int>(), expr_from_json(j.at("left")),
                                 expr_from_json(j.at("right")));
    throw std::invalid_argument("expr_from_json: unknown kind '" + kind + "'");
}

json map_to_json(const BicubicMap& m) {
    return json{{"alpha", m.alpha}, {"rot", m.rot}, {"root", m.root}};
}

BicubicMap map_from_json(const json& j) {
    BicubicMap m;
    m.alpha = j.at("alpha").get<std::vector<int>>();
    m.rot = j.at("rot").get<std::vector<int>>();
    m.root = j.at("root").get<int>();
    analyze_map(m); // throws MapError when invalid
    return m;
}

json stats_to_json(const StatVector& sv) {
    return json{{"root", sv.root}, {"sub", sv.sub},     {"rzero", sv.rzero},
                {"rmod", sv.rmod}, {"open", sv.open},   {"exc", sv.exc},
                {"nodes", sv.nodes}, {"edges", sv.edges}};
}

json map_stats_to_json(const MapStats& st) {
    return json{{"f1r3", st.f1r3}, {"f3r2", st.f3r2}, {"b", st.b},
                {"s1r3", st.s1r3}, {"one", st.one}};
}

json table_to_json(const JointDistTable& t, Stat a, Stat b, int nodes) {
    json entries = json::array();
    for (const auto& [key, count] : t.counts)
        entries.push_back(json{{"a", key.first}, {"b", key.second}, {"count", count.str()}});
    return json{{"nodes", nodes},
                {"pair", {std::string(stat_name(a)), std::string(stat_name(b))}},
                {"entries", std::move(entries)},
                {"total", t.total.str()}};
}

json series_to_json(const Series3& f) {
    json out = json::array();
    for (int n = 0; n <= f.order(); ++n) {
        const BivarPoly& p = f.at(n);
        for (int a = 0; a <= p.deg_x(); ++a)
            for (int b = 0; b <= p.deg_y(); ++b) {
                BigInt c = p.coeff(a, b);
                if (c != 0)
                    out.push_back(json{{"n", n}, {"a", a}, {"b", b}, {"coeff", c.str()}});
            }
    }
    return out;
}

json report_to_json(const VerifyReport& r) {
    json j{{"check", r.check}, {"max_nodes", r.max_nodes}, {"pass", r.pass},
           {"detail", r.detail}, {"seconds", r.seconds},   {"cached", r.cached}};
    if (r.counterexample)
        j["counterexample"] = *r.counterexample;
    else
        j["counterexample"] = nullptr;
    return j;
}

std::optional<VerifyReport> report_from_json(const json& j) {
    try {
        VerifyReport r;
        r.check = j.at("check").get<std::string>();
        r.max_nodes = j.at("max_nodes").get<int>();
        r.pass = j.at("pass").get<bool>();
        r.detail = j.at("detail").get<std::string>();
        r.seconds = j.at("seconds").get<double>();
        if (j.contains("counterexample") && !j.at("counterexample").is_null())
            r.counterexample = j.at("counterexample").get<std::string>();
        return r;
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

} // namespace betamaps
