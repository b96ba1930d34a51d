#pragma once

#include "betamaps/bicubic.hpp"
#include "betamaps/enumeration.hpp"
#include "betamaps/gf_series.hpp"
#include "betamaps/involution.hpp"
#include "betamaps/tree.hpp"

#include <json.hpp>

#include <optional>

namespace betamaps {

// {"label": int, "children": [...]}
nlohmann::json tree_to_json(const BetaTree& t);
BetaTree tree_from_json(const nlohmann::json& j); // validated

// {"kind":"black","children":[...]} | {"kind":"white","i":int,"left":...,"right":...}
nlohmann::json expr_to_json(const DecompExpr& e);
DecompExpr expr_from_json(const nlohmann::json& j);

// {"alpha":[...], "rot":[...], "root":int}
nlohmann::json map_to_json(const BicubicMap& m);
BicubicMap map_from_json(const nlohmann::json& j); // validated

nlohmann::json stats_to_json(const StatVector& sv);
nlohmann::json map_stats_to_json(const MapStats& st);

nlohmann::json table_to_json(const JointDistTable& t, Stat a, Stat b, int nodes);

// coefficient dump: [{"n":...,"a":...,"b":...,"coeff":"decimal"}...]
nlohmann::json series_to_json(const Series3& f);

nlohmann::json report_to_json(const VerifyReport& r);
std::optional<VerifyReport> report_from_json(const nlohmann::json& j);

} // namespace betamaps
