#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jacrank/curve.hpp"
#include "jacrank/parallel.hpp"

namespace jacrank {

enum class Route { Criterion, Oracle, Cartier };

std::string_view to_string(Route r);
std::optional<Route> route_from_string(std::string_view s);

/// p-rank verdict from one route. `decided` is false when the route does not
/// apply or its hypotheses fail; `detail` then says why.
struct PrankVerdict {
  Route route = Route::Oracle;
  bool decided = false;
  std::optional<int> prank;          // exact value, when the route gives one
  std::optional<bool> prank0;
  std::optional<bool> supersingular;
  std::string detail;
};

PrankVerdict prank_verdict(const CurveSpec& curve, Route route, const RunConfig& cfg = {});

/// Decided verdicts agree on p-rank 0 and on exact values where both have one.
bool routes_agree(std::span<const PrankVerdict> verdicts);

}  // namespace jacrank
