#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "jacrank/json_io.hpp"
#include "jacrank/parallel.hpp"
#include "jacrank/prank.hpp"

namespace jacrank {

// One JSON document per subcommand. Each embeds the canonical field.

Json jacobi_report(std::uint64_t m, std::uint64_t p, int h, std::span<const int> a, const RunConfig& cfg = {});
Json stickelberger_report(std::uint64_t m, std::uint64_t p, std::span<const int> a);
Json criteria_report(std::uint64_t m, std::uint64_t p, std::span<const int> a);
Json lpoly_report(const CurveSpec& curve, std::optional<int> j, const RunConfig& cfg = {});
Json zeta_report(const CurveSpec& curve, const RunConfig& cfg = {});
Json cartier_report(std::uint64_t p, std::span<const std::int64_t> f);
Json deuring_report(std::uint64_t p);

struct PrankReport {
  Json json;
  bool agree = true;
};
PrankReport prank_report(const CurveSpec& curve, std::span<const Route> routes, const RunConfig& cfg = {});

/// Scans the null entries of the template's "branch" array over the field and
/// writes one TSV row per tuple found to have p-rank 0. Returns the row count.
std::uint64_t search_branch(const Json& tmpl, std::ostream& out, const RunConfig& cfg = {});

}  // namespace jacrank
