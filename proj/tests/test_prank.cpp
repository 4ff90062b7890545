#include <vector>

#include "doctest.h"
#include "jacrank/prank.hpp"

using namespace jacrank;

namespace {
FqElem el(std::uint64_t c) { return {c}; }
}  // namespace

TEST_CASE("F_7 curves y^3 = x(x-1)(x-a)^2 have positive 7-rank") {
  auto F = Field::make(7, 1);
  for (std::uint64_t a = 2; a < 7; ++a) {
    auto C = CurveSpec::projective_line(F, 3, {1, 1, 2}, {el(0), el(1), el(a)});
    std::vector<PrankVerdict> v;
    for (auto r : {Route::Criterion, Route::Oracle, Route::Cartier}) v.push_back(prank_verdict(C, r));
    CHECK(v[0].decided);
    CHECK(v[0].prank0 == false);
    CHECK(v[1].prank >= 1);
    CHECK_FALSE(v[2].decided);
    CHECK(routes_agree(v));
  }
}

TEST_CASE("three routes on genus-2 curves over F_7 and F_9") {
  for (auto [p, h] : {std::pair{7, 1}, {3, 2}}) {
    auto F = Field::make(p, h);
    for (std::uint64_t a = 2; a + 2 < F->size(); ++a) {
      auto C = CurveSpec::projective_line(F, 2, {1, 1, 1, 1, 1}, {el(0), el(1), el(a), el(a + 1), el(a + 2)});
      std::vector<PrankVerdict> v;
      for (auto r : {Route::Criterion, Route::Oracle, Route::Cartier}) v.push_back(prank_verdict(C, r));
      CHECK(v[1].decided);
      CHECK(v[2].decided);
      CHECK(v[1].prank == v[2].prank);
      CHECK(routes_agree(v));
    }
  }
}

TEST_CASE("route names") {
  for (auto r : {Route::Criterion, Route::Oracle, Route::Cartier}) CHECK(route_from_string(to_string(r)) == r);
  CHECK_FALSE(route_from_string("all"));
}

TEST_CASE("agreement detects conflicts") {
  PrankVerdict a{Route::Oracle, true, 1, false, std::nullopt, ""};
  PrankVerdict b{Route::Criterion, true, 0, true, std::nullopt, ""};
  PrankVerdict c{Route::Cartier, false, std::nullopt, std::nullopt, std::nullopt, ""};
  CHECK_FALSE(routes_agree(std::vector{a, b}));
  CHECK(routes_agree(std::vector{a, c}));
}
