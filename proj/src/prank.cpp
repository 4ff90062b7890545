#include "jacrank/prank.hpp"

#include "jacrank/cartier.hpp"
#include "jacrank/criteria.hpp"
#include "jacrank/errors.hpp"
#include "jacrank/zeta.hpp"

namespace jacrank {
namespace {

PrankVerdict by_criterion(const CurveSpec& curve, const RunConfig& cfg) {
  PrankVerdict v;
  v.route = Route::Criterion;
  if (curve.on_p1()) {
    auto a = curve.jacobi_exponents();
    auto e = exponent_data(curve.m, a, curve.field->p());
    if (not_supersingular_test(e)) v.supersingular = false;
    if (not_prank0_test(e)) {
      v.decided = true;
      v.prank0 = false;
      v.detail = "orbit sum O_t = 0 for some t in e_h";
      return v;
    }
  }
  try {
    auto sys = prank0_equations(curve, cfg);
    v.decided = true;
    v.prank0 = sys.prank0;
    if (sys.prank0) v.prank = 0;
    int failed = 0;
    for (const auto& eq : sys.equations) failed += eq.satisfied ? 0 : 1;
    v.detail = std::string(sys.inert ? "inert" : "split") + " system, " + std::to_string(sys.equations.size()) +
               " equations, " + std::to_string(failed) + " nonzero";
    if (sys.base_prank && *sys.base_prank != 0) v.detail += ", base p-rank " + std::to_string(*sys.base_prank);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::HypothesisViolated && err.code() != ErrorCode::BaseNotP1) throw;
    v.detail = err.what();
  }
  return v;
}

PrankVerdict by_oracle(const CurveSpec& curve, const RunConfig& cfg) {
  PrankVerdict v;
  v.route = Route::Oracle;
  auto z = zeta_numerator(curve, cfg);
  v.decided = true;
  v.prank = z.prank;
  v.prank0 = z.prank == 0;
  v.supersingular = z.supersingular;
  v.detail = "zeta numerator, genus " + std::to_string(z.genus);
  return v;
}

PrankVerdict by_cartier(const CurveSpec& curve) {
  PrankVerdict v;
  v.route = Route::Cartier;
  if (curve.m != 2 || !curve.on_p1()) {
    v.detail = "needs a hyperelliptic curve over P^1";
    return v;
  }
  if (curve.field->p() == 2) {
    v.detail = "needs odd characteristic";
    return v;
  }
  auto A = cartier_matrix(curve.field, branch_polynomial(curve));
  v.decided = true;
  v.prank = semilinear_prank(A);
  v.prank0 = *v.prank == 0;
  if (A.g == 1) v.supersingular = *v.prank0;
  v.detail = "Cartier-Manin matrix, genus " + std::to_string(A.g);
  return v;
}

}  // namespace

std::string_view to_string(Route r) {
  switch (r) {
    case Route::Criterion: return "criterion";
    case Route::Oracle: return "oracle";
    case Route::Cartier: return "cartier";
  }
  return "?";
}

std::optional<Route> route_from_string(std::string_view s) {
  if (s == "criterion") return Route::Criterion;
  if (s == "oracle") return Route::Oracle;
  if (s == "cartier") return Route::Cartier;
  return std::nullopt;
}

PrankVerdict prank_verdict(const CurveSpec& curve, Route route, const RunConfig& cfg) {
  switch (route) {
    case Route::Criterion: return by_criterion(curve, cfg);
    case Route::Oracle: return by_oracle(curve, cfg);
    case Route::Cartier: return by_cartier(curve);
  }
  fail(ErrorCode::Unsupported, "unknown route");
}

bool routes_agree(std::span<const PrankVerdict> verdicts) {
  const PrankVerdict* first = nullptr;
  std::optional<int> exact;
  for (const auto& v : verdicts) {
    if (!v.decided) continue;
    if (first && first->prank0 != v.prank0) return false;
    if (!first) first = &v;
    if (v.prank) {
      if (exact && *exact != *v.prank) return false;
      exact = v.prank;
    }
  }
  for (const auto& a : verdicts)
    for (const auto& b : verdicts)
      if (a.decided && b.decided && a.supersingular && b.supersingular && *a.supersingular != *b.supersingular)
        return false;
  return true;
}

}  // namespace jacrank
