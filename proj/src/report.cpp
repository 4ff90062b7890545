#include "jacrank/report.hpp"

#include <algorithm>
#include <sstream>

#include "jacrank/cartier.hpp"
#include "jacrank/charsum.hpp"
#include "jacrank/criteria.hpp"
#include "jacrank/errors.hpp"
#include "jacrank/zeta.hpp"

namespace jacrank {
namespace {

using u64 = std::uint64_t;

Json cyclo_list(const std::vector<CycloInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json exponent_json(const ExponentData& e) {
  Json theta = Json::array();
  for (const auto& t : e.theta) theta.push_back(Json{{"t", t.t}, {"sigma", t.sigma}, {"exponent", t.exponent}});
  Json d = Json::object(), O = Json::object();
  for (u64 u = 1; u < e.m; ++u) {
    d[std::to_string(u)] = e.d[u];
    O[std::to_string(u)] = e.O[u];
  }
  return Json{{"m", e.m}, {"p", e.p}, {"a", e.a}, {"h", e.h}, {"b", e.b}, {"c_h", e.c_h},
              {"e_h", e.e_h}, {"d", d}, {"theta", theta}, {"O", O}};
}

Json base_json(const CurveSpec& curve) {
  return Json{{"field", to_json(curve.field->spec())}, {"curve", to_json(curve)}};
}

}  // namespace

Json jacobi_report(u64 m, u64 p, int h, std::span<const int> a, const RunConfig& cfg) {
  auto F = Field::make(p, h);
  auto J = jacobi_sum(F, m, a, cfg);
  const auto& fact = factorization(m, p);
  auto v = valuations(J, p);
  auto e = exponent_data(m, a, p);
  auto predicted = predicted_valuations(e, *F, fact);
  Json primes = Json::array();
  for (size_t i = 0; i < fact.factors_mod_p.size(); ++i)
    primes.push_back(Json{{"index", i}, {"factor_mod_p", fact.factors_mod_p[i]}, {"valuation", v[i]},
                          {"predicted", predicted[i]}});
  Json out{{"field", to_json(F->spec())}, {"m", m}, {"a", std::vector<int>(a.begin(), a.end())}, {"J", to_json(J)}};
  auto s = abs_square(J);
  out["abs_square"] = s ? Json(*s) : Json(nullptr);
  out["character_prime"] = character_prime(*F, fact);
  out["valuations"] = primes;
  return out;
}

Json stickelberger_report(u64 m, u64 p, std::span<const int> a) {
  auto e = exponent_data(m, a, p);
  auto F = Field::make(p, e.h);
  Json out = exponent_json(e);
  out["field"] = to_json(F->spec());
  return out;
}

Json criteria_report(u64 m, u64 p, std::span<const int> a) {
  auto e = exponent_data(m, a, p);
  auto F = Field::make(p, e.h);
  bool ns = not_supersingular_test(e), np = not_prank0_test(e);
  return Json{{"field", to_json(F->spec())},
              {"exponents", exponent_json(e)},
              {"not_supersingular", ns ? "certified" : "inconclusive"},
              {"not_prank0", np ? "certified" : "inconclusive"},
              {"not_prank0_requires", "base P1"}};
}

Json lpoly_report(const CurveSpec& curve, std::optional<int> j, const RunConfig& cfg) {
  Json out = base_json(curve);
  out["degree"] = curve.lpoly_degree();
  Json polys = Json::array();
  std::vector<int> js;
  if (j) {
    if (*j <= 0 || static_cast<u64>(*j) >= curve.m) fail(ErrorCode::Validation, "-j must lie in [1, m-1]");
    js.push_back(*j);
  } else {
    for (u64 k = 1; k < curve.m; ++k) js.push_back(static_cast<int>(k));
  }
  std::optional<LPoly> first;
  for (int k : js) {
    auto P = l_polynomial(curve, k, cfg);
    if (k == 1) first = P;
    polys.push_back(Json{{"j", k}, {"coeffs", cyclo_list(P)}});
  }
  out["polynomials"] = polys;
  if (first) {
    Json rec;
    try {
      auto c = verify_constant_term(curve, *first, cfg);
      rec = Json{{"ok", true}, {"unit_exponent", *c.unit_exponent}, {"constant", to_json(c.constant)},
                 {"jacobi", to_json(c.jacobi)}};
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoUnitMatch) throw;
      rec = Json{{"ok", false}, {"error", err.what()}};
    }
    out["constant_term"] = rec;
  }
  return out;
}

Json zeta_report(const CurveSpec& curve, const RunConfig& cfg) {
  auto z = zeta_numerator(curve, cfg);
  Json out = base_json(curve);
  out["genus"] = z.genus;
  out["counts"] = z.counts;
  out["L"] = z.L;
  out["prank"] = z.prank;
  out["supersingular"] = z.supersingular;
  out["verified_extra"] = z.verified_extra;
  return out;
}

Json cartier_report(u64 p, std::span<const std::int64_t> f) {
  auto F = Field::make(p, 1);
  std::vector<FqElem> poly;
  for (auto c : f) poly.push_back(F->from_int(c));
  auto A = cartier_matrix(F, poly);
  Json rows = Json::array();
  for (const auto& row : A.entries) {
    Json r = Json::array();
    for (auto v : row) r.push_back(v.code);
    rows.push_back(r);
  }
  Json out{{"field", to_json(F->spec())}, {"genus", A.g}, {"matrix", rows}};
  out["genus2_prank0"] = A.g == 2 ? Json(genus2_prank0_test(A)) : Json(nullptr);
  out["prank"] = semilinear_prank(A);
  return out;
}

Json deuring_report(u64 p) {
  auto d = deuring(p);
  auto F = Field::make(p, 2);
  Json roots = Json::array();
  for (auto r : d.roots) roots.push_back(F->coeffs(r));
  return Json{{"field", to_json(F->spec())}, {"p", p}, {"coeffs", d.coeffs}, {"roots", roots}};
}

PrankReport prank_report(const CurveSpec& curve, std::span<const Route> routes, const RunConfig& cfg) {
  std::vector<PrankVerdict> vs;
  for (auto r : routes) vs.push_back(prank_verdict(curve, r, cfg));
  PrankReport rep;
  rep.agree = routes_agree(vs);
  rep.json = base_json(curve);
  Json list = Json::array();
  for (const auto& v : vs) list.push_back(to_json(v));
  rep.json["verdicts"] = list;
  rep.json["agree"] = rep.agree;
  return rep;
}

std::uint64_t search_branch(const Json& tmpl, std::ostream& out, const RunConfig& cfg) {
  if (!tmpl.is_object()) fail(ErrorCode::Validation, "/: expected an object");
  for (const char* key : {"p", "h", "exponents", "branch"})
    if (!tmpl.contains(key)) fail(ErrorCode::Validation, std::string("/") + key + ": missing");
  const Json& br = tmpl["branch"];
  const Json& ex = tmpl["exponents"];
  if (!br.is_array() || !ex.is_array() || br.size() != ex.size())
    fail(ErrorCode::Validation, "/branch: expected an array as long as /exponents");
  if (!tmpl["p"].is_number_unsigned() || !tmpl["h"].is_number_unsigned())
    fail(ErrorCode::Validation, "/p: expected positive integers for p and h");
  auto F = Field::make(tmpl["p"].get<u64>(), tmpl["h"].get<int>());
  const u64 q = F->size();

  std::vector<size_t> free;
  std::vector<u64> fixed;
  for (size_t i = 0; i < br.size(); ++i) {
    if (br[i].is_null())
      free.push_back(i);
    else
      fixed.push_back(F->rank(element_from_json(*F, br[i], "/branch/" + std::to_string(i))));
  }
  if (free.empty()) fail(ErrorCode::Validation, "/branch: no null entries to scan");
  u64 total = 1;
  for (size_t k = 0; k < free.size(); ++k) {
    if (total > cfg.max_terms / q) fail(ErrorCode::BudgetExceeded, "scan exceeds --max-terms");
    total *= q;
  }

  // Tuple index -> ranks, or nothing when the tuple repeats a point or is a
  // permutation of an earlier one (equal exponents, decreasing ranks).
  auto decode = [&](u64 idx) -> std::optional<std::vector<u64>> {
    std::vector<u64> r(free.size());
    for (size_t k = free.size(); k-- > 0;) {
      r[k] = idx % q;
      idx /= q;
    }
    for (size_t k = 0; k < r.size(); ++k) {
      if (std::find(fixed.begin(), fixed.end(), r[k]) != fixed.end()) return std::nullopt;
      for (size_t l = k + 1; l < r.size(); ++l) {
        if (r[k] == r[l]) return std::nullopt;
        if (ex[free[k]] == ex[free[l]] && r[k] > r[l]) return std::nullopt;
      }
    }
    return r;
  };

  RunConfig inner = cfg;
  inner.threads = 1;
  auto row_for = [&](u64 idx) -> std::string {
    auto r = decode(idx);
    if (!r) return {};
    Json t = tmpl;
    for (size_t k = 0; k < free.size(); ++k) t["branch"][free[k]] = element_json(*F, F->at_rank((*r)[k]));
    auto curve = curve_from_json(t);
    auto v = prank_verdict(curve, Route::Criterion, inner);
    if (!v.decided) v = prank_verdict(curve, Route::Oracle, inner);
    if (!v.prank0 || !*v.prank0) return {};
    std::ostringstream line;
    for (size_t k = 0; k < free.size(); ++k) line << t["branch"][free[k]].dump() << '\t';
    line << "prank0\t" << to_string(v.route) << ": " << v.detail << '\n';
    return line.str();
  };

  out << "#";
  for (size_t k = 0; k < free.size(); ++k) out << "alpha" << (k + 1) << '\t';
  out << "verdict\twitnesses\n";
  std::uint64_t rows = 0;
  const u64 chunk = 256;
  for (u64 start = 0; start < total; start += chunk) {
    u64 n = std::min(chunk, total - start);
    auto parts = parallel_blocks<std::vector<std::string>>(n, cfg.threads, [&](u64 b, u64 e) {
      std::vector<std::string> lines;
      for (u64 i = b; i < e; ++i) lines.push_back(row_for(start + i));
      return lines;
    });
    for (const auto& part : parts)
      for (const auto& line : part)
        if (!line.empty()) {
          out << line;
          ++rows;
        }
    out.flush();
  }
  return rows;
}

}  // namespace jacrank
