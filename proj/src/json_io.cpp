#include "jacrank/json_io.hpp"

#include <fstream>
#include <sstream>

#include "jacrank/errors.hpp"

namespace jacrank {
namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorCode::Validation, (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + "/" + key, "missing");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t positive(const Json& j, const std::string& where) {
  auto v = integer(j, where);
  if (v <= 0) bad(where, "expected a positive integer");
  return static_cast<std::uint64_t>(v);
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

}  // namespace

Json to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"h", spec.h}, {"modulus", spec.modulus}};
}

Json to_json(const CycloInt& x) { return Json{{"m", x.m()}, {"coeffs", x.coeffs()}}; }

Json element_json(const Field& F, FqElem a) {
  if (F.degree() == 1) return Json(a.code);
  return Json(F.coeffs(a));
}

Json to_json(const CurveSpec& curve) {
  const Field& F = *curve.field;
  Json out{{"p", F.p()}, {"h", F.degree()}, {"m", curve.m}, {"exponents", curve.exponents}};
  Json branch = Json::array();
  for (auto x : curve.branch) branch.push_back(element_json(F, x));
  out["branch"] = branch;
  if (curve.on_p1()) {
    out["base"] = "P1";
  } else {
    Json f0 = Json::array();
    for (auto c : curve.base->f0) f0.push_back(element_json(F, c));
    out["base"] = Json{{"m0", curve.base->m0}, {"f0", f0}};
  }
  return out;
}

Json to_json(const PrankVerdict& v) {
  Json out{{"route", to_string(v.route)}, {"decided", v.decided}};
  out["prank"] = v.prank ? Json(*v.prank) : Json(nullptr);
  out["prank0"] = v.prank0 ? Json(*v.prank0) : Json(nullptr);
  out["supersingular"] = v.supersingular ? Json(*v.supersingular) : Json(nullptr);
  out["detail"] = v.detail;
  return out;
}

FqElem element_from_json(const Field& F, const Json& j, const std::string& where) {
  const auto p = static_cast<std::int64_t>(F.p());
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0 || v >= p) bad(where, "element outside [0, p)");
    return F.from_int(v);
  }
  if (!j.is_array()) bad(where, "expected a field element");
  if (j.size() > static_cast<size_t>(F.degree())) bad(where, "too many coefficients");
  std::vector<std::uint64_t> c;
  for (size_t i = 0; i < j.size(); ++i) {
    auto v = integer(j[i], where + "/" + std::to_string(i));
    if (v < 0 || v >= p) bad(where + "/" + std::to_string(i), "coefficient outside [0, p)");
    c.push_back(static_cast<std::uint64_t>(v));
  }
  c.resize(F.degree(), 0);
  return F.from_coeffs(c);
}

CurveSpec curve_from_json(const Json& j) {
  if (!j.is_object()) bad("", "expected an object");
  auto p = positive(member(j, "p", ""), "/p");
  auto h = positive(member(j, "h", ""), "/h");
  if (h > 64) bad("/h", "extension degree too large");
  auto m = positive(member(j, "m", ""), "/m");
  FieldPtr F;
  try {
    F = Field::make(p, static_cast<int>(h));
  } catch (const Error& err) {
    bad("/p", err.what());
  }
  const Json* base = j.contains("base") ? &j["base"] : nullptr;
  if (!base || (base->is_string() && base->get<std::string>() == "P1")) {
    const auto& ex = array(member(j, "exponents", ""), "/exponents");
    const auto& br = array(member(j, "branch", ""), "/branch");
    if (ex.size() != br.size()) bad("/branch", "length differs from /exponents");
    std::vector<int> exps;
    std::vector<FqElem> branch;
    for (size_t i = 0; i < ex.size(); ++i) {
      auto where = "/exponents/" + std::to_string(i);
      auto v = integer(ex[i], where);
      if (v <= 0 || static_cast<std::uint64_t>(v) >= m) bad(where, "exponent outside (0, m)");
      exps.push_back(static_cast<int>(v));
      branch.push_back(element_from_json(*F, br[i], "/branch/" + std::to_string(i)));
    }
    return CurveSpec::projective_line(F, m, exps, branch);
  }
  if (!base->is_object()) bad("/base", "expected \"P1\" or {\"m0\", \"f0\"}");
  auto m0 = positive(member(*base, "m0", "/base"), "/base/m0");
  const auto& f0j = array(member(*base, "f0", "/base"), "/base/f0");
  std::vector<FqElem> f0;
  for (size_t i = 0; i < f0j.size(); ++i) f0.push_back(element_from_json(*F, f0j[i], "/base/f0/" + std::to_string(i)));
  return CurveSpec::superelliptic(F, m, m0, f0);
}

CurveSpec load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Validation, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& err) {
    fail(ErrorCode::Validation, path + ": " + err.what());
  }
  return curve_from_json(j);
}

}  // namespace jacrank
