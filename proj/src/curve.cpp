#include "jacrank/curve.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "jacrank/errors.hpp"
#include "jacrank/numtheory.hpp"

namespace jacrank {
namespace {

void check_order(const Field& F, std::uint64_t m) {
  if (!nt::is_prime(m)) fail(ErrorCode::NonPrime, "m = " + std::to_string(m) + " is not prime");
  if (F.p() == m) fail(ErrorCode::RamifiedPrime, "characteristic equals m");
  if ((F.size() - 1) % m != 0)
    fail(ErrorCode::OrderMismatch, "m = " + std::to_string(m) + " does not divide q - 1 = " + std::to_string(F.size() - 1));
}

FqElem eval(const Field& F, const std::vector<FqElem>& f, FqElem x) {
  FqElem acc = F.zero();
  for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

}  // namespace

CurveSpec CurveSpec::projective_line(FieldPtr field, std::uint64_t m, std::vector<int> exponents,
                                     std::vector<FqElem> branch) {
  check_order(*field, m);
  if (exponents.size() != branch.size()) fail(ErrorCode::Validation, "exponents and branch points differ in length");
  for (int a : exponents) {
    if (a <= 0 || static_cast<std::uint64_t>(a) >= m)
      fail(ErrorCode::BadExponent, "exponent " + std::to_string(a) + " outside (0, m)");
  }
  std::set<FqElem> seen;
  for (auto x : branch) {
    if (x.code >= field->size()) fail(ErrorCode::FieldMismatch, "branch point outside the field");
    if (!seen.insert(x).second) fail(ErrorCode::Validation, "branch points must be distinct");
  }
  CurveSpec c;
  c.field = std::move(field);
  c.m = m;
  c.exponents = std::move(exponents);
  c.branch = std::move(branch);
  if (c.branch_places() < 2) fail(ErrorCode::Validation, "a cyclic cover of P^1 needs at least two branch places");
  return c;
}

CurveSpec CurveSpec::superelliptic(FieldPtr field, std::uint64_t m, std::uint64_t m0, std::vector<FqElem> f0) {
  check_order(*field, m);
  const Field& F = *field;
  if (m0 < 2) fail(ErrorCode::Validation, "m0 must be at least 2");
  if (m0 % F.p() == 0) fail(ErrorCode::Validation, "characteristic divides m0");
  if (f0.size() < 2 || f0.back() != F.one()) fail(ErrorCode::Validation, "f0 must be monic of degree >= 1");
  const std::uint64_t n = f0.size() - 1;
  if (nt::gcd(n, m0) != 1) fail(ErrorCode::Validation, "deg f0 must be prime to m0");
  if (n % m == 0) fail(ErrorCode::Validation, "m divides deg f0, so infinity is unbranched");
  std::vector<FqElem> roots;
  for (std::uint64_t c = 0; c < F.size(); ++c) {
    if (eval(F, f0, {c}) == F.zero()) roots.push_back({c});
  }
  if (roots.size() != n) fail(ErrorCode::NotSquarefree, "f0 must be squarefree and split over F_q");
  CurveSpec c;
  c.field = std::move(field);
  c.m = m;
  c.exponents.assign(n, 1);
  c.branch = std::move(roots);
  c.base = SuperellipticBase{m0, std::move(f0)};
  return c;
}

int CurveSpec::infinity_exponent() const {
  std::int64_t s = 0;
  if (base) {
    s = -static_cast<std::int64_t>(base->f0.size() - 1);
  } else {
    for (int a : exponents) s -= a;
  }
  return static_cast<int>(nt::reduce(s, m));
}

int CurveSpec::base_genus() const {
  if (!base) return 0;
  return static_cast<int>((base->m0 - 1) * (base->f0.size() - 2) / 2);
}

std::vector<int> CurveSpec::jacobi_exponents() const {
  if (infinity_branched()) return exponents;
  return std::vector<int>(exponents.begin(), exponents.end() - 1);
}

}  // namespace jacrank
