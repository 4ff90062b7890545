#include "jacrank/criteria.hpp"

#include <algorithm>
#include <string>

#include "jacrank/errors.hpp"
#include "jacrank/numtheory.hpp"
#include "jacrank/zeta.hpp"

namespace jacrank {
namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

}  // namespace

ExponentData exponent_data(std::uint64_t m, std::span<const int> a, std::uint64_t p) {
  if (!nt::is_prime(m)) fail(ErrorCode::NonPrime, "m must be prime");
  if (!nt::is_prime(p)) fail(ErrorCode::NonPrime, "p must be prime");
  if (p == m) fail(ErrorCode::RamifiedPrime, "p = m");
  if (a.empty()) fail(ErrorCode::BadExponent, "empty exponent tuple");
  for (int v : a)
    if (v <= 0 || static_cast<u64>(v) >= m) fail(ErrorCode::BadExponent, "exponent " + std::to_string(v) + " outside (0, m)");
  ExponentData e;
  e.m = m;
  e.p = p;
  e.a.assign(a.begin(), a.end());
  e.h = static_cast<int>(nt::multiplicative_order(p % m, m));
  e.b = static_cast<int>((m - 1) / static_cast<u64>(e.h));
  for (u64 x = 1, i = 0; i < static_cast<u64>(e.h); ++i, x = x * p % m) e.c_h.push_back(static_cast<int>(x));
  std::sort(e.c_h.begin(), e.c_h.end());
  std::vector<bool> covered(m, false);
  for (u64 t = 1; t < m; ++t) {
    if (covered[t]) continue;
    e.e_h.push_back(static_cast<int>(t));
    for (int u : e.c_h) covered[t * static_cast<u64>(u) % m] = true;
  }
  e.d.assign(m, 0);
  for (u64 u = 1; u < m; ++u) {
    u64 total = 0;  // sum of <u a_i / m> scaled by m
    for (int v : a) total += u * static_cast<u64>(v) % m;
    e.d[u] = static_cast<int>(total / m);
  }
  for (u64 t = 1; t < m; ++t) {
    int s = static_cast<int>(nt::inverse_mod(m - t, m));
    e.theta.push_back({static_cast<int>(t), s, e.d[t]});
  }
  e.O.assign(m, 0);
  for (u64 t = 1; t < m; ++t)
    for (int u : e.c_h) e.O[t] += e.d[t * static_cast<u64>(u) % m];
  return e;
}

bool not_supersingular_test(const ExponentData& e) {
  return std::any_of(e.e_h.begin(), e.e_h.end(), [&](int t) { return e.O[1] != e.O[t]; });
}

bool not_prank0_test(const ExponentData& e) {
  return std::any_of(e.e_h.begin(), e.e_h.end(), [&](int t) { return e.O[t] == 0; });
}

namespace {

// Residues r with G_i(zeta_q^r) = 0 in F_q.
std::vector<std::vector<int>> roots_in_field(const Field& field, const PrimeFactorization& fact) {
  auto mu = mth_roots_of_unity(field, fact.m);
  std::vector<std::vector<int>> out(fact.factors_mod_p.size());
  for (size_t i = 0; i < fact.factors_mod_p.size(); ++i) {
    const auto& g = fact.factors_mod_p[i];
    for (u64 r = 1; r < fact.m; ++r) {
      FqElem acc = field.zero();
      for (size_t k = g.size(); k-- > 0;) acc = field.add(field.mul(acc, mu.powers[r]), field.from_int(static_cast<i64>(g[k])));
      if (acc == field.zero()) out[i].push_back(static_cast<int>(r));
    }
  }
  return out;
}

}  // namespace

std::size_t character_prime(const Field& field, const PrimeFactorization& fact) {
  if (field.p() != fact.p) fail(ErrorCode::FieldMismatch, "field characteristic differs from the factorisation");
  auto roots = roots_in_field(field, fact);
  for (size_t i = 0; i < roots.size(); ++i)
    if (std::find(roots[i].begin(), roots[i].end(), 1) != roots[i].end()) return i;
  fail(ErrorCode::FieldMismatch, "zeta_q is not a root of any factor");
}

std::vector<int> predicted_valuations(const ExponentData& e, const Field& field, const PrimeFactorization& fact) {
  if (field.degree() % e.h != 0) fail(ErrorCode::OrderMismatch, "field does not contain the m-th roots of unity");
  const int scale = field.degree() / e.h;
  std::vector<int> out;
  for (const auto& rs : roots_in_field(field, fact)) {
    int t = static_cast<int>(e.m) - rs.front();
    out.push_back(scale * e.O[t]);
  }
  return out;
}

bool vanishes_mod(const CycloInt& x, const PrimeFactorization& fact, std::size_t i) {
  if (x.is_zero()) return true;
  try {
    return valuation(x, fact, i) >= 1;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::PrecisionExhausted) throw;
    return true;  // divisible by p^N
  }
}

EquationSystem prank0_equations(const CurveSpec& curve, const RunConfig& cfg, bool strict) {
  const Field& F = *curve.field;
  const u64 m = curve.m;
  auto a = curve.jacobi_exponents();
  auto e = exponent_data(m, a, F.p());
  const auto& fact = factorization(m, F.p());
  EquationSystem sys;
  sys.inert = e.b == 1;
  sys.prime_index = character_prime(F, fact);
  const int D = curve.lpoly_degree();
  std::vector<int> js;
  if (sys.inert) {
    js = {1};
  } else {
    if (!curve.on_p1()) fail(ErrorCode::BaseNotP1, "the split-prime system needs base P^1");
    for (int t : e.e_h)
      if (e.O[t] == 0) fail(ErrorCode::HypothesisViolated, "orbit sum O_" + std::to_string(t) + " vanishes");
    if (strict) {
      for (u64 j = 1; j < m; ++j) js.push_back(static_cast<int>(j));
    } else {
      js = e.e_h;
    }
  }
  for (int j : js) {
    auto sums = divisor_char_sums(curve, std::max(D - 1, 0), j, cfg);
    for (int l = 1; l <= D - 1; ++l) {
      Equation eq{l, j, sums[l], vanishes_mod(sums[l], fact, sys.prime_index)};
      sys.all_satisfied = sys.all_satisfied && eq.satisfied;
      sys.equations.push_back(std::move(eq));
    }
  }
  sys.prank0 = sys.all_satisfied;
  if (sys.inert && !curve.on_p1()) {
    KummerModel base{curve.base->m0, {}, static_cast<i64>(curve.branch.size())};
    for (auto r : curve.branch) base.factors.emplace_back(r, 1);
    sys.base_prank = zeta_from_kummer(curve.field, base, cfg).prank;
    sys.prank0 = sys.prank0 && *sys.base_prank == 0;
  }
  return sys;
}

Deuring deuring(std::uint64_t p) {
  if (p == 2 || !nt::is_prime(p)) fail(ErrorCode::EvenCharacteristic, "Deuring polynomial needs an odd prime");
  Deuring out;
  out.p = p;
  const u64 r = (p - 1) / 2;
  u64 binom = 1;  // C(r, i) mod p, exact since r < p
  for (u64 i = 0; i <= r; ++i) {
    if (i > 0) binom = nt::mulmod(nt::mulmod(binom, r - i + 1, p), nt::inverse_mod(i, p), p);
    out.coeffs.push_back(nt::mulmod(binom, binom, p));
  }
  auto F = Field::make(p, 2);
  for (u64 c = 0; c < F->size(); ++c) {
    FqElem acc = F->zero();
    for (size_t i = out.coeffs.size(); i-- > 0;) acc = F->add(F->mul(acc, {c}), F->from_int(static_cast<i64>(out.coeffs[i])));
    if (acc == F->zero()) out.roots.push_back({c});
  }
  return out;
}

}  // namespace jacrank
