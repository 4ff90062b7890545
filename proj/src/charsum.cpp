#include "jacrank/charsum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <string>

#include "jacrank/errors.hpp"
#include "jacrank/numtheory.hpp"
#include "jacrank/zeta.hpp"

namespace jacrank {
namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

void check_exponents(std::uint64_t m, std::span<const int> a) {
  if (a.empty()) fail(ErrorCode::BadExponent, "empty exponent tuple");
  for (int v : a) {
    if (v <= 0 || static_cast<u64>(v) >= m) fail(ErrorCode::BadExponent, "exponent " + std::to_string(v) + " outside (0, m)");
  }
}

// Exponent of chi for every element code; -1 at zero.
std::vector<int> exponent_table(const Character& chi) {
  const Field& F = chi.field();
  std::vector<int> t(F.size());
  for (u64 c = 0; c < F.size(); ++c) t[c] = chi.exponent({c});
  return t;
}

CycloInt histogram_value(u64 m, const std::vector<i64>& hist) { return CycloInt::from_histogram(m, hist); }

std::vector<i64> add_histograms(const std::vector<std::vector<i64>>& parts, u64 m) {
  std::vector<i64> total(m, 0);
  for (const auto& part : parts)
    for (u64 k = 0; k < m; ++k) total[k] = nt::checked_add(total[k], part[k]);
  return total;
}

}  // namespace

Character::Character(FieldPtr field, std::uint64_t m)
    : field_(std::move(field)), m_(m), mu_(mth_roots_of_unity(*field_, m)) {}

int Character::exponent(FqElem z) const {
  if (z == field_->zero()) return -1;
  if (field_->has_tables()) return static_cast<int>(field_->log(z) % m_);
  auto k = mu_.dlog_of(field_->pow(z, (field_->size() - 1) / m_));
  return static_cast<int>(*k);
}

CharValue chi_p(const FieldPtr& field, std::uint64_t m, FqElem z) { return Character(field, m)(z); }

CycloInt jacobi_sum_direct(const FieldPtr& field, std::uint64_t m, std::span<const int> a, const RunConfig& cfg) {
  check_exponents(m, a);
  Character chi(field, m);
  const Field& F = *field;
  const u64 q = F.size();
  const size_t d = a.size();
  u64 n = nt::checked_pow(q, d - 1, cfg.max_terms);
  if (n == 0) fail(ErrorCode::BudgetExceeded, "direct Jacobi sum needs more than max_terms terms");
  auto table = exponent_table(chi);
  const FqElem minus_one = F.neg(F.one());
  auto parts = parallel_blocks<std::vector<i64>>(n, cfg.threads, [&](u64 begin, u64 end) {
    std::vector<i64> hist(m, 0);
    for (u64 idx = begin; idx < end; ++idx) {
      u64 rest = idx;
      FqElem sum = F.zero();
      u64 e = 0;
      bool zero = false;
      for (size_t i = 0; i + 1 < d; ++i) {
        FqElem z{rest % q};
        rest /= q;
        int k = table[z.code];
        if (k < 0) {
          zero = true;
          break;
        }
        e += static_cast<u64>(a[i]) * static_cast<u64>(k);
        sum = F.add(sum, z);
      }
      if (zero) continue;
      int k = table[F.sub(minus_one, sum).code];
      if (k < 0) continue;
      e += static_cast<u64>(a[d - 1]) * static_cast<u64>(k);
      ++hist[e % m];
    }
    return hist;
  });
  CycloInt J = histogram_value(m, add_histograms(parts, m));
  return d % 2 == 1 ? J : -J;
}

CycloInt jacobi_sum_recurrence(const FieldPtr& field, std::uint64_t m, std::span<const int> a) {
  check_exponents(m, a);
  Character chi(field, m);
  const Field& F = *field;
  const u64 q = F.size();
  auto table = exponent_table(chi);
  const FqElem one = F.one();
  const u64 minus_one_exp = static_cast<u64>(table[F.neg(one).code]);

  // jj(x, y) = sum_{z != 0, 1} chi^x(z) chi^y(1 - z)
  std::map<std::pair<u64, u64>, CycloInt> cache;
  auto jj = [&](u64 x, u64 y) -> const CycloInt& {
    auto it = cache.find({x, y});
    if (it != cache.end()) return it->second;
    std::vector<i64> hist(m, 0);
    for (u64 c = 0; c < q; ++c) {
      int kz = table[c];
      int kw = table[F.sub(one, {c}).code];
      if (kz < 0 || kw < 0) continue;
      ++hist[(x * static_cast<u64>(kz) + y * static_cast<u64>(kw)) % m];
    }
    return cache.emplace(std::pair{x, y}, CycloInt::from_histogram(m, hist)).first->second;
  };

  // G(s) = sum over z_1 + ... + z_k = s; G(s) = chi^{A}(s) G(1) for s != 0.
  CycloInt g1 = CycloInt::integer(m, 1);
  CycloInt g0(m);
  u64 A = static_cast<u64>(a[0]) % m;
  for (size_t k = 1; k < a.size(); ++k) {
    u64 ak = static_cast<u64>(a[k]);
    u64 next = (A + ak) % m;
    CycloInt n1 = g1 * jj(ak, A) + g0;
    CycloInt n0(m);
    if (next == 0) n0 = g1 * CycloInt::root_of_unity(m, static_cast<i64>(A * minus_one_exp % m)).scaled(static_cast<i64>(q - 1));
    g1 = std::move(n1);
    g0 = std::move(n0);
    A = next;
  }
  CycloInt J = g1 * CycloInt::root_of_unity(m, static_cast<i64>(A * minus_one_exp % m));
  return a.size() % 2 == 1 ? J : -J;
}

CycloInt jacobi_sum(const FieldPtr& field, std::uint64_t m, std::span<const int> a, const RunConfig& cfg) {
  check_exponents(m, a);
  u64 n = nt::checked_pow(field->size(), a.size() - 1, u64{1} << 20);
  if (n != 0) return jacobi_sum_direct(field, m, a, cfg);
  return jacobi_sum_recurrence(field, m, a);
}

// ---------------------------------------------------------------------------
// f(D)

namespace {

FqElem value_at(const CurveSpec& curve, const PlacePoint& pt) {
  if (pt.at_infinity) {
    if (curve.infinity_branched()) fail(ErrorCode::SupportMeetsT, "divisor contains infinity");
    return curve.field->one();  // f / x^{sum a} is 1 at infinity, and sum a is a multiple of m
  }
  auto ext = extension_of(curve.field, pt.degree);
  const Field& T = ext->top();
  FqElem v;
  if (curve.on_p1()) {
    v = T.one();
    for (size_t i = 0; i < curve.branch.size(); ++i)
      v = T.mul(v, T.pow(T.sub(pt.x, ext->embed(curve.branch[i])), static_cast<u64>(curve.exponents[i])));
  } else {
    v = pt.y;
  }
  if (v == T.zero()) fail(ErrorCode::SupportMeetsT, "divisor meets a branch point");
  return ext->norm_to_base(v);
}

FqElem power_signed(const Field& F, FqElem v, i64 n) {
  FqElem r = F.pow(v, static_cast<u64>(n < 0 ? -n : n));
  return n < 0 ? F.inv(r) : r;
}

}  // namespace

FqElem f_of_divisor(const CurveSpec& curve, std::span<const DivisorTerm> divisor) {
  const Field& F = *curve.field;
  FqElem r = F.one();
  for (const auto& term : divisor) r = F.mul(r, power_signed(F, value_at(curve, term.point), term.multiplicity));
  return r;
}

namespace {

using BasePoly = std::vector<std::uint64_t>;  // codes over F_q, constant first, monic

// Monic irreducibles of degree k over F_q, each with the least root of its
// Frobenius orbit in F_{q^k}.
const std::map<BasePoly, FqElem>& irreducibles(const FieldPtr& field, int k) {
  static std::mutex mutex;
  static std::map<std::tuple<u64, int, int>, std::map<BasePoly, FqElem>> cache;
  std::lock_guard lock(mutex);
  auto [it, fresh] = cache.try_emplace({field->p(), field->degree(), k});
  if (!fresh) return it->second;
  auto ext = extension_of(field, k);
  const Field& T = ext->top();
  const u64 q = field->size();
  for (u64 c = 0; c < T.size(); ++c) {
    FqElem x{c};
    std::vector<FqElem> orbit{x};
    bool keep = true;
    for (int i = 1; i < k && keep; ++i) {
      FqElem y = T.pow(orbit.back(), q);
      if (y == x || T.rank(y) < T.rank(x)) keep = false;
      orbit.push_back(y);
    }
    if (!keep) continue;
    std::vector<FqElem> poly{T.one()};
    for (auto r : orbit) {
      std::vector<FqElem> next(poly.size() + 1, T.zero());
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = T.add(next[i + 1], poly[i]);
        next[i] = T.sub(next[i], T.mul(poly[i], r));
      }
      poly = std::move(next);
    }
    BasePoly key;
    for (auto v : poly) key.push_back(ext->restrict_to_base(v)->code);
    it->second.emplace(std::move(key), x);
  }
  return it->second;
}

// Exact division by a monic polynomial over F_q; empty optional if it does not divide.
std::optional<std::vector<FqElem>> divide(const Field& F, const std::vector<FqElem>& a, const BasePoly& g) {
  std::vector<FqElem> r = a;
  const size_t n = g.size() - 1;
  if (r.size() <= n) return std::nullopt;
  std::vector<FqElem> quot(r.size() - n, F.zero());
  for (size_t k = r.size(); k-- > n;) {
    FqElem c = r[k];
    quot[k - n] = c;
    for (size_t j = 0; j <= n; ++j) r[k - n + j] = F.sub(r[k - n + j], F.mul(c, {g[j]}));
  }
  for (size_t j = 0; j < n; ++j)
    if (r[j] != F.zero()) return std::nullopt;
  return quot;
}

}  // namespace

std::vector<DivisorTerm> divisor_of_monic(const CurveSpec& curve, std::span<const FqElem> monic) {
  if (!curve.on_p1()) fail(ErrorCode::BaseNotP1, "monic divisors are defined on P^1");
  if (monic.empty() || monic.back() != curve.field->one()) fail(ErrorCode::Validation, "polynomial must be monic");
  const Field& F = *curve.field;
  std::vector<FqElem> rest(monic.begin(), monic.end());
  std::vector<DivisorTerm> out;
  for (int k = 1; rest.size() > 1; ++k) {
    const int left = static_cast<int>(rest.size()) - 1;
    auto take = [&](const BasePoly& g, FqElem root) {
      int mult = 0;
      while (auto quot = divide(F, rest, g)) {
        rest = std::move(*quot);
        ++mult;
      }
      if (mult) out.push_back({PlacePoint{k, root, {}, false}, mult});
    };
    if (left < 2 * k) {
      // what remains is irreducible of degree left
      if (left != k) continue;
      BasePoly key;
      for (auto v : rest) key.push_back(v.code);
      const auto& table = irreducibles(curve.field, k);
      auto it = table.find(key);
      if (it == table.end()) fail(ErrorCode::Validation, "factorisation failed");
      take(key, it->second);
      continue;
    }
    if (k == 1) {
      for (u64 c = 0; c < F.size(); ++c) take(BasePoly{F.neg({c}).code, 1}, {c});
      continue;
    }
    for (const auto& [g, root] : irreducibles(curve.field, k)) take(g, root);
  }
  return out;
}

FqElem f_of_monic(const CurveSpec& curve, std::span<const FqElem> monic) {
  if (!curve.on_p1()) fail(ErrorCode::BaseNotP1, "reciprocity route needs P^1");
  const Field& F = *curve.field;
  const i64 l = static_cast<i64>(monic.size()) - 1;
  i64 total = 0;
  for (int a : curve.exponents) total += a;
  FqElem r = (l * total) % 2 ? F.neg(F.one()) : F.one();
  for (size_t i = 0; i < curve.branch.size(); ++i) {
    FqElem v = F.zero();
    for (size_t k = monic.size(); k-- > 0;) v = F.add(F.mul(v, curve.branch[i]), monic[k]);
    if (v == F.zero()) fail(ErrorCode::SupportMeetsT, "divisor meets a branch point");
    r = F.mul(r, F.pow(v, static_cast<u64>(curve.exponents[i])));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Divisor sums

namespace {

void check_power(const CurveSpec& curve, int j) {
  if (j < 1 || static_cast<u64>(j) >= curve.m) fail(ErrorCode::BadExponent, "character power must lie in [1, m - 1]");
}

// Sum over monic q of degree l prime to the branch points.
CycloInt affine_sum(const CurveSpec& curve, const std::vector<int>& table, int l, int j, const RunConfig& cfg) {
  const u64 m = curve.m;
  if (l == 0) return CycloInt::integer(m, 1);
  const Field& F = *curve.field;
  const u64 q = F.size();
  if (nt::checked_pow(q, static_cast<u64>(l), cfg.max_terms) == 0)
    fail(ErrorCode::DegreeTooLarge, "q^" + std::to_string(l) + " exceeds the enumeration limit");
  const size_t n = curve.branch.size();
  i64 total = 0;
  for (int a : curve.exponents) total += a;
  const u64 sign = (static_cast<i64>(l) * total) % 2 ? static_cast<u64>(table[F.neg(F.one()).code]) : 0;
  // powers[i][k] = x_i^k
  std::vector<std::vector<FqElem>> powers(n, std::vector<FqElem>(l + 1));
  for (size_t i = 0; i < n; ++i) {
    powers[i][0] = F.one();
    for (int k = 1; k <= l; ++k) powers[i][k] = F.mul(powers[i][k - 1], curve.branch[i]);
  }
  const u64 outer = nt::checked_pow(q, static_cast<u64>(l - 1));
  auto parts = parallel_blocks<std::vector<i64>>(outer, cfg.threads, [&](u64 begin, u64 end) {
    std::vector<i64> hist(m, 0);
    std::vector<FqElem> base(n);
    for (u64 idx = begin; idx < end; ++idx) {
      for (size_t i = 0; i < n; ++i) base[i] = powers[i][l];
      u64 rest = idx;
      for (int k = 1; k < l; ++k) {
        FqElem c{rest % q};
        rest /= q;
        if (c == F.zero()) continue;
        for (size_t i = 0; i < n; ++i) base[i] = F.add(base[i], F.mul(c, powers[i][k]));
      }
      for (u64 c0 = 0; c0 < q; ++c0) {
        u64 e = sign;
        bool zero = false;
        for (size_t i = 0; i < n; ++i) {
          int k = table[F.add(base[i], {c0}).code];
          if (k < 0) {
            zero = true;
            break;
          }
          e += static_cast<u64>(curve.exponents[i]) * static_cast<u64>(k);
        }
        if (!zero) ++hist[e * static_cast<u64>(j) % m];
      }
    }
    return hist;
  });
  return CycloInt::from_histogram(m, add_histograms(parts, m));
}

// Truncated prod (1 - eps^k t^e)^{-n}.
void euler_factor(std::vector<CycloInt>& series, u64 m, int e, int k, i64 n) {
  const int L = static_cast<int>(series.size()) - 1;
  std::vector<CycloInt> factor(L + 1, CycloInt(m));
  i64 binom = 1;  // C(n + r - 1, r)
  for (int r = 0; r * e <= L; ++r) {
    if (r > 0) {
      nt::i128 b = static_cast<nt::i128>(binom) * (n + r - 1) / r;
      if (b > INT64_MAX) fail(ErrorCode::Overflow, "binomial coefficient overflow");
      binom = static_cast<i64>(b);
    }
    factor[r * e] = CycloInt::root_of_unity(m, static_cast<i64>(k) * r).scaled(binom);
  }
  std::vector<CycloInt> out(L + 1, CycloInt(m));
  for (int a = 0; a <= L; ++a) {
    if (series[a].is_zero()) continue;
    for (int b = 0; a + b <= L; b += e) out[a + b] += series[a] * factor[b];
  }
  series = std::move(out);
}

}  // namespace

std::vector<CycloInt> divisor_char_sums(const CurveSpec& curve, int max_l, int j, const RunConfig& cfg) {
  check_power(curve, j);
  const u64 m = curve.m;
  std::vector<CycloInt> sums;
  if (curve.on_p1()) {
    Character chi(curve.field, m);
    auto table = exponent_table(chi);
    for (int l = 0; l <= max_l; ++l) sums.push_back(affine_sum(curve, table, l, j, cfg));
    if (!curve.infinity_branched()) {
      // infinity is an unramified rational point with chi(f(infinity)) = 1
      for (int l = 1; l <= max_l; ++l) sums[l] += sums[l - 1];
    }
    return sums;
  }
  Character chi(curve.field, m);
  std::map<std::pair<int, int>, i64> groups;  // (degree, exponent) -> number of closed points
  for (const auto& pt : closed_points(curve, max_l, cfg)) {
    if (pt.type != PlaceType::Affine) continue;
    FqElem v = value_at(curve, PlacePoint{pt.degree, pt.x, pt.y, false});
    ++groups[{pt.degree, chi.exponent(v) * j % static_cast<int>(m)}];
  }
  sums.assign(max_l + 1, CycloInt(m));
  sums[0] = CycloInt::integer(m, 1);
  for (const auto& [key, n] : groups) euler_factor(sums, m, key.first, key.second, n);
  return sums;
}

CycloInt divisor_char_sum(const CurveSpec& curve, int l, int j, const RunConfig& cfg) {
  if (l < 0) fail(ErrorCode::Validation, "negative degree");
  return divisor_char_sums(curve, l, j, cfg)[l];
}

LPoly l_polynomial(const CurveSpec& curve, int j, const RunConfig& cfg) {
  const int D = curve.lpoly_degree();
  auto sums = divisor_char_sums(curve, D, j, cfg);
  LPoly poly(D + 1, CycloInt(curve.m));
  for (int i = 0; i <= D; ++i) poly[D - i] = sums[i];
  return poly;
}

ConstantTermCheck verify_constant_term(const CurveSpec& curve, const RunConfig& cfg) {
  return verify_constant_term(curve, l_polynomial(curve, 1, cfg), cfg);
}

ConstantTermCheck verify_constant_term(const CurveSpec& curve, const LPoly& poly, const RunConfig& cfg) {
  const u64 m = curve.m;
  auto a = curve.jacobi_exponents();
  ConstantTermCheck out;
  out.constant = poly.front();
  out.jacobi = jacobi_sum(curve.field, m, a, cfg);
  u64 qg = nt::checked_pow(curve.field->size(), static_cast<u64>(curve.base_genus()));
  if (qg == 0 || qg > static_cast<u64>(INT64_MAX)) fail(ErrorCode::Overflow, "q^g overflow");
  CycloInt target = out.jacobi.scaled(static_cast<i64>(qg));
  if (curve.d() % 2 == 0) target = -target;
  for (u64 k = 0; k < m; ++k) {
    if (target * CycloInt::root_of_unity(m, static_cast<i64>(k)) == out.constant) {
      out.unit_exponent = static_cast<int>(k);
      return out;
    }
  }
  fail(ErrorCode::NoUnitMatch, "constant term is not a unit multiple of the Jacobi sum");
}

std::vector<std::int64_t> norm_polynomial(std::span<const LPoly> polys) {
  if (polys.empty()) return {1};
  const u64 m = polys.front().front().m();
  LPoly acc{CycloInt::integer(m, 1)};
  for (const auto& p : polys) {
    LPoly next(acc.size() + p.size() - 1, CycloInt(m));
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t k = 0; k < p.size(); ++k) next[i + k] += acc[i] * p[k];
    acc = std::move(next);
  }
  std::vector<std::int64_t> out;
  for (const auto& c : acc) {
    auto v = c.as_integer();
    if (!v) fail(ErrorCode::InconsistentCounts, "product of conjugate L-polynomials is not rational");
    out.push_back(*v);
  }
  return out;
}

}  // namespace jacrank
