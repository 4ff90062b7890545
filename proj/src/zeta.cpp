#include "jacrank/zeta.hpp"

#include <algorithm>
#include <string>

#include "jacrank/errors.hpp"
#include "jacrank/numtheory.hpp"

namespace jacrank {
namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = nt::i128;

// One recount beyond the genus is made when q^{g+1} stays below this.
constexpr u64 kExtraCountLimit = u64{1} << 22;

i64 narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::Overflow, "coefficient exceeds 64 bits");
  return static_cast<i64>(v);
}

i128 ipow(i128 b, int e) {
  i128 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

KummerModel kummer_model(const CurveSpec& curve) {
  KummerModel km;
  if (curve.on_p1()) {
    km.M = curve.m;
    for (size_t i = 0; i < curve.branch.size(); ++i) {
      km.factors.emplace_back(curve.branch[i], curve.exponents[i]);
      km.degree += curve.exponents[i];
    }
  } else {
    km.M = curve.m * curve.base->m0;
    for (auto r : curve.branch) km.factors.emplace_back(r, 1);
    km.degree = static_cast<i64>(curve.branch.size());
  }
  return km;
}

int kummer_genus(const KummerModel& model) {
  const i64 M = static_cast<i64>(model.M);
  i64 total = -2 * M;
  for (const auto& [root, e] : model.factors) total += M - static_cast<i64>(nt::gcd(static_cast<u64>(e), model.M));
  total += M - static_cast<i64>(nt::gcd(static_cast<u64>(model.degree), model.M));
  return static_cast<int>((total + 2) / 2);
}

int genus(const CurveSpec& curve) { return kummer_genus(kummer_model(curve)); }

std::uint64_t count_kummer(const FieldPtr& field, const KummerModel& model, int k, const RunConfig& cfg) {
  const u64 q = field->size();
  const u64 Q = nt::checked_pow(q, static_cast<u64>(k), cfg.max_terms);
  if (Q == 0) fail(ErrorCode::BudgetExceeded, "q^" + std::to_string(k) + " exceeds max_terms");
  if (model.M == 1) return Q + 1;
  auto ext = extension_of(field, k);
  const Field& T = ext->top();
  const u64 M = model.M;
  const u64 g0 = nt::gcd(M, Q - 1);
  for (const auto& [root, e] : model.factors) {
    if (e % static_cast<i64>(M) != 0 && nt::gcd(static_cast<u64>(e), M) != 1)
      fail(ErrorCode::Unsupported, "partially ramified branch point");
  }
  std::vector<std::pair<FqElem, u64>> roots;
  for (const auto& [root, e] : model.factors) roots.emplace_back(ext->embed(root), static_cast<u64>(e));

  // places at infinity
  u64 count = 0;
  if (model.degree % static_cast<i64>(M) != 0) {
    if (nt::gcd(static_cast<u64>(model.degree), M) != 1) fail(ErrorCode::Unsupported, "partially ramified at infinity");
    count = 1;
  } else {
    count = g0;  // leading coefficient 1
  }

  auto parts = parallel_blocks<u64>(Q, cfg.threads, [&](u64 begin, u64 end) {
    u64 n = 0;
    for (u64 c = begin; c < end; ++c) {
      FqElem x{c};
      bool ramified = false;
      u64 log_u = 0;
      FqElem u = T.one();
      for (const auto& [r, e] : roots) {
        FqElem diff = T.sub(x, r);
        if (diff == T.zero()) {
          if (e % M != 0) ramified = true;
          continue;  // unit part excludes this factor
        }
        if (T.has_tables())
          log_u += T.log(diff) * e;
        else
          u = T.mul(u, T.pow(diff, e));
      }
      if (ramified) {
        ++n;
        continue;
      }
      bool power = T.has_tables() ? (log_u % (Q - 1)) % g0 == 0 : T.pow(u, (Q - 1) / g0) == T.one();
      if (power) n += g0;
    }
    return n;
  });
  for (u64 v : parts) count += v;
  return count;
}

std::uint64_t count_points(const CurveSpec& curve, int k, const RunConfig& cfg) {
  return count_kummer(curve.field, kummer_model(curve), k, cfg);
}

std::vector<std::int64_t> l_from_counts(std::span<const std::uint64_t> counts, std::uint64_t q, int g) {
  if (counts.size() < static_cast<size_t>(g)) fail(ErrorCode::Validation, "need N_1..N_g");
  std::vector<i128> s(g + 1, 0), c(2 * g + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= g; ++k) s[k] = ipow(q, k) + 1 - static_cast<i128>(counts[k - 1]);
  for (int i = 1; i <= g; ++i) {
    i128 acc = 0;
    for (int k = 1; k <= i; ++k) acc += s[k] * c[i - k];
    if (acc % i != 0) fail(ErrorCode::InconsistentCounts, "Newton identity not integral");
    c[i] = -acc / i;
  }
  for (int i = 0; i < g; ++i) c[2 * g - i] = ipow(q, g - i) * c[i];
  std::vector<std::int64_t> out;
  for (auto v : c) out.push_back(narrow(v));
  return out;
}

namespace {

// N_k implied by L.
std::vector<i128> counts_from_l(std::span<const i64> L, u64 q, int kmax) {
  const int n = static_cast<int>(L.size()) - 1;
  std::vector<i128> s(kmax + 1, 0), out;
  for (int k = 1; k <= kmax; ++k) {
    i128 acc = k <= n ? static_cast<i128>(k) * L[k] : 0;
    for (int i = 1; i < k && i <= n; ++i) acc += static_cast<i128>(L[i]) * s[k - i];
    s[k] = -acc;
    out.push_back(ipow(q, k) + 1 - s[k]);
  }
  return out;
}

using IPoly = std::vector<i128>;  // ascending

bool divide_exact(IPoly& a, const IPoly& monic) {
  IPoly r = a;
  const size_t n = monic.size() - 1;
  if (r.size() <= n) return false;
  IPoly quot(r.size() - n, 0);
  for (size_t k = r.size(); k-- > n;) {
    i128 c = r[k];
    quot[k - n] = c;
    for (size_t j = 0; j <= n; ++j) r[k - n + j] -= c * monic[j];
  }
  for (size_t j = 0; j < n; ++j)
    if (r[j] != 0) return false;
  a = std::move(quot);
  return true;
}

IPoly cyclotomic(int j, std::vector<IPoly>& cache) {
  if (static_cast<int>(cache.size()) <= j) cache.resize(j + 1);
  if (!cache[j].empty()) return cache[j];
  IPoly p(j + 1, 0);
  p[0] = -1;
  p[j] = 1;
  for (int d = 1; d < j; ++d) {
    if (j % d == 0) divide_exact(p, cyclotomic(d, cache));
  }
  return cache[j] = p;
}

}  // namespace

bool supersingular_test(std::span<const std::int64_t> L, std::uint64_t q) {
  const int n = static_cast<int>(L.size()) - 1;
  if (n == 0) return true;
  // L(t) L(-t) = L2(t^2), roots alpha^2; then scale t -> t/q.
  IPoly prod(2 * n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) prod[i + k] += static_cast<i128>(L[i]) * L[k] * ((k % 2) ? -1 : 1);
  IPoly M(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    i128 qi = ipow(q, i);
    if (prod[2 * i] % qi != 0) return false;
    M[i] = prod[2 * i] / qi;
  }
  // M must be a product of cyclotomic polynomials.
  std::vector<IPoly> cache;
  for (int j = 1; M.size() > 1; ++j) {
    if (static_cast<int>(nt::totient(static_cast<u64>(j))) > n) {
      if (j > 6 * n * n + 6) break;
      continue;
    }
    IPoly phi = cyclotomic(j, cache);
    while (M.size() > 1 && divide_exact(M, phi)) {
    }
  }
  return M.size() == 1 && (M[0] == 1 || M[0] == -1);
}

int prank_from_l(std::span<const std::int64_t> L, std::uint64_t p) {
  for (int i = static_cast<int>(L.size()) - 1; i >= 0; --i)
    if (nt::reduce(L[i], p) != 0) return i;
  return 0;
}

ZetaData zeta_from_kummer(const FieldPtr& field, const KummerModel& model, const RunConfig& cfg) {
  ZetaData z;
  z.genus = kummer_genus(model);
  const u64 q = field->size();
  const int g = z.genus;
  for (int k = 1; k <= g; ++k) z.counts.push_back(count_kummer(field, model, k, cfg));
  z.L = l_from_counts(z.counts, q, g);
  auto implied = counts_from_l(z.L, q, 2 * g + 1);
  for (int k = 1; k <= 2 * g + 1; ++k) {
    i128 dev = implied[k - 1] - ipow(q, k) - 1;
    if (dev * dev > static_cast<i128>(4) * g * g * ipow(q, k)) fail(ErrorCode::InconsistentCounts, "Weil bound violated");
  }
  for (int k = g + 1; k <= g + 1; ++k) {
    u64 Q = nt::checked_pow(q, static_cast<u64>(k), std::min(kExtraCountLimit, cfg.max_terms));
    if (Q == 0) break;
    u64 n = count_kummer(field, model, k, cfg);
    if (static_cast<i128>(n) != implied[k - 1]) fail(ErrorCode::InconsistentCounts, "recount disagrees with L");
    z.counts.push_back(n);
    ++z.verified_extra;
  }
  z.prank = prank_from_l(z.L, field->p());
  z.supersingular = supersingular_test(z.L, q);
  return z;
}

ZetaData zeta_numerator(const CurveSpec& curve, const RunConfig& cfg) {
  return zeta_from_kummer(curve.field, kummer_model(curve), cfg);
}

namespace {

// Points (x, y) over F_{q^k} whose Frobenius orbit has exact size k and which
// are least in their orbit under (rank x, rank y).
bool orbit_representative(const Field& T, u64 q, int k, FqElem x, FqElem y) {
  FqElem fx = x, fy = y;
  for (int i = 1; i < k; ++i) {
    fx = T.pow(fx, q);
    fy = T.pow(fy, q);
    if (fx == x && fy == y) return false;
    auto a = std::pair{T.rank(fx), T.rank(fy)};
    auto b = std::pair{T.rank(x), T.rank(y)};
    if (a < b) return false;
  }
  return true;
}

}  // namespace

std::vector<ClosedPoint> closed_points(const CurveSpec& curve, int max_degree, const RunConfig& cfg) {
  std::vector<ClosedPoint> out;
  const u64 q = curve.field->size();
  for (int k = 1; k <= max_degree; ++k) {
    u64 Q = nt::checked_pow(q, static_cast<u64>(k), cfg.max_terms);
    if (Q == 0) fail(ErrorCode::BudgetExceeded, "closed points of degree " + std::to_string(k) + " exceed max_terms");
    auto ext = extension_of(curve.field, k);
    const Field& T = ext->top();
    if (k == 1) out.push_back({1, {}, {}, PlaceType::Infinite});
    if (curve.on_p1()) {
      std::vector<FqElem> branch;
      for (auto b : curve.branch) branch.push_back(ext->embed(b));
      for (u64 c = 0; c < Q; ++c) {
        FqElem x{c};
        if (!orbit_representative(T, q, k, x, T.zero())) continue;
        bool ram = std::find(branch.begin(), branch.end(), x) != branch.end();
        out.push_back({k, x, {}, ram ? PlaceType::Ramified : PlaceType::Affine});
      }
      continue;
    }
    if (!T.has_tables()) fail(ErrorCode::BudgetExceeded, "closed points on a superelliptic base need a tabulated field");
    const u64 m0 = curve.base->m0;
    const u64 g0 = nt::gcd(m0, Q - 1);
    const u64 step = (Q - 1) / g0;
    std::vector<FqElem> f0;
    for (auto c : curve.base->f0) f0.push_back(ext->embed(c));
    for (u64 c = 0; c < Q; ++c) {
      FqElem x{c};
      FqElem v = T.zero();
      for (size_t i = f0.size(); i-- > 0;) v = T.add(T.mul(v, x), f0[i]);
      std::vector<FqElem> ys;
      if (v == T.zero()) {
        ys.push_back(T.zero());
      } else {
        u64 L = T.log(v);
        if (L % g0 != 0) continue;
        // m0 e = L mod (Q - 1)
        u64 mod = step;
        u64 e0 = nt::mulmod((L / g0) % mod, mod == 1 ? 0 : nt::inverse_mod((m0 / g0) % mod, mod), mod);
        for (u64 t = 0; t < g0; ++t) ys.push_back(T.exp(e0 + t * step));
      }
      for (auto y : ys) {
        if (!orbit_representative(T, q, k, x, y)) continue;
        out.push_back({k, x, y, y == T.zero() ? PlaceType::Ramified : PlaceType::Affine});
      }
    }
  }
  return out;
}

}  // namespace jacrank
