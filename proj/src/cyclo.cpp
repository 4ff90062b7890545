#include "jacrank/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "jacrank/errors.hpp"
#include "jacrank/ff.hpp"
#include "jacrank/numtheory.hpp"

namespace jacrank {
namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Length-m vector modulo x^m - 1 back onto the basis 1..eps^{m-2}.
std::vector<i64> normalize(std::vector<i64> full, u64 m) {
  i64 top = full[m - 1];
  std::vector<i64> out(m - 1);
  for (u64 i = 0; i + 1 < m; ++i) out[i] = nt::checked_add(full[i], -top);
  return out;
}

}  // namespace

CycloInt::CycloInt(u64 m) : m_(m), c_(m - 1, 0) {
  if (m < 2 || !nt::is_prime(m)) fail(ErrorCode::NonPrime, "cyclotomic order must be prime");
}

CycloInt::CycloInt(u64 m, std::vector<i64> coeffs) : CycloInt(m) {
  if (coeffs.size() != m - 1) fail(ErrorCode::ModulusMismatch, "expected m - 1 coordinates");
  c_ = std::move(coeffs);
}

CycloInt CycloInt::integer(u64 m, i64 v) {
  CycloInt r(m);
  r.c_[0] = v;
  return r;
}

CycloInt CycloInt::root_of_unity(u64 m, i64 k) {
  std::vector<i64> full(m, 0);
  full[nt::reduce(k, m)] = 1;
  return CycloInt(m, normalize(std::move(full), m));
}

CycloInt CycloInt::from_histogram(u64 m, std::span<const i64> counts) {
  if (counts.size() != m) fail(ErrorCode::ModulusMismatch, "histogram length must equal m");
  return CycloInt(m, normalize(std::vector<i64>(counts.begin(), counts.end()), m));
}

bool CycloInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](i64 v) { return v == 0; });
}

std::optional<i64> CycloInt::as_integer() const {
  for (size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  return c_.empty() ? 0 : c_[0];
}

void CycloInt::require_same(const CycloInt& o) const {
  if (m_ != o.m_) fail(ErrorCode::ModulusMismatch, "cyclotomic orders differ");
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  require_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = nt::checked_add(c_[i], o.c_[i]);
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
  require_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = nt::checked_add(c_[i], -o.c_[i]);
  return *this;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  a.require_same(b);
  const u64 m = a.m_;
  std::vector<i64> full(m, 0);
  for (u64 i = 0; i + 1 < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (u64 j = 0; j + 1 < m; ++j) {
      u64 k = (i + j) % m;
      full[k] = nt::checked_add(full[k], nt::checked_mul(a.c_[i], b.c_[j]));
    }
  }
  return CycloInt(m, normalize(std::move(full), m));
}

CycloInt CycloInt::operator-() const { return scaled(-1); }

CycloInt CycloInt::scaled(i64 k) const {
  CycloInt r = *this;
  for (auto& v : r.c_) v = nt::checked_mul(v, k);
  return r;
}

std::string CycloInt::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << "]_" << m_;
  return os.str();
}

CycloInt galois(const CycloInt& a, i64 t) {
  const u64 m = a.m();
  u64 s = nt::reduce(t, m);
  if (s == 0) fail(ErrorCode::NonUnit, "galois index must be prime to m");
  std::vector<i64> full(m, 0);
  for (u64 i = 0; i + 1 < m; ++i) full[i * s % m] = a.coeffs()[i];
  return CycloInt(m, normalize(std::move(full), m));
}

std::optional<i64> abs_square(const CycloInt& a) {
  return (a * galois(a, static_cast<i64>(a.m()) - 1)).as_integer();
}

// ---------------------------------------------------------------------------
// Factorisation of p and valuations.

namespace {

using Poly = std::vector<u64>;  // constant first, coefficients mod some modulus

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, u64 mod) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + nt::mulmod(a[i], b[j], mod)) % mod;
  trim(r);
  return r;
}

Poly psub(Poly a, const Poly& b, u64 mod) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + mod - b[i] % mod) % mod;
  trim(a);
  return a;
}

Poly padd(Poly a, const Poly& b, u64 mod) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % mod;
  trim(a);
  return a;
}

// Division over a prime field F_p.
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b, u64 p) {
  trim(a);
  Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 inv = nt::inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = nt::mulmod(a.back(), inv, p);
    size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - nt::mulmod(c, b[j], p)) % p;
    trim(a);
  }
  return {quot, a};
}

// s, t with s*f + t*g = 1 over F_p.
std::pair<Poly, Poly> ext_gcd(const Poly& f, const Poly& g, u64 p) {
  Poly r0 = f, r1 = g, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [quot, rem] = pdivmod(r0, r1, p);
    Poly s2 = psub(s0, pmul(quot, s1, p), p);
    Poly t2 = psub(t0, pmul(quot, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) fail(ErrorCode::RamifiedPrime, "factors of Phi_m are not coprime mod p");
  u64 inv = nt::inverse_mod(r0[0], p);
  for (auto& v : s0) v = nt::mulmod(v, inv, p);
  for (auto& v : t0) v = nt::mulmod(v, inv, p);
  return {s0, t0};
}

Poly reduce_mod(const Poly& a, u64 mod) {
  Poly r = a;
  for (auto& v : r) v %= mod;
  trim(r);
  return r;
}

// Remainder of a modulo a monic polynomial, coefficients mod `mod`.
Poly rem_monic(Poly a, const Poly& g, u64 mod) {
  trim(a);
  while (a.size() >= g.size()) {
    u64 c = a.back();
    size_t shift = a.size() - g.size();
    for (size_t j = 0; j < g.size(); ++j) a[shift + j] = (a[shift + j] + mod - nt::mulmod(c, g[j], mod)) % mod;
    trim(a);
  }
  return a;
}

Poly hensel_lift(const Poly& phi, const Poly& g0, u64 p, int precision) {
  auto [h0, r] = pdivmod(phi, g0, p);
  if (!r.empty()) fail(ErrorCode::RamifiedPrime, "factor does not divide Phi_m mod p");
  auto [s, t] = ext_gcd(g0, h0, p);
  Poly g = g0, h = h0;
  u64 pk = p;
  for (int k = 1; k < precision; ++k) {
    u64 next = pk * p;
    Poly err = psub(reduce_mod(phi, next), pmul(g, h, next), next);
    for (auto& v : err) v /= pk;  // divisible by p^k
    err = reduce_mod(err, p);
    Poly gp = reduce_mod(g, p), hp = reduce_mod(h, p);
    Poly dg = pdivmod(pmul(t, err, p), gp, p).second;
    auto [dh, rest] = pdivmod(psub(err, pmul(dg, hp, p), p), gp, p);
    if (!rest.empty()) fail(ErrorCode::RamifiedPrime, "Hensel step failed");
    for (auto& v : dg) v = nt::mulmod(v, pk, next);
    for (auto& v : dh) v = nt::mulmod(v, pk, next);
    g = padd(reduce_mod(g, next), dg, next);
    h = padd(reduce_mod(h, next), dh, next);
    pk = next;
  }
  return g;
}

int max_precision(u64 p) {
  int n = 0;
  u64 acc = 1;
  while (acc <= (u64{1} << 62) / p) {
    acc *= p;
    ++n;
  }
  return n;
}

}  // namespace

PrimeFactorization factor_p(u64 m, u64 p, int precision) {
  if (!nt::is_prime(m)) fail(ErrorCode::NonPrime, "m must be prime");
  if (!nt::is_prime(p)) fail(ErrorCode::NonPrime, "p must be prime");
  if (p == m) fail(ErrorCode::RamifiedPrime, "p = m is ramified in Z[eps_m]");
  if (precision < 1 || precision > max_precision(p)) fail(ErrorCode::PrecisionExhausted, "precision out of range");
  PrimeFactorization out;
  out.p = p;
  out.m = m;
  out.h = static_cast<int>(nt::multiplicative_order(p % m, m));
  out.b = static_cast<int>((m - 1) / static_cast<u64>(out.h));
  out.precision = precision;
  out.pN = nt::checked_pow(p, static_cast<u64>(precision));

  auto field = Field::make(p, out.h);
  auto mu = mth_roots_of_unity(*field, m);
  struct Entry {
    Poly mod_p;
    std::vector<std::uint32_t> roots;
  };
  std::vector<Entry> entries;
  std::vector<bool> seen(m, false);
  for (u64 r = 1; r < m; ++r) {
    if (seen[r]) continue;
    std::vector<FqElem> poly = {field->one()};
    Entry e;
    for (u64 s = r; !seen[s]; s = s * p % m) {
      seen[s] = true;
      e.roots.push_back(static_cast<std::uint32_t>(s));
      std::vector<FqElem> next(poly.size() + 1, field->zero());
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = field->add(next[i + 1], poly[i]);
        next[i] = field->sub(next[i], field->mul(poly[i], mu.powers[s]));
      }
      poly = std::move(next);
    }
    for (auto c : poly) {
      auto v = field->as_prime(c);
      if (!v) fail(ErrorCode::RamifiedPrime, "factor of Phi_m not defined over F_p");
      e.mod_p.push_back(*v);
    }
    std::sort(e.roots.begin(), e.roots.end());
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.mod_p < b.mod_p; });

  Poly phi(m, 1);
  for (const auto& e : entries) {
    out.factors_mod_p.push_back(e.mod_p);
    out.root_exponents.push_back(e.roots);
    out.factors.push_back(out.b == 1 ? reduce_mod(phi, out.pN) : hensel_lift(phi, e.mod_p, p, precision));
  }
  return out;
}

int valuation(const CycloInt& a, const PrimeFactorization& fact, std::size_t i) {
  if (a.m() != fact.m) fail(ErrorCode::ModulusMismatch, "cyclotomic order differs from factorisation");
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "valuation of zero");
  if (i >= fact.factors.size()) fail(ErrorCode::Validation, "prime index out of range");
  Poly poly;
  for (auto v : a.coeffs()) poly.push_back(nt::reduce(v % static_cast<i64>(fact.pN), fact.pN));
  Poly r = rem_monic(poly, fact.factors[i], fact.pN);
  if (r.empty()) fail(ErrorCode::PrecisionExhausted, "element vanishes to precision " + std::to_string(fact.precision));
  int best = fact.precision;
  for (u64 v : r) {
    if (v == 0) continue;
    int k = 0;
    while (v % fact.p == 0) {
      v /= fact.p;
      ++k;
    }
    best = std::min(best, k);
  }
  return best;
}

namespace {

const PrimeFactorization& cached_factorization(u64 m, u64 p, int precision) {
  static std::mutex mutex;
  static std::map<std::tuple<u64, u64, int>, std::unique_ptr<PrimeFactorization>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, p, precision}];
  if (!slot) slot = std::make_unique<PrimeFactorization>(factor_p(m, p, precision));
  return *slot;
}

}  // namespace

const PrimeFactorization& factorization(u64 m, u64 p) {
  return cached_factorization(m, p, std::min(8, max_precision(p)));
}

std::vector<int> valuations(const CycloInt& a, u64 p) {
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "valuation of zero");
  int cap = max_precision(p);
  int precision = std::min(8, cap);
  while (true) {
    const auto& fact = cached_factorization(a.m(), p, precision);
    try {
      std::vector<int> out;
      for (size_t i = 0; i < fact.factors.size(); ++i) out.push_back(valuation(a, fact, i));
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted || precision == cap) throw;
      precision = std::min(cap, precision * 2);
    }
  }
}

}  // namespace jacrank
