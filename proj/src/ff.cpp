#include "jacrank/ff.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "jacrank/errors.hpp"
#include "jacrank/numtheory.hpp"

namespace jacrank {
namespace {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  size_t n = mod.size() - 1;  // mod is monic
  for (size_t i = r.size(); i-- > n;) {
    u64 c = r[i];
    if (c == 0) continue;
    for (size_t j = 0; j <= n; ++j) r[i - n + j] = (r[i - n + j] + (p - c) * mod[j]) % p;
  }
  r.resize(std::min(r.size(), n));
  trim(r);
  return r;
}

Poly poly_rem(Poly a, const Poly& b, u64 p) {
  trim(a);
  u64 lead_inv = nt::inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = a.back() * lead_inv % p;
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + (p - c) * b[j]) % p;
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f
Poly frobenius_power(const Poly& f, u64 p, int k) {
  Poly x = {0, 1};
  Poly acc = poly_rem(x, f, p);
  for (int i = 0; i < k; ++i) {
    Poly base = acc, r = {1};
    u64 e = p;
    while (e) {
      if (e & 1) r = poly_mulmod(r, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1;
    }
    acc = r;
  }
  return acc;
}

Poly sub_x(Poly a, u64 p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

bool is_irreducible(const Poly& f, u64 p) {
  int n = static_cast<int>(f.size()) - 1;
  if (sub_x(frobenius_power(f, p, n), p).size() != 0) return false;
  for (u64 r : nt::prime_factors(static_cast<u64>(n))) {
    Poly g = poly_gcd(f, sub_x(frobenius_power(f, p, n / static_cast<int>(r)), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly least_irreducible(u64 p, int h) {
  if (h == 1) return {0, 1};
  u64 count = nt::checked_pow(p, static_cast<u64>(h));
  for (u64 r = 0; r < count; ++r) {
    Poly f(h + 1, 0);
    f[h] = 1;
    u64 v = r;
    for (int i = h - 1; i >= 0; --i) {  // c_0 is the most significant position
      f[i] = v % p;
      v /= p;
    }
    if (f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorCode::NonPrime, "no irreducible polynomial found");
}

}  // namespace

FieldPtr Field::make(u64 p, int h) {
  if (h < 1) fail(ErrorCode::DegreeZero, "extension degree must be >= 1");
  if (p >= (u64{1} << 31) || !nt::is_prime(p)) fail(ErrorCode::NonPrime, std::to_string(p) + " is not a prime below 2^31");
  if (nt::checked_pow(p, static_cast<u64>(h), (u64{1} << 63) - 1) == 0)
    fail(ErrorCode::BudgetExceeded, "p^h exceeds 2^63");
  static std::mutex mutex;
  static std::map<std::pair<u64, int>, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, h}];
  if (!slot) slot = FieldPtr(new Field(p, h));
  return slot;
}

Field::Field(u64 p, int h) {
  spec_.p = p;
  spec_.h = h;
  spec_.q = nt::checked_pow(p, static_cast<u64>(h));
  spec_.modulus = least_irreducible(p, h);
  digit_pow_.resize(h + 1);
  digit_pow_[0] = 1;
  for (int i = 1; i <= h; ++i) digit_pow_[i] = digit_pow_[i - 1] * p;

  u64 order = spec_.q - 1;
  auto factors = nt::prime_factors(order);
  for (u64 r = 0; r < spec_.q; ++r) {
    FqElem g = at_rank(r);
    if (g.code == 0) continue;
    bool primitive = true;
    for (u64 f : factors) {
      if (pow(g, order / f) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }
  if (spec_.q <= kTableLimit) {
    exp_.resize(order);
    log_.assign(spec_.q, 0);
    FqElem cur = one();
    for (u64 i = 0; i < order; ++i) {
      exp_[i] = static_cast<std::uint32_t>(cur.code);
      log_[cur.code] = static_cast<std::uint32_t>(i);
      cur = mul_slow(cur, generator_);
    }
  }
}

FqElem Field::from_int(std::int64_t v) const { return {nt::reduce(v, spec_.p)}; }

FqElem Field::from_coeffs(std::span<const u64> c) const {
  if (c.size() > static_cast<size_t>(spec_.h)) fail(ErrorCode::FieldMismatch, "too many coefficients for field");
  u64 code = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= spec_.p) fail(ErrorCode::FieldMismatch, "coefficient out of range");
    code += c[i] * digit_pow_[i];
  }
  return {code};
}

std::vector<u64> Field::coeffs(FqElem a) const {
  std::vector<u64> out(spec_.h);
  for (int i = 0; i < spec_.h; ++i) {
    out[i] = a.code % spec_.p;
    a.code /= spec_.p;
  }
  return out;
}

std::optional<u64> Field::as_prime(FqElem a) const {
  if (a.code < spec_.p) return a.code;
  return std::nullopt;
}

FqElem Field::add(FqElem a, FqElem b) const {
  const u64 p = spec_.p;
  if (spec_.h == 1) {
    u64 s = a.code + b.code;
    return {s >= p ? s - p : s};
  }
  if (p == 2) return {a.code ^ b.code};
  u64 out = 0;
  for (int i = 0; i < spec_.h; ++i) {
    u64 s = a.code % p + b.code % p;
    if (s >= p) s -= p;
    out += s * digit_pow_[i];
    a.code /= p;
    b.code /= p;
  }
  return {out};
}

FqElem Field::neg(FqElem a) const {
  const u64 p = spec_.p;
  if (spec_.h == 1) return {a.code == 0 ? 0 : p - a.code};
  if (p == 2) return a;
  u64 out = 0;
  for (int i = 0; i < spec_.h; ++i) {
    u64 d = a.code % p;
    out += (d == 0 ? 0 : p - d) * digit_pow_[i];
    a.code /= p;
  }
  return {out};
}

FqElem Field::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Field::mul_slow(FqElem a, FqElem b) const {
  const u64 p = spec_.p;
  const int h = spec_.h;
  if (h == 1) return {a.code * b.code % p};
  u64 da[64], db[64], r[128] = {};
  for (int i = 0; i < h; ++i) {
    da[i] = a.code % p;
    db[i] = b.code % p;
    a.code /= p;
    b.code /= p;
  }
  for (int i = 0; i < h; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < h; ++j) r[i + j] = (r[i + j] + da[i] * db[j]) % p;
  }
  const auto& mod = spec_.modulus;
  for (int i = 2 * h - 2; i >= h; --i) {
    u64 c = r[i];
    if (c == 0) continue;
    for (int j = 0; j < h; ++j) r[i - h + j] = (r[i - h + j] + (p - c) * mod[j]) % p;
    r[i] = 0;
  }
  u64 out = 0;
  for (int i = 0; i < h; ++i) out += r[i] * digit_pow_[i];
  return {out};
}

FqElem Field::mul(FqElem a, FqElem b) const {
  if (a.code == 0 || b.code == 0) return zero();
  if (log_.empty()) return mul_slow(a, b);
  u64 s = u64{log_[a.code]} + log_[b.code];
  u64 order = spec_.q - 1;
  if (s >= order) s -= order;
  return {exp_[s]};
}

FqElem Field::inv(FqElem a) const {
  if (a.code == 0) fail(ErrorCode::DivideByZero, "inverse of zero");
  if (!log_.empty()) {
    u64 l = log_[a.code];
    return {exp_[l == 0 ? 0 : spec_.q - 1 - l]};
  }
  return pow(a, spec_.q - 2);
}

FqElem Field::div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

FqElem Field::pow(FqElem a, u64 e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  if (!log_.empty()) {
    u64 order = spec_.q - 1;
    return {exp_[nt::mulmod(log_[a.code], e % order, order)]};
  }
  FqElem result = one();
  while (e) {
    if (e & 1) result = mul_slow(result, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return result;
}

u64 Field::rank(FqElem a) const {
  if (spec_.h == 1) return a.code;
  u64 r = 0;
  for (int i = 0; i < spec_.h; ++i) {
    r = r * spec_.p + a.code % spec_.p;
    a.code /= spec_.p;
  }
  return r;
}

FqElem Field::at_rank(u64 r) const {
  if (spec_.h == 1) return {r};
  u64 code = 0;
  for (int i = spec_.h - 1; i >= 0; --i) {
    code += (r % spec_.p) * digit_pow_[i];
    r /= spec_.p;
  }
  return {code};
}

Extension::Extension(FieldPtr base, int k) : base_(std::move(base)), k_(k) {
  if (k < 1) fail(ErrorCode::DegreeZero, "extension degree must be >= 1");
  top_ = k == 1 ? base_ : Field::make(base_->p(), base_->degree() * k);
  const u64 q = base_->size();
  image_.resize(q);
  if (k == 1) {
    for (u64 c = 0; c < q; ++c) image_[c] = c;
  } else if (base_->degree() == 1) {
    for (u64 c = 0; c < q; ++c) image_[c] = c;  // prime subfield constants
  } else {
    // Roots of the base modulus lie in the subfield F_q^x = <gamma>.
    const auto& mod = base_->spec().modulus;
    FqElem gamma = top_->pow(top_->generator(), (top_->size() - 1) / (q - 1));
    auto eval = [&](FqElem x) {
      FqElem acc = top_->zero();
      for (size_t i = mod.size(); i-- > 0;) acc = top_->add(top_->mul(acc, x), top_->from_int(static_cast<std::int64_t>(mod[i])));
      return acc;
    };
    std::optional<FqElem> best;
    FqElem cur = top_->one();
    for (u64 j = 0; j + 1 < q; ++j) {
      if (eval(cur) == top_->zero() && (!best || top_->rank(cur) < top_->rank(*best))) best = cur;
      cur = top_->mul(cur, gamma);
    }
    if (!best) fail(ErrorCode::FieldMismatch, "base modulus has no root in extension");
    for (u64 c = 0; c < q; ++c) {
      auto digits = base_->coeffs({c});
      FqElem acc = top_->zero();
      for (size_t i = digits.size(); i-- > 0;)
        acc = top_->add(top_->mul(acc, *best), top_->from_int(static_cast<std::int64_t>(digits[i])));
      image_[c] = acc.code;
    }
  }
  preimage_.reserve(q);
  for (u64 c = 0; c < q; ++c) preimage_.emplace(image_[c], c);
}

FqElem Extension::embed(FqElem a) const { return {image_[a.code]}; }

std::optional<FqElem> Extension::restrict_to_base(FqElem a) const {
  auto it = preimage_.find(a.code);
  if (it == preimage_.end()) return std::nullopt;
  return FqElem{it->second};
}

FqElem Extension::norm_to_base(FqElem a) const {
  if (k_ == 1) return a;
  u64 e = (top_->size() - 1) / (base_->size() - 1);
  auto r = restrict_to_base(top_->pow(a, e));
  if (!r) fail(ErrorCode::FieldMismatch, "norm left the base field");
  return *r;
}

std::shared_ptr<const Extension> extension_of(const FieldPtr& base, int k) {
  static std::mutex mutex;
  static std::map<std::tuple<u64, int, int>, std::shared_ptr<const Extension>> cache;
  std::tuple key{base->p(), base->degree(), k};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto ext = std::make_shared<const Extension>(base, k);
  std::lock_guard lock(mutex);
  return cache.emplace(key, ext).first->second;
}

RootsOfUnity mth_roots_of_unity(const Field& field, u64 m) {
  const u64 q = field.size();
  if (m == 0 || (q - 1) % m != 0)
    fail(ErrorCode::OrderMismatch, std::to_string(m) + " does not divide q - 1 = " + std::to_string(q - 1));
  RootsOfUnity out;
  out.m = m;
  out.zeta = field.pow(field.generator(), (q - 1) / m);
  FqElem cur = field.one();
  for (u64 i = 0; i < m; ++i) {
    out.powers.push_back(cur);
    out.dlog.emplace(cur.code, static_cast<std::uint32_t>(i));
    cur = field.mul(cur, out.zeta);
  }
  return out;
}

}  // namespace jacrank
