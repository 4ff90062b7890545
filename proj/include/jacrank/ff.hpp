#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace jacrank {

/// Canonical description of F_{p^h}: the modulus is the least monic
/// irreducible of degree h, comparing coefficient vectors constant term first.
struct FieldSpec {
  std::uint64_t p = 0;
  int h = 0;
  std::vector<std::uint64_t> modulus;  // size h + 1, monic, constant term first
  std::uint64_t q = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of F_{p^h}. `code` packs the coordinates on the power basis as
/// base-p digits, constant coordinate least significant.
struct FqElem {
  std::uint64_t code = 0;

  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Fields up to this size carry exp/log tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 23;

  /// Canonical F_{p^h}; instances are cached and immutable.
  static FieldPtr make(std::uint64_t p, int h);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t p() const { return spec_.p; }
  int degree() const { return spec_.h; }
  std::uint64_t size() const { return spec_.q; }
  bool has_tables() const { return !log_.empty(); }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem from_int(std::int64_t v) const;
  FqElem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(FqElem a) const;
  /// Prime-subfield value of `a`, if it lies there.
  std::optional<std::uint64_t> as_prime(FqElem a) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const;
  FqElem pow(FqElem a, std::uint64_t e) const;

  /// Least primitive root under the canonical ordering.
  FqElem generator() const { return generator_; }
  /// Discrete log to base generator(); needs tables. Undefined for zero.
  std::uint64_t log(FqElem a) const { return log_[a.code]; }
  FqElem exp(std::uint64_t e) const { return {exp_[e % (spec_.q - 1)]}; }

  /// Canonical ordering key: lexicographic on coefficients, constant first.
  std::uint64_t rank(FqElem a) const;
  FqElem at_rank(std::uint64_t r) const;

 private:
  Field(std::uint64_t p, int h);
  FqElem mul_slow(FqElem a, FqElem b) const;

  FieldSpec spec_;
  std::vector<std::uint64_t> digit_pow_;  // p^i
  FqElem generator_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Embedding of F_q into F_{q^k}, realised as the canonical field of degree h*k.
class Extension {
 public:
  Extension(FieldPtr base, int k);

  const Field& base() const { return *base_; }
  const Field& top() const { return *top_; }
  const FieldPtr& top_ptr() const { return top_; }
  int degree() const { return k_; }

  FqElem embed(FqElem a) const;
  /// Inverse of embed on the image of F_q.
  std::optional<FqElem> restrict_to_base(FqElem a) const;
  /// N_{F_{q^k}/F_q}(a) = a^{(q^k-1)/(q-1)}.
  FqElem norm_to_base(FqElem a) const;

 private:
  FieldPtr base_;
  FieldPtr top_;
  int k_;
  std::vector<std::uint64_t> image_;
  std::unordered_map<std::uint64_t, std::uint64_t> preimage_;
};

/// Cached Extension(base, k).
std::shared_ptr<const Extension> extension_of(const FieldPtr& base, int k);

/// mu_m inside F_q, listed as zeta^0, ..., zeta^{m-1} with zeta = g^{(q-1)/m}.
struct RootsOfUnity {
  std::uint64_t m = 0;
  FqElem zeta;
  std::vector<FqElem> powers;
  std::unordered_map<std::uint64_t, std::uint32_t> dlog;

  std::optional<std::uint32_t> dlog_of(FqElem u) const {
    auto it = dlog.find(u.code);
    if (it == dlog.end()) return std::nullopt;
    return it->second;
  }
};

RootsOfUnity mth_roots_of_unity(const Field& field, std::uint64_t m);

/// Field norm down to the base of `ext`.
inline FqElem norm_to_base(const Extension& ext, FqElem a) { return ext.norm_to_base(a); }

}  // namespace jacrank
