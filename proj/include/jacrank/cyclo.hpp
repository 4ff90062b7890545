#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jacrank {

/// Element of Z[eps_m], m prime, on the basis 1, eps, ..., eps^{m-2}.
class CycloInt {
 public:
  CycloInt() = default;
  explicit CycloInt(std::uint64_t m);  // zero
  CycloInt(std::uint64_t m, std::vector<std::int64_t> coeffs);

  static CycloInt integer(std::uint64_t m, std::int64_t v);
  /// eps^k; k taken mod m.
  static CycloInt root_of_unity(std::uint64_t m, std::int64_t k);
  /// sum_k counts[k] * eps^k for a length-m histogram.
  static CycloInt from_histogram(std::uint64_t m, std::span<const std::int64_t> counts);

  std::uint64_t m() const { return m_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  /// The rational integer this represents, if it is one.
  std::optional<std::int64_t> as_integer() const;

  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  CycloInt operator-() const;
  CycloInt scaled(std::int64_t k) const;
  friend bool operator==(const CycloInt&, const CycloInt&) = default;

  std::string to_string() const;

 private:
  void require_same(const CycloInt& o) const;

  std::uint64_t m_ = 0;
  std::vector<std::int64_t> c_;
};

/// sigma_t : eps -> eps^t.
CycloInt galois(const CycloInt& a, std::int64_t t);

/// a * conj(a) when that is a rational integer.
std::optional<std::int64_t> abs_square(const CycloInt& a);

/// Factorisation of p in Z[eps_m]: the b irreducible factors of Phi_m mod p,
/// Hensel-lifted to Z/p^N.
struct PrimeFactorization {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  int h = 0;  // order of p mod m
  int b = 0;  // (m - 1) / h
  int precision = 0;
  std::uint64_t pN = 0;
  std::vector<std::vector<std::uint64_t>> factors;        // lifted, monic, constant first
  std::vector<std::vector<std::uint64_t>> factors_mod_p;  // sorted lexicographically
  /// Exponents r with zeta^r a root of factor i, for zeta the canonical
  /// m-th root of unity of F_{p^h}.
  std::vector<std::vector<std::uint32_t>> root_exponents;
};

PrimeFactorization factor_p(std::uint64_t m, std::uint64_t p, int precision);

/// v_{p_i}(a); throws PrecisionExhausted when a vanishes to the working precision.
int valuation(const CycloInt& a, const PrimeFactorization& fact, std::size_t i);

/// Valuations at every prime above p, escalating precision from 8 as needed.
std::vector<int> valuations(const CycloInt& a, std::uint64_t p);

/// Cached factorisation at the default precision.
const PrimeFactorization& factorization(std::uint64_t m, std::uint64_t p);

}  // namespace jacrank
