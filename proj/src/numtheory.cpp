#include "jacrank/numtheory.hpp"

#include "jacrank/errors.hpp"

namespace jacrank {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::DivideByZero: return "DivideByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::RamifiedPrime: return "RamifiedPrime";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::SupportMeetsT: return "SupportMeetsT";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NoUnitMatch: return "NoUnitMatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BaseNotP1: return "BaseNotP1";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::WrongGenus: return "WrongGenus";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InconsistentCounts: return "InconsistentCounts";
    case ErrorCode::Validation: return "Validation";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace jacrank

namespace jacrank::nt {

u64 powmod(u64 base, u64 exp, u64 n) {
  u64 result = 1 % n;
  base %= n;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 totient(u64 n) {
  u64 result = n;
  for (u64 f : prime_factors(n)) result = result / f * (f - 1);
  return result;
}

u64 multiplicative_order(u64 base, u64 n) {
  if (gcd(base % n, n) != 1) fail(ErrorCode::NonUnit, "order of a non-unit");
  u64 order = totient(n);
  for (u64 f : prime_factors(order)) {
    while (order % f == 0 && powmod(base, order / f, n) == 1) order /= f;
  }
  return order;
}

u64 inverse_mod(u64 a, u64 n) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(n), new_r = static_cast<i64>(a % n);
  while (new_r != 0) {
    i64 quotient = r / new_r;
    i64 tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(ErrorCode::NonUnit, "no inverse modulo " + std::to_string(n));
  return reduce(t, n);
}

u64 checked_pow(u64 base, u64 exp, u64 limit) {
  u128 acc = 1;
  for (u64 i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > limit) return 0;
  }
  return static_cast<u64>(acc);
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

}  // namespace jacrank::nt
