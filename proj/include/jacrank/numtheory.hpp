#pragma once

#include <cstdint>
#include <vector>

namespace jacrank::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }
u64 powmod(u64 base, u64 exp, u64 n);
u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Distinct prime factors by trial division.
std::vector<u64> prime_factors(u64 n);

u64 totient(u64 n);

/// Least h >= 1 with base^h == 1 (mod n); requires gcd(base, n) == 1.
u64 multiplicative_order(u64 base, u64 n);

u64 inverse_mod(u64 a, u64 n);

/// Representative of v in [0, n).
inline u64 reduce(i64 v, u64 n) {
  i64 r = v % static_cast<i64>(n);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(n) : r);
}

/// base^exp, or 0 if the result would exceed `limit`.
u64 checked_pow(u64 base, u64 exp, u64 limit = ~u64{0});

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

}  // namespace jacrank::nt
