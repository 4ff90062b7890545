#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jacrank/charsum.hpp"
#include "jacrank/curve.hpp"
#include "jacrank/cyclo.hpp"
#include "jacrank/parallel.hpp"

namespace jacrank {

/// (t, index s of sigma_s = sigma_{-t}^{-1}, exponent d_t).
struct ThetaTerm {
  int t = 0;
  int sigma = 0;
  int exponent = 0;
};

struct ExponentData {
  std::uint64_t m = 0;
  std::uint64_t p = 0;
  std::vector<int> a;
  int h = 0;
  int b = 0;
  std::vector<int> c_h;  // <p> in (Z/m)^x, ascending
  std::vector<int> e_h;  // least representative of each coset, ascending
  std::vector<int> d;    // d[u] for u in [1, m-1]; d[0] = 0
  std::vector<ThetaTerm> theta;
  std::vector<int> O;  // O[t] = sum_{u in c_h} d[t u]
};

ExponentData exponent_data(std::uint64_t m, std::span<const int> a, std::uint64_t p);

/// true certifies that the Jacobian is not supersingular.
bool not_supersingular_test(const ExponentData& e);
/// true certifies positive p-rank; only meaningful over P^1.
bool not_prank0_test(const ExponentData& e);

/// Index of the prime of Z[eps_m] above p that is the kernel of eps -> zeta_q.
std::size_t character_prime(const Field& field, const PrimeFactorization& fact);

/// Stickelberger prediction of v(J_(a)) at every prime of `fact`, for the
/// Jacobi sum over `field`.
std::vector<int> predicted_valuations(const ExponentData& e, const Field& field, const PrimeFactorization& fact);

struct Equation {
  int l = 0;
  int j = 0;
  CycloInt sum;
  bool satisfied = false;  // sum == 0 mod the character prime
};

struct EquationSystem {
  bool inert = false;
  std::size_t prime_index = 0;
  std::vector<Equation> equations;
  bool all_satisfied = true;
  std::optional<int> base_prank;  // inert case on a superelliptic base
  bool prank0 = false;
};

/// Equations whose simultaneous vanishing is equivalent to p-rank 0.
/// `strict` evaluates every j in [1, m-1] in the split case.
EquationSystem prank0_equations(const CurveSpec& curve, const RunConfig& cfg = {}, bool strict = false);

/// x == 0 mod the prime with index i.
bool vanishes_mod(const CycloInt& x, const PrimeFactorization& fact, std::size_t i);

struct Deuring {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> coeffs;  // ascending in lambda
  std::vector<FqElem> roots;          // in the canonical F_{p^2}
};

Deuring deuring(std::uint64_t p);

}  // namespace jacrank
