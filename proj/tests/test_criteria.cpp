#include <algorithm>

#include "doctest.h"
#include "jacrank/criteria.hpp"
#include "jacrank/errors.hpp"
#include "jacrank/zeta.hpp"

using namespace jacrank;

namespace {

FqElem el(std::uint64_t c) { return {c}; }

// Exact d_u from fractions: sum of (u a_i mod m) / m, floored.
int d_ref(int m, const std::vector<int>& a, int u) {
  int num = 0;
  for (int v : a) num += (u * v) % m;
  return num / m;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("exponent data examples") {
  std::vector<int> a{1, 1, 2};
  auto e7 = exponent_data(3, a, 7);
  CHECK(e7.d[1] == 1);
  CHECK(e7.d[2] == 1);
  CHECK(e7.h == 1);
  CHECK(e7.c_h == std::vector<int>{1});
  CHECK(e7.e_h == std::vector<int>{1, 2});
  CHECK(e7.O[1] == 1);
  CHECK(e7.O[2] == 1);
  auto e5 = exponent_data(3, a, 5);
  CHECK(e5.h == 2);
  CHECK(e5.c_h == std::vector<int>{1, 2});
  CHECK(e5.e_h == std::vector<int>{1});
  CHECK(e5.O[1] == 2);
  CHECK_THROWS_AS(exponent_data(3, std::vector<int>{1, 3}, 7), Error);
}

TEST_CASE("d_u matches exact fractions and the genus") {
  for (int m : {3, 5, 7}) {
    for (const auto& a : std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 3}, {1, 1, 1, 1}, {2, 2, 1}}) {
      std::vector<int> aa;
      for (int v : a) aa.push_back(v % m ? v % m : 1);
      auto e = exponent_data(m, aa, 29);
      int total = 0;
      for (int u = 1; u < m; ++u) {
        CHECK(e.d[u] == d_ref(m, aa, u));
        total += e.d[u];
      }
      // a cover of P^1 with exponents aa at 0..n-1 and infinity as x_0
      auto F = Field::make(29, 1);
      if ((29 - 1) % m) continue;
      std::vector<FqElem> branch;
      for (size_t i = 0; i < aa.size(); ++i) branch.push_back(el(i));
      auto C = CurveSpec::projective_line(F, m, aa, branch);
      int s = 0;
      for (int v : aa) s += v;
      if (s % m) CHECK(total == genus(C));
    }
  }
}

TEST_CASE("orbit-sum certificates on examples") {
  auto e = exponent_data(5, std::vector<int>{1, 1, 1}, 11);
  CHECK(e.d == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(not_supersingular_test(e));
  CHECK(not_prank0_test(e));
  auto f = exponent_data(3, std::vector<int>{1, 1, 2}, 7);
  CHECK(!not_supersingular_test(f));
  CHECK(!not_prank0_test(f));
  auto g = exponent_data(2, std::vector<int>{1, 1, 1, 1, 1}, 7);
  CHECK(!not_supersingular_test(g));
  CHECK(!not_prank0_test(g));
}

TEST_CASE("Stickelberger valuations") {
  for (auto [m, p, h] : {std::tuple{3, 7, 1}, {3, 5, 2}, {5, 11, 1}, {5, 2, 4}, {5, 19, 2}, {7, 29, 1}, {7, 2, 3}, {3, 2, 2}, {3, 7, 2}}) {
    auto F = Field::make(p, h);
    const auto& fact = factorization(m, p);
    for (const auto& a : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {1, 1, 1}, {1, 1, 2}, {2, 3, 4}, {1, 1, 1, 1}}) {
      std::vector<int> aa;
      int s = 0;
      for (int v : a) {
        aa.push_back(v % m ? v % m : 1);
        s += aa.back();
      }
      if (aa.size() > 3 && F->size() > 64) continue;
      auto e = exponent_data(m, aa, p);
      auto J = jacobi_sum(F, m, aa);
      auto got = valuations(J, p);
      auto want = predicted_valuations(e, *F, fact);
      if (s % m == 0)
        for (auto& v : want) v -= F->degree();  // J is q^{-1} times a product of Gauss sums
      CHECK(got == want);
    }
  }
}

TEST_CASE("conjugate complementarity") {
  auto F = Field::make(29, 1);
  std::vector<int> a{1, 2, 3};
  auto J = jacobi_sum(F, 7, a);
  auto v = valuations(J, 29);
  auto conj = valuations(galois(J, 6), 29);
  // v_P(J) + v_P(conj J) = v_P(q^{d-1})
  for (size_t i = 0; i < v.size(); ++i) CHECK(v[i] + conj[i] == 2);
}

TEST_CASE("vanishing mod the character prime agrees with reduction eps -> zeta") {
  for (auto [m, p, h] : {std::tuple{3, 7, 1}, {5, 11, 1}, {3, 5, 2}, {5, 19, 2}}) {
    auto F = Field::make(p, h);
    const auto& fact = factorization(m, p);
    auto i0 = character_prime(*F, fact);
    auto mu = mth_roots_of_unity(*F, m);
    for (std::int64_t s = 0; s < 60; ++s) {
      std::vector<std::int64_t> c(m - 1);
      for (size_t k = 0; k < c.size(); ++k) c[k] = (s * 7 + static_cast<std::int64_t>(k) * 3) % p - (s % 3 == 0 ? 0 : p / 2);
      CycloInt x(m, c);
      FqElem v = F->zero();
      for (size_t k = 0; k < c.size(); ++k) v = F->add(v, F->mul(F->from_int(c[k]), mu.powers[k]));
      CHECK(vanishes_mod(x, fact, i0) == (v == F->zero()));
    }
  }
}

TEST_CASE("Deuring polynomial") {
  auto d3 = deuring(3);
  CHECK(d3.coeffs == std::vector<std::uint64_t>{1, 1});
  auto d5 = deuring(5);
  CHECK(d5.coeffs == std::vector<std::uint64_t>{1, 4, 1});
  CHECK(d5.roots.size() == 2);
  for (auto r : d5.roots) CHECK(!Field::make(5, 2)->as_prime(r).has_value());
  CHECK_THROWS_AS(deuring(2), Error);
}

TEST_CASE("equation systems against the oracle") {
  // split: y^3 = x (x-1) (x-alpha)^2 over F_7 never has p-rank 0
  auto F7 = Field::make(7, 1);
  for (std::uint64_t alpha = 2; alpha < 7; ++alpha) {
    auto C = CurveSpec::projective_line(F7, 3, {1, 1, 2}, {el(0), el(1), el(alpha)});
    auto sys = prank0_equations(C);
    CHECK(!sys.inert);
    CHECK(sys.equations.size() == 2);
    CHECK(!sys.prank0);
    CHECK(zeta_numerator(C).prank >= 1);
    CHECK(prank0_equations(C, {}, true).equations.size() == 2);
  }
  // inert: y^3 = x (x-1) (x-alpha)^2 over F_25
  auto F25 = Field::make(5, 2);
  for (std::uint64_t c = 2; c < 25; ++c) {
    auto C = CurveSpec::projective_line(F25, 3, {1, 1, 2}, {el(0), el(1), el(c)});
    auto sys = prank0_equations(C);
    CHECK(sys.inert);
    CHECK(sys.equations.size() == 1);
    CHECK(sys.prank0 == (zeta_numerator(C).prank == 0));
  }
  // hypothesis failure
  auto F11 = Field::make(11, 1);
  auto C = CurveSpec::projective_line(F11, 5, {1, 1, 1}, {el(0), el(1), el(2)});
  try {
    prank0_equations(C);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisViolated);
  }
}

TEST_CASE("split systems match the oracle on genus 0 instances") {
  for (auto [m, p] : {std::pair{3, 7}, {3, 13}, {3, 19}, {5, 11}, {5, 31}, {7, 29}}) {
    auto F = Field::make(p, 1);
    for (const auto& a : std::vector<std::vector<int>>{{1, 1, 2, 1}, {1, 2, 1, 2}, {1, 1, 1, 1}, {2, 2, 2, 1}}) {
      std::vector<int> aa;
      for (int v : a) aa.push_back(v % m ? v % m : 1);
      for (std::uint64_t alpha = 2; alpha + 1 < static_cast<std::uint64_t>(p) && alpha < 6; ++alpha) {
        auto C = CurveSpec::projective_line(F, m, aa, {el(0), el(1), el(alpha), el(alpha + 1)});
        auto e = exponent_data(m, C.jacobi_exponents(), p);
        bool hyp = std::all_of(e.e_h.begin(), e.e_h.end(), [&](int t) { return e.O[t] != 0; });
        if (!hyp || genus(C) > 3) continue;
        auto sys = prank0_equations(C);
        CHECK(sys.prank0 == (zeta_numerator(C).prank == 0));
        CHECK(prank0_equations(C, {}, true).prank0 == sys.prank0);
      }
    }
  }
}

TEST_CASE("e_h representative choice does not matter") {
  // replacing each representative by another coset member gives the same verdict
  auto F = Field::make(19, 1);
  auto C = CurveSpec::projective_line(F, 3, {1, 1, 2, 2}, {el(0), el(1), el(5), el(7)});
  auto e = exponent_data(3, C.jacobi_exponents(), 19);
  const auto& fact = factorization(3, 19);
  auto i0 = character_prime(*F, fact);
  bool all = true;
  for (int t : e.e_h) {
    int other = static_cast<int>(t * 19 % 3);  // c_h = {1}, so the coset is {t}
    auto sums = divisor_char_sums(C, C.lpoly_degree() - 1, other);
    for (int l = 1; l < C.lpoly_degree(); ++l) all = all && vanishes_mod(sums[l], fact, i0);
  }
  CHECK(all == prank0_equations(C).prank0);
}
