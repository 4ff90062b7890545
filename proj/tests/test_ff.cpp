#include <set>

#include "doctest.h"
#include "jacrank/errors.hpp"
#include "jacrank/ff.hpp"
#include "oracle.hpp"

using namespace jacrank;

namespace {

oracle::Poly to_poly(const Field& F, FqElem a) {
  auto c = F.coeffs(a);
  return oracle::Poly(c.begin(), c.end());
}

}  // namespace

TEST_CASE("prime field basics") {
  auto F = Field::make(7, 1);
  CHECK(F->spec().modulus == std::vector<std::uint64_t>{0, 1});
  CHECK(F->size() == 7);
  CHECK(F->pow(F->from_int(3), 2) == F->from_int(2));
  CHECK(F->mul(F->from_int(4), F->from_int(2)) == F->one());
  CHECK(F->from_int(-1) == F->from_int(6));
  CHECK(Field::make(7, 1) == F);
}

TEST_CASE("canonical modulus is the least irreducible") {
  for (auto [p, h] : {std::pair{2, 2}, {5, 2}, {3, 3}, {2, 4}, {7, 2}}) {
    oracle::Poly least;
    for (const auto& low : oracle::elements(p, h)) {
      oracle::Poly f = low;
      f.push_back(1);
      if (oracle::irreducible(f, p)) {
        least = f;
        break;
      }
    }
    auto F = Field::make(p, h);
    oracle::Poly got(F->spec().modulus.begin(), F->spec().modulus.end());
    CHECK(got == least);
  }
  CHECK(Field::make(2, 2)->spec().modulus == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("field errors") {
  CHECK_THROWS_AS(Field::make(9, 1), Error);
  CHECK_THROWS_AS(Field::make(7, 0), Error);
  try {
    Field::make(5, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeZero);
  }
  auto F = Field::make(5, 1);
  try {
    F->inv(F->zero());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivideByZero);
  }
}

TEST_CASE("multiplication matches long division") {
  for (auto [p, h] : {std::pair{5, 2}, {2, 3}, {3, 2}, {7, 3}}) {
    auto F = Field::make(p, h);
    oracle::Poly mod(F->spec().modulus.begin(), F->spec().modulus.end());
    for (std::uint64_t x = 0; x < F->size(); x += 3) {
      for (std::uint64_t y = 0; y < F->size(); y += 5) {
        FqElem a{x}, b{y};
        CHECK(to_poly(*F, F->mul(a, b)) == oracle::mulmod(to_poly(*F, a), to_poly(*F, b), mod, p));
      }
    }
  }
}

TEST_CASE("Fermat and inverse, exhaustive small fields") {
  for (auto [p, h] : {std::pair{7, 3}, {5, 2}, {2, 4}, {3, 5}}) {
    auto F = Field::make(p, h);
    for (std::uint64_t c = 1; c < F->size(); ++c) {
      FqElem a{c};
      CHECK(F->pow(a, F->size() - 1) == F->one());
      CHECK(F->mul(a, F->inv(a)) == F->one());
    }
  }
}

TEST_CASE("generator is the least primitive element") {
  for (auto [p, h] : {std::pair{7, 1}, {5, 2}, {2, 4}, {3, 3}}) {
    auto F = Field::make(p, h);
    oracle::Poly mod(F->spec().modulus.begin(), F->spec().modulus.end());
    auto elems = oracle::elements(p, h);
    std::uint64_t n = F->size() - 1;
    oracle::Poly expected;
    for (const auto& e : elems) {
      bool zero = true;
      for (auto v : e) zero = zero && v == 0;
      if (zero) continue;
      std::set<oracle::Poly> seen;
      oracle::Poly cur = e;
      for (std::uint64_t k = 0; k < n; ++k) {
        seen.insert(cur);
        cur = oracle::mulmod(cur, e, mod, p);
      }
      if (seen.size() == n) {
        expected = e;
        break;
      }
    }
    CHECK(to_poly(*F, F->generator()) == expected);
  }
  CHECK(Field::make(7, 1)->generator() == FqElem{3});
}

TEST_CASE("mu_m table") {
  auto F = Field::make(7, 1);
  auto mu = mth_roots_of_unity(*F, 3);
  CHECK(mu.zeta == FqElem{2});
  CHECK(mu.powers == std::vector<FqElem>{{1}, {2}, {4}});
  CHECK(mu.dlog_of({4}) == 2u);
  CHECK(mu.dlog_of({3}) == std::nullopt);
  auto mu2 = mth_roots_of_unity(*F, 2);
  CHECK(mu2.powers == std::vector<FqElem>{{1}, {6}});
  auto F4 = Field::make(2, 2);
  auto mu3 = mth_roots_of_unity(*F4, 3);
  std::set<std::uint64_t> all;
  for (auto z : mu3.powers) all.insert(z.code);
  CHECK(all == std::set<std::uint64_t>{1, 2, 3});
  for (std::uint32_t k = 0; k < 3; ++k) CHECK(F4->pow(mu3.zeta, k) == mu3.powers[k]);
  CHECK_THROWS_AS(mth_roots_of_unity(*F, 5), Error);
}

TEST_CASE("extension embedding and norm") {
  for (auto [p, h, k] : {std::tuple{5, 1, 2}, {5, 2, 2}, {2, 2, 3}, {3, 1, 3}, {2, 3, 2}}) {
    auto base = Field::make(p, h);
    Extension E(base, k);
    const Field& B = E.base();
    const Field& T = E.top();
    // embed is a ring homomorphism
    for (std::uint64_t x = 0; x < B.size(); ++x) {
      for (std::uint64_t y = 0; y < B.size(); ++y) {
        CHECK(E.embed(B.mul({x}, {y})) == T.mul(E.embed({x}), E.embed({y})));
        CHECK(E.embed(B.add({x}, {y})) == T.add(E.embed({x}), E.embed({y})));
      }
    }
    // norm is a^(1+q+...+q^{k-1}), multiplicative and onto
    std::set<std::uint64_t> image;
    for (std::uint64_t c = 0; c < T.size(); ++c) {
      FqElem a{c};
      FqElem direct = T.one();
      FqElem frob = a;
      for (int i = 0; i < k; ++i) {
        direct = T.mul(direct, frob);
        frob = T.pow(frob, B.size());
      }
      FqElem n = E.norm_to_base(a);
      CHECK(E.embed(n) == direct);
      if (c) image.insert(n.code);
    }
    CHECK(image.size() == B.size() - 1);
  }
}

TEST_CASE("F25 norm of a root of the modulus") {
  auto base = Field::make(5, 1);
  Extension E(base, 2);
  const Field& T = E.top();
  FqElem x{5};  // the class of x
  FqElem expect = T.mul(x, T.pow(x, 5));
  auto n = E.norm_to_base(x);
  CHECK(E.embed(n) == expect);
  CHECK(T.pow(expect, 5) == expect);
  // constant term of the monic modulus equals the norm of its root
  CHECK(n.code == T.spec().modulus[0]);
}
