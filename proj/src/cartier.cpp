#include "jacrank/cartier.hpp"

#include <string>

#include "jacrank/errors.hpp"
#include "jacrank/numtheory.hpp"

namespace jacrank {
namespace {

using u64 = std::uint64_t;
using Poly = std::vector<FqElem>;

void trim(const Field& F, Poly& a) {
  while (!a.empty() && a.back() == F.zero()) a.pop_back();
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == F.zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(F, r);
  return r;
}

Poly rem(const Field& F, Poly a, const Poly& b) {
  trim(F, a);
  FqElem inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    FqElem c = F.mul(a.back(), inv);
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
    trim(F, a);
  }
  return a;
}

bool squarefree(const Field& F, const Poly& f) {
  Poly df;
  for (size_t i = 1; i < f.size(); ++i) df.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i % F.p())), f[i]));
  trim(F, df);
  if (df.empty()) return false;
  Poly a = f, b = df;
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

FqElem coeff(const CartierMatrix& A, std::int64_t k) {
  if (k < 0 || static_cast<size_t>(k) >= A.power.size()) return A.field->zero();
  return A.power[k];
}

using Matrix = std::vector<std::vector<FqElem>>;

int rank(const Field& F, Matrix a) {
  const size_t n = a.size();
  int r = 0;
  for (size_t col = 0; col < n && static_cast<size_t>(r) < n; ++col) {
    size_t pivot = r;
    while (pivot < n && a[pivot][col] == F.zero()) ++pivot;
    if (pivot == n) continue;
    std::swap(a[pivot], a[r]);
    FqElem inv = F.inv(a[r][col]);
    for (size_t i = 0; i < n; ++i) {
      if (i == static_cast<size_t>(r) || a[i][col] == F.zero()) continue;
      FqElem c = F.mul(a[i][col], inv);
      for (size_t j = col; j < n; ++j) a[i][j] = F.sub(a[i][j], F.mul(c, a[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

CartierMatrix cartier_matrix(const FieldPtr& field, std::span<const FqElem> f) {
  const Field& F = *field;
  const u64 p = F.p();
  if (p == 2) fail(ErrorCode::EvenCharacteristic, "Cartier-Manin matrix needs odd p");
  Poly poly(f.begin(), f.end());
  trim(F, poly);
  if (poly.size() < 4) fail(ErrorCode::WrongShape, "f must have degree at least 3");
  if (!squarefree(F, poly)) fail(ErrorCode::NotSquarefree, "f is not squarefree");
  CartierMatrix A;
  A.field = field;
  A.g = static_cast<int>((poly.size() - 2) / 2);
  Poly acc{F.one()}, base = poly;
  for (u64 e = (p - 1) / 2; e; e >>= 1) {
    if (e & 1) acc = mul(F, acc, base);
    if (e > 1) base = mul(F, base, base);
  }
  A.power = std::move(acc);
  const auto P = static_cast<std::int64_t>(p);
  A.entries.assign(A.g, std::vector<FqElem>(A.g));
  for (int i = 1; i <= A.g; ++i)
    for (int j = 1; j <= A.g; ++j) A.entries[i - 1][j - 1] = coeff(A, i * P - j);
  return A;
}

bool genus2_prank0_test(const CartierMatrix& A) {
  if (A.g != 2) fail(ErrorCode::WrongGenus, "genus-2 test on genus " + std::to_string(A.g));
  const Field& F = *A.field;
  const auto& a = A.entries;
  FqElem trace = F.add(a[0][0], a[1][1]);
  FqElem det = F.sub(F.mul(a[0][0], a[1][1]), F.mul(a[0][1], a[1][0]));
  return trace == F.zero() && det == F.zero();
}

int semilinear_prank(const CartierMatrix& A) {
  const Field& F = *A.field;
  const size_t g = static_cast<size_t>(A.g);
  Matrix prod = A.entries, frob = A.entries;
  for (int k = 1; k < A.g; ++k) {
    for (auto& row : frob)
      for (auto& v : row) v = F.pow(v, F.p());
    Matrix next(g, std::vector<FqElem>(g, F.zero()));
    for (size_t i = 0; i < g; ++i)
      for (size_t l = 0; l < g; ++l)
        for (size_t j = 0; j < g; ++j) next[i][j] = F.add(next[i][j], F.mul(prod[i][l], frob[l][j]));
    prod = std::move(next);
  }
  return rank(F, prod);
}

std::vector<FqElem> branch_polynomial(const CurveSpec& curve) {
  const Field& F = *curve.field;
  Poly f{F.one()};
  for (size_t i = 0; i < curve.branch.size(); ++i)
    for (int k = 0; k < curve.exponents[i]; ++k) f = mul(F, f, Poly{F.neg(curve.branch[i]), F.one()});
  return f;
}

EquationMatch verify_eq_match(const CurveSpec& curve) {
  const Field& F = *curve.field;
  if (curve.m != 2 || !curve.on_p1() || F.degree() != 1 || curve.branch.size() != 5)
    fail(ErrorCode::WrongShape, "needs y^2 = f(x) with f of degree 5 over a prime field");
  const u64 p = F.p();
  auto f = branch_polynomial(curve);
  auto A = cartier_matrix(curve.field, f);
  const u64 e = (p - 1) / 2;
  auto eval = [&](const std::vector<FqElem>& poly, FqElem x) {
    FqElem acc = F.zero();
    for (size_t i = poly.size(); i-- > 0;) acc = F.add(F.mul(acc, x), poly[i]);
    return acc;
  };
  EquationMatch out;
  FqElem s1 = F.zero();
  for (u64 a = 0; a < p; ++a) s1 = F.add(s1, F.pow(eval(f, {a}), e));
  FqElem s2 = F.zero();
  for (u64 b = 0; b < p; ++b) {
    for (u64 a = 0; a < p; ++a) {
      std::vector<FqElem> q{{a}, {b}, F.one()};
      FqElem prod = F.one();
      for (auto x : curve.branch) prod = F.mul(prod, eval(q, x));
      s2 = F.add(s2, F.pow(prod, e));
    }
  }
  const auto P = static_cast<std::int64_t>(p);
  FqElem c1 = coeff(A, P - 1), c2 = coeff(A, 2 * P - 2), c3 = coeff(A, 2 * P - 1), c4 = coeff(A, P - 2);
  FqElem x1 = F.neg(F.add(c1, c2));
  FqElem x2 = F.sub(F.mul(c2, c1), F.mul(c3, c4));
  out.eq1 = s1.code;
  out.eq2 = s2.code;
  out.expected1 = x1.code;
  out.expected2 = x2.code;
  out.ok = s1 == x1 && s2 == x2;
  return out;
}

}  // namespace jacrank
