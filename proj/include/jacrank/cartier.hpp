#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jacrank/curve.hpp"
#include "jacrank/ff.hpp"

namespace jacrank {

/// Cartier-Manin matrix of y^2 = f(x): entry (i, j) = c_{ip-j}, the
/// coefficient of x^{ip-j} in f^{(p-1)/2}, for 1 <= i, j <= g.
struct CartierMatrix {
  FieldPtr field;
  int g = 0;
  std::vector<FqElem> power;                  // f^{(p-1)/2}, ascending
  std::vector<std::vector<FqElem>> entries;   // g x g, row i-1, column j-1
};

CartierMatrix cartier_matrix(const FieldPtr& field, std::span<const FqElem> f);

/// Trace and c_{p-1} c_{2p-2} - c_{p-2} c_{2p-1} both vanish.
bool genus2_prank0_test(const CartierMatrix& A);

/// Rank of A A^(p) ... A^(p^{g-1}).
int semilinear_prank(const CartierMatrix& A);

struct EquationMatch {
  std::uint64_t eq1 = 0;       // sum_a f(a)^{(p-1)/2}
  std::uint64_t eq2 = 0;       // sum over monic quadratics q of (prod q(x_i))^{(p-1)/2}
  std::uint64_t expected1 = 0; // -c_{p-1} - c_{2p-2}
  std::uint64_t expected2 = 0; // -c_{2p-1} c_{p-2} + c_{2p-2} c_{p-1}
  bool ok = false;
};

/// Genus-2 hyperelliptic y^2 = prod (x - x_i) over F_p with five affine branch points.
EquationMatch verify_eq_match(const CurveSpec& curve);

/// Monic-free helper: f = prod (x - r) over the branch points of a hyperelliptic curve.
std::vector<FqElem> branch_polynomial(const CurveSpec& curve);

}  // namespace jacrank
