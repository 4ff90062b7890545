#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jacrank/ff.hpp"

namespace jacrank {

/// Base curve y0^m0 = f0(x) with f0 monic, squarefree and split over F_q,
/// gcd(deg f0, m0) = 1 (one place at infinity).
struct SuperellipticBase {
  std::uint64_t m0 = 0;
  std::vector<FqElem> f0;  // constant first, monic
};

/// Cyclic cover y^m = f of a base curve over F_q.
///
/// On P^1, f = prod (x - x_i)^{a_i} over the affine branch points; infinity
/// is a branch point exactly when sum a_i is not divisible by m. On a
/// superelliptic base, f = y0: branch points are the zeros of f0 (exponent 1)
/// and the place at infinity (exponent -deg f0).
struct CurveSpec {
  FieldPtr field;
  std::uint64_t m = 0;
  std::vector<int> exponents;  // one per affine branch point, in (0, m)
  std::vector<FqElem> branch;
  std::optional<SuperellipticBase> base;  // empty means P^1

  static CurveSpec projective_line(FieldPtr field, std::uint64_t m, std::vector<int> exponents,
                                   std::vector<FqElem> branch);
  static CurveSpec superelliptic(FieldPtr field, std::uint64_t m, std::uint64_t m0, std::vector<FqElem> f0);

  bool on_p1() const { return !base.has_value(); }
  /// Exponent of f at infinity, reduced into [0, m).
  int infinity_exponent() const;
  bool infinity_branched() const { return infinity_exponent() != 0; }
  /// |T|, the number of branch places.
  int branch_places() const { return static_cast<int>(branch.size()) + (infinity_branched() ? 1 : 0); }
  /// d = |T| - 1.
  int d() const { return branch_places() - 1; }
  int base_genus() const;
  /// Degree 2g + d - 1 of each P^{chi^j}.
  int lpoly_degree() const { return 2 * base_genus() + d() - 1; }
  /// Exponents at the branch places other than the designated x_0 (infinity
  /// when branched, else the last affine point).
  std::vector<int> jacobi_exponents() const;
};

}  // namespace jacrank
