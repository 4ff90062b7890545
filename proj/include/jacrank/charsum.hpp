#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jacrank/curve.hpp"
#include "jacrank/cyclo.hpp"
#include "jacrank/ff.hpp"
#include "jacrank/parallel.hpp"

namespace jacrank {

/// chi(z) as an exponent k of eps^k, or the zero marker.
struct CharValue {
  int exponent = -1;

  bool is_zero() const { return exponent < 0; }
  friend bool operator==(const CharValue&, const CharValue&) = default;
};

/// The order-m character z -> z^{(q-1)/m} of F_q, read through the canonical mu_m.
class Character {
 public:
  Character(FieldPtr field, std::uint64_t m);

  const Field& field() const { return *field_; }
  std::uint64_t m() const { return m_; }
  /// Exponent in [0, m), or -1 for z = 0.
  int exponent(FqElem z) const;
  CharValue operator()(FqElem z) const { return {exponent(z)}; }

 private:
  FieldPtr field_;
  std::uint64_t m_;
  RootsOfUnity mu_;
};

CharValue chi_p(const FieldPtr& field, std::uint64_t m, FqElem z);

/// J_(a) = (-1)^{d+1} sum_{z_1+...+z_d=-1} chi^{a_1}(z_1)...chi^{a_d}(z_d).
/// Uses the direct sum when q^{d-1} is small and an exact convolution
/// recurrence otherwise; both are exposed for cross-checking.
CycloInt jacobi_sum(const FieldPtr& field, std::uint64_t m, std::span<const int> a, const RunConfig& cfg = {});
CycloInt jacobi_sum_direct(const FieldPtr& field, std::uint64_t m, std::span<const int> a, const RunConfig& cfg = {});
CycloInt jacobi_sum_recurrence(const FieldPtr& field, std::uint64_t m, std::span<const int> a);

/// A geometric point of the base curve over F_{q^degree}; y only on
/// superelliptic bases.
struct PlacePoint {
  int degree = 1;
  FqElem x;
  FqElem y;
  bool at_infinity = false;
};

struct DivisorTerm {
  PlacePoint point;
  int multiplicity = 1;
};

/// f(D) = prod N(f(y_i))^{n_i}; throws SupportMeetsT if D touches a branch place.
FqElem f_of_divisor(const CurveSpec& curve, std::span<const DivisorTerm> divisor);

/// Zero divisor of a monic polynomial on P^1 as closed points with multiplicities.
std::vector<DivisorTerm> divisor_of_monic(const CurveSpec& curve, std::span<const FqElem> monic);

/// f(div_0 q) on P^1 by reciprocity: (-1)^{l(a_1+...+a_n)} prod q(x_i)^{a_i}.
FqElem f_of_monic(const CurveSpec& curve, std::span<const FqElem> monic);

/// Default guard on the number of enumerated divisors.
inline constexpr std::uint64_t kDefaultDegreeLimit = 1'000'000'000;

/// sum over effective D of degree l avoiding T of chi(f(D))^j.
CycloInt divisor_char_sum(const CurveSpec& curve, int l, int j, const RunConfig& cfg = {});

/// All sums S_0..S_L at once (shares the enumeration on superelliptic bases).
std::vector<CycloInt> divisor_char_sums(const CurveSpec& curve, int max_l, int j, const RunConfig& cfg = {});

/// Polynomial in t with Z[eps_m] coefficients, ascending powers.
using LPoly = std::vector<CycloInt>;

/// P^{chi^j}(t) = sum_i S_i t^{D-i}, D = 2g + d - 1.
LPoly l_polynomial(const CurveSpec& curve, int j, const RunConfig& cfg = {});

struct ConstantTermCheck {
  std::optional<int> unit_exponent;
  CycloInt constant;
  CycloInt jacobi;
};

/// Finds k with P(0) = (-1)^{d+1} eps^k q^g J_(a); throws NoUnitMatch.
ConstantTermCheck verify_constant_term(const CurveSpec& curve, const RunConfig& cfg = {});
ConstantTermCheck verify_constant_term(const CurveSpec& curve, const LPoly& poly, const RunConfig& cfg = {});

/// prod_{j=1}^{m-1} P^{chi^j}(t) with integer coefficients, ascending.
std::vector<std::int64_t> norm_polynomial(std::span<const LPoly> polys);

}  // namespace jacrank
