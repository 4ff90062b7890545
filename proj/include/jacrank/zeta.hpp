#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jacrank/curve.hpp"
#include "jacrank/ff.hpp"
#include "jacrank/parallel.hpp"

namespace jacrank {

enum class PlaceType { Affine, Ramified, Infinite };

/// Frobenius orbit of a point of the base curve, represented by its least
/// member; coordinates live in F_{q^degree}.
struct ClosedPoint {
  int degree = 1;
  FqElem x;
  FqElem y;  // superelliptic bases only
  PlaceType type = PlaceType::Affine;
};

/// Closed points of the base curve of degree <= max_degree, by degree then representative.
std::vector<ClosedPoint> closed_points(const CurveSpec& curve, int max_degree, const RunConfig& cfg = {});

/// Number of rational places of the cover over F_{q^k}.
std::uint64_t count_points(const CurveSpec& curve, int k, const RunConfig& cfg = {});

/// Genus of the cover, by Riemann-Hurwitz.
int genus(const CurveSpec& curve);

struct ZetaData {
  std::vector<std::uint64_t> counts;  // N_1..N_{2 pi}
  std::vector<std::int64_t> L;         // ascending, L(0) = 1
  int genus = 0;
  int prank = 0;
  bool supersingular = false;
  int verified_extra = 0;  // counts beyond pi checked against L
};

/// Kummer model w^M = F used for counting: M = m on P^1, M = m * m0 on a superelliptic base.
struct KummerModel {
  std::uint64_t M = 0;
  std::vector<std::pair<FqElem, int>> factors;  // (root, multiplicity) of F, F = prod (x - r)^e
  std::int64_t degree = 0;                      // deg F
};

KummerModel kummer_model(const CurveSpec& curve);

/// Counts for an arbitrary Kummer model over the given field (M = 1 is the line).
std::uint64_t count_kummer(const FieldPtr& field, const KummerModel& model, int k, const RunConfig& cfg = {});
int kummer_genus(const KummerModel& model);

ZetaData zeta_numerator(const CurveSpec& curve, const RunConfig& cfg = {});
ZetaData zeta_from_kummer(const FieldPtr& field, const KummerModel& model, const RunConfig& cfg = {});

/// L from N_1..N_g via Newton identities and the functional equation.
std::vector<std::int64_t> l_from_counts(std::span<const std::uint64_t> counts, std::uint64_t q, int g);

bool supersingular_test(std::span<const std::int64_t> L, std::uint64_t q);

/// Degree of L mod p.
int prank_from_l(std::span<const std::int64_t> L, std::uint64_t p);

}  // namespace jacrank
