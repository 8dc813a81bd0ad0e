#pragma once

// Graded Real gerbes over a point and affine Real gerbe classes on a Real
// torus over a point.

#include <optional>
#include <utility>
#include <vector>

#include "krtorus/torus_class.hpp"

namespace krtorus {

/// Element of the order-4 group of graded Real gerbes over a point, stored as
/// (grading e, Dixmier-Douady class mu), both mod 2.
struct PointGerbeClass {
  int e = 0;
  int mu = 0;

  friend bool operator==(const PointGerbeClass&, const PointGerbeClass&) = default;
};

/// (e1 + e2, mu1 + mu2 + e1 e2).
PointGerbeClass point_gerbe_mul(PointGerbeClass a, PointGerbeClass b);
int point_gerbe_order(PointGerbeClass g);
/// The p in {0,1,2,3} with g = U^p, U = (1, 0).
int point_gerbe_exponent(PointGerbeClass g);
PointGerbeClass point_gerbe_power(int p);
/// (-2p) mod 8 for g = U^p: KR^j(X, G (x) g) = KR^{j + shift}(X, G).
int degree_shift_of_twist(PointGerbeClass g);

/// Restrictions of the gerbe to the two fixed points of a cyclotomic circle.
using FixedPointSignature = std::pair<int, int>;

/// Gerbe class on a Real torus. The grading lives in `point_twist`; the rest
/// is trivially graded. `signatures` holds one entry per cyclotomic summand
/// of the lattice, in the order of the pending slots of canonical_factors.
struct AffineGerbeClass {
  IntVector lambda_part;  // in the dual lattice, sigma^T lambda = -lambda
  PointGerbeClass point_twist;
  std::vector<FixedPointSignature> signatures;

  friend bool operator==(const AffineGerbeClass&, const AffineGerbeClass&) = default;
};

/// The trivial gerbe on x, with (0,0) signatures on every cyclotomic slot.
AffineGerbeClass trivial_gerbe(const RealTorus& x);

/// Checks lambda against the torus and that the lambda class is nonzero
/// exactly when some signature has unequal entries. Throws InvalidGerbe or
/// UnresolvedSignature.
void validate(const RealTorus& x, const AffineGerbeClass& g);

/// Whether lambda is nonzero in ker(1 + sigma^T) / im(1 - sigma^T).
bool lambda_class_nonzero(const RealTorus& x, const IntVector& lambda);

struct AffineGerbeGroup {
  FGAbelianGroup group;          // direct sum over the factors
  std::vector<int> case_tags;    // 1..4, one per canonical factor
  std::vector<FGAbelianGroup> factor_groups;
  FGAbelianGroup whole_torus;    // affine_h2 of the torus as given
};

/// Trivially graded affine gerbe classes, factor by factor.
AffineGerbeGroup classify_affine_gerbes(const RealTorus& x);

/// Case tag of a canonical factor: T1 -> 1, T2 -> 2, T3/T4 -> 3, T5 -> 4.
int gerbe_case(FactorType t);

struct ReducedGerbe {
  std::vector<FactorType> factors;  // sorted
  PointGerbeClass residual_twist;

  friend bool operator==(const ReducedGerbe&, const ReducedGerbe&) = default;
};

/// Resolves pending cyclotomic slots to T3 or T4 and extracts the point twist
/// at the origin. Several unequal signatures normalize to a single T4.
ReducedGerbe reduce_mod_point_gerbes(const RealTorus& x, const AffineGerbeClass& g);

struct TorusWithGerbe {
  RealTorus torus;
  AffineGerbeClass gerbe;
};

/// A model torus and gerbe whose reduction is `factors` with residual `twist`.
TorusWithGerbe realize(const std::vector<FactorType>& factors,
                       PointGerbeClass twist = {});

}  // namespace krtorus
