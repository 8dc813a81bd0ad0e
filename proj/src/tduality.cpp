#include "krtorus/tduality.hpp"

#include <algorithm>

#include "krtorus/errors.hpp"

namespace krtorus {

FactorType dual_factor(FactorType t) {
  switch (t) {
    case FactorType::T1: return FactorType::T3;
    case FactorType::T2: return FactorType::T4;
    case FactorType::T3: return FactorType::T1;
    case FactorType::T4: return FactorType::T2;
    case FactorType::T5: return FactorType::T5;
  }
  return t;
}

std::vector<FactorType> dualize_classified(const std::vector<FactorType>& factors) {
  std::vector<FactorType> out;
  out.reserve(factors.size());
  for (FactorType t : factors) out.push_back(dual_factor(t));
  std::sort(out.begin(), out.end());
  return out;
}

DualityDatum tdualize(const RealTorus& x, const AffineGerbeClass& g) {
  validate(x, g);
  if (g.point_twist.e != 0)
    throw GradedInput("strip the grading into the shift ledger before dualizing");

  DualityDatum d;
  d.source = x;
  d.source_gerbe = g;
  d.source_reduced = reduce_mod_point_gerbes(x, g);
  const std::size_t n = x.rank();
  const IntVector c = x.chern_vector();
  d.source_chern_nonzero = decompose(x).chern_nonzero;
  d.target_chern_nonzero = lambda_class_nonzero(x, g.lambda_part);

  d.target.sigma = -x.sigma.transpose();
  d.target.translation_lift.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.target.translation_lift[i] = Rational(g.lambda_part[i], 2);
    d.target.translation_lift[i].canonicalize();
  }
  d.delta = IntMatrix::identity(n);

  AffineGerbeClass dual;
  dual.lambda_part = c;
  const std::size_t slots = decompose(d.target).cyclotomic;
  for (std::size_t i = 0; i < slots; ++i)
    dual.signatures.push_back(i == 0 && d.source_chern_nonzero
                                  ? FixedPointSignature{0, 1}
                                  : FixedPointSignature{0, 0});
  dual.point_twist = d.source_reduced.residual_twist;
  d.target_candidates.push_back(dual);
  if (d.source_chern_nonzero && !d.target_chern_nonzero) {
    dual.point_twist = point_gerbe_mul(dual.point_twist, {0, 1});
    d.target_candidates.push_back(dual);
  }

  d.shift_ledger.fiber_dimension = n;
  d.shift_ledger.minus_rank = minus_eigenspace_rank(x.sigma);
  d.shift_ledger.source_twist_shift = degree_shift_of_twist(d.source_reduced.residual_twist);
  for (const AffineGerbeClass& cand : d.target_candidates) {
    d.target_reduced.push_back(reduce_mod_point_gerbes(d.target, cand));
    d.shift_ledger.target_twist_shifts.push_back(
        degree_shift_of_twist(d.target_reduced.back().residual_twist));
  }
  return d;
}

int fm_degree_map(const DualityDatum& d, int j) {
  if (!d.shift_ledger.complete())
    throw LedgerIncomplete("fiber dimension and R_- rank are required");
  const long n = static_cast<long>(*d.shift_ledger.fiber_dimension);
  const long bm = static_cast<long>(*d.shift_ledger.minus_rank);
  return static_cast<int>(((j + 2 * bm - n) % 8 + 8) % 8);
}

TorusWithGerbe target_pair(const DualityDatum& d, std::size_t candidate) {
  return {d.target, d.target_candidates.at(candidate)};
}

}  // namespace krtorus
