#include "krtorus/gerbe_class.hpp"

#include <algorithm>

#include "krtorus/errors.hpp"

namespace krtorus {

PointGerbeClass point_gerbe_mul(PointGerbeClass a, PointGerbeClass b) {
  return {(a.e + b.e) & 1, (a.mu + b.mu + a.e * b.e) & 1};
}

PointGerbeClass point_gerbe_power(int p) {
  PointGerbeClass g;
  const PointGerbeClass u{1, 0};
  for (int i = 0; i < ((p % 4) + 4) % 4; ++i) g = point_gerbe_mul(g, u);
  return g;
}

int point_gerbe_exponent(PointGerbeClass g) {
  g.e &= 1;
  g.mu &= 1;
  for (int p = 0; p < 4; ++p)
    if (point_gerbe_power(p) == g) return p;
  return 0;
}

int point_gerbe_order(PointGerbeClass g) {
  const PointGerbeClass norm{g.e & 1, g.mu & 1};
  PointGerbeClass acc = norm;
  int n = 1;
  while (acc != PointGerbeClass{}) {
    acc = point_gerbe_mul(acc, norm);
    ++n;
  }
  return n;
}

int degree_shift_of_twist(PointGerbeClass g) {
  return ((-2 * point_gerbe_exponent(g)) % 8 + 8) % 8;
}

bool lambda_class_nonzero(const RealTorus& x, const IntVector& lambda) {
  const IntMatrix st = x.sigma.transpose();
  return !in_lattice(lambda, IntMatrix::identity(st.rows()) - st);
}

AffineGerbeClass trivial_gerbe(const RealTorus& x) {
  AffineGerbeClass g;
  g.lambda_part.assign(x.rank(), BigInt(0));
  g.signatures.assign(decompose(x).cyclotomic, {0, 0});
  return g;
}

void validate(const RealTorus& x, const AffineGerbeClass& g) {
  validate(x);
  const std::size_t n = x.rank();
  if (g.lambda_part.size() != n)
    throw InvalidGerbe("lambda has the wrong length for this torus");
  const IntVector moved = x.sigma.transpose() * g.lambda_part;
  for (std::size_t i = 0; i < n; ++i)
    if (moved[i] != -g.lambda_part[i])
      throw InvalidGerbe("lambda is not anti-invariant under sigma^T");
  const std::size_t b = decompose(x).cyclotomic;
  if (g.signatures.size() < b)
    throw UnresolvedSignature("a cyclotomic factor has no fixed-point signature");
  if (g.signatures.size() > b)
    throw InvalidGerbe("more signatures than cyclotomic factors");
  bool unequal = false;
  for (const auto& [s0, s1] : g.signatures) {
    if ((s0 & ~1) || (s1 & ~1)) throw InvalidGerbe("signature entries are mod 2");
    unequal = unequal || s0 != s1;
  }
  if (unequal != lambda_class_nonzero(x, g.lambda_part))
    throw InvalidGerbe("signatures disagree with the class of lambda");
  if ((g.point_twist.e & ~1) || (g.point_twist.mu & ~1))
    throw InvalidGerbe("point twist entries are mod 2");
}

int gerbe_case(FactorType t) {
  switch (t) {
    case FactorType::T1: return 1;
    case FactorType::T2: return 2;
    case FactorType::T3:
    case FactorType::T4: return 3;
    case FactorType::T5: return 4;
  }
  return 0;
}

namespace {

RealTorus model_factor(FactorType t) {
  switch (t) {
    case FactorType::T1: return {IntMatrix{{1}}, {Rational(0)}};
    case FactorType::T2: return {IntMatrix{{1}}, {Rational(1, 2)}};
    case FactorType::T3:
    case FactorType::T4: return {IntMatrix{{-1}}, {Rational(0)}};
    case FactorType::T5: return {IntMatrix{{0, 1}, {1, 0}}, {Rational(0), Rational(0)}};
  }
  return {};
}

}  // namespace

AffineGerbeGroup classify_affine_gerbes(const RealTorus& x) {
  AffineGerbeGroup out;
  for (const FactorSlot& slot : canonical_factors(x)) {
    const FGAbelianGroup g = affine_h2(model_factor(slot.type).affine_coefficient()).group;
    out.case_tags.push_back(gerbe_case(slot.type));
    out.factor_groups.push_back(g);
    out.group = direct_sum(out.group, g);
  }
  out.whole_torus = affine_h2(x.affine_coefficient()).group;
  return out;
}

ReducedGerbe reduce_mod_point_gerbes(const RealTorus& x, const AffineGerbeClass& g) {
  validate(x, g);
  ReducedGerbe out;
  int mu = g.point_twist.mu;
  bool has_t4 = false;
  for (const auto& [s0, s1] : g.signatures) {
    if (s0 == s1)
      mu += s0;
    else
      has_t4 = true;
  }
  for (const FactorSlot& slot : canonical_factors(x)) {
    if (!slot.gerbe_pending) {
      out.factors.push_back(slot.type);
    } else if (has_t4) {
      out.factors.push_back(FactorType::T4);
      has_t4 = false;
    } else {
      out.factors.push_back(FactorType::T3);
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  out.residual_twist = {g.point_twist.e, mu & 1};
  return out;
}

TorusWithGerbe realize(const std::vector<FactorType>& factors, PointGerbeClass twist) {
  IntMatrix sigma(0, 0);
  RealTorus torus{sigma, {}};
  AffineGerbeClass gerbe;
  for (FactorType t : factors) {
    const RealTorus m = model_factor(t);
    torus.sigma = block_diagonal(torus.sigma, m.sigma);
    torus.translation_lift.insert(torus.translation_lift.end(),
                                  m.translation_lift.begin(), m.translation_lift.end());
    for (std::size_t i = 0; i < m.rank(); ++i)
      gerbe.lambda_part.push_back(BigInt(t == FactorType::T4 ? 1 : 0));
  }
  // Cyclotomic slots are listed in factor order; T4 slots carry (0, 1).
  for (FactorType t : factors) {
    if (t == FactorType::T3) gerbe.signatures.push_back({0, 0});
    if (t == FactorType::T4) gerbe.signatures.push_back({0, 1});
  }
  gerbe.point_twist = twist;
  return {torus, gerbe};
}

}  // namespace krtorus
