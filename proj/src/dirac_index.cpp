#include "krtorus/dirac_index.hpp"

#include <stdexcept>

#include "krtorus/errors.hpp"

namespace krtorus {

namespace {

int mod8(long v) { return static_cast<int>(((v % 8) + 8) % 8); }

void check(const RealSpinContext& ctx) {
  if (ctx.n < 0 || ctx.b_plus < 0 || ctx.b_minus < 0)
    throw std::invalid_argument("n, b_plus and b_minus must be nonnegative");
  if (!ctx.has_fixed_point)
    throw NoFixedPoint("the index of a free involution lies in twisted KR-theory");
}

}  // namespace

std::string_view to_string(IndexVerdict v) {
  switch (v) {
    case IndexVerdict::Unconstrained: return "unconstrained";
    case IndexVerdict::Even: return "even";
    case IndexVerdict::Zero: return "zero";
  }
  return "?";
}

IndexConstraint index_constraint(const RealSpinContext& ctx) {
  check(ctx);
  IndexConstraint c;
  c.lift_degree = mod8(2 * ctx.k - ctx.n);
  // Image of KO^m(pt) -> K^m(pt): Z in degree 0, 2Z in degree 4, else 0.
  switch (c.lift_degree) {
    case 0: c.verdict = IndexVerdict::Unconstrained; break;
    case 4: c.verdict = IndexVerdict::Even; break;
    default: c.verdict = IndexVerdict::Zero; break;
  }
  c.mod2_index_available = c.lift_degree == 6 || c.lift_degree == 7;
  return c;
}

JacobianDegrees jacobian_degrees(const RealSpinContext& ctx) {
  check(ctx);
  JacobianDegrees d;
  d.albanese_push = mod8(-ctx.n + ctx.b_plus - ctx.b_minus + 2 * ctx.k);
  d.fm_shift = mod8(-ctx.b_plus + ctx.b_minus);
  d.ind_degree = mod8(2 * ctx.k - ctx.n);
  return d;
}

}  // namespace krtorus
