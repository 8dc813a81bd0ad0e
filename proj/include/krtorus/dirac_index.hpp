#pragma once

// Index constraints for Dirac operators of Real spin^c structures of type k
// and the degree bookkeeping of the Jacobian Fourier-Mukai transform.

#include <string_view>

namespace krtorus {

struct RealSpinContext {
  long n = 0;        // dimension
  long k = 0;        // type, mod 4
  long b_plus = 0;   // +1 eigenspace of sigma* on H^1
  long b_minus = 0;  // -1 eigenspace
  bool has_fixed_point = true;
};

enum class IndexVerdict { Unconstrained, Even, Zero };

std::string_view to_string(IndexVerdict v);

struct IndexConstraint {
  IndexVerdict verdict = IndexVerdict::Unconstrained;
  bool mod2_index_available = false;
  int lift_degree = 0;  // 2k - n mod 8
};

/// Throws NoFixedPoint for fixed-point-free involutions and
/// std::invalid_argument for negative dimensions.
IndexConstraint index_constraint(const RealSpinContext& ctx);

struct JacobianDegrees {
  int albanese_push = 0;  // -n + b_+ - b_- + 2k
  int fm_shift = 0;       // -b_+ + b_-
  int ind_degree = 0;     // 2k - n
};

JacobianDegrees jacobian_degrees(const RealSpinContext& ctx);

}  // namespace krtorus
