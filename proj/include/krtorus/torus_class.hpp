#pragma once

// Classification of Real affine tori over a point: multiplicities of the
// trivial, cyclotomic and regular lattice summands and the Chern flag.

#include <string>
#include <string_view>
#include <vector>

#include "krtorus/c2cohomology.hpp"

namespace krtorus {

/// X = V / Lambda with involution x -> sigma0(x) + t, where t is the image of
/// the rational lift `translation_lift`.
struct RealTorus {
  IntMatrix sigma;  // linear part sigma0 on Lambda = Z^n
  RationalVector translation_lift;

  std::size_t rank() const { return sigma.rows(); }
  C2Module lattice() const { return C2Module::lattice(sigma); }
  AffineCoefficient affine_coefficient() const {
    return {lattice(), translation_lift};
  }
  /// Representative t + sigma0(t) of the Chern class in H^2(C2; Lambda).
  IntVector chern_vector() const;
};

/// Throws NotAnInvolution unless sigma0^2 = 1 and t + sigma0(t) is integral.
void validate(const RealTorus& x);

struct DecompositionInvariants {
  std::size_t trivial = 0;     // summands Z
  std::size_t cyclotomic = 0;  // summands Z_-
  std::size_t regular = 0;     // summands Z^2 with swap
  bool chern_nonzero = false;

  friend bool operator==(const DecompositionInvariants&,
                         const DecompositionInvariants&) = default;
};

enum class FactorType { T1, T2, T3, T4, T5 };

std::string_view to_string(FactorType t);
/// Parses "T1".."T5"; throws std::invalid_argument otherwise.
FactorType parse_factor_type(std::string_view s);
bool is_free_factor(FactorType t);
/// Fibre dimension of an indecomposable factor.
std::size_t factor_dimension(FactorType t);

/// A slot of the canonical factorization. Cyclotomic circles need gerbe data
/// to decide between T3 and T4 and are reported as pending T3.
struct FactorSlot {
  FactorType type;
  bool gerbe_pending = false;

  friend bool operator==(const FactorSlot&, const FactorSlot&) = default;
};

DecompositionInvariants decompose(const RealTorus& x);

/// Canonical multiset, sorted: one T2 if the Chern class is nonzero, T1 for
/// the remaining trivial summands, pending T3 for cyclotomic summands, T5 for
/// regular summands.
std::vector<FactorSlot> canonical_factors(const RealTorus& x);
std::vector<FactorSlot> canonical_factors(const DecompositionInvariants& inv);

/// The dual lattice Lambda^* with involution -sigma0^T. The translation of
/// the dual torus depends on the gerbe and is assigned during dualization.
struct DualTorusShape {
  IntMatrix sigma;
};

DualTorusShape dual_torus(const RealTorus& x);

/// Rank of ker(sigma0 + 1), the number of R_- summands of V.
std::size_t minus_eigenspace_rank(const IntMatrix& sigma);

}  // namespace krtorus
