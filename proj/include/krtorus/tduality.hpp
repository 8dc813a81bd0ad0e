#pragma once

// Real T-duality over a point at the level of classifying data.

#include <optional>
#include <vector>

#include "krtorus/gerbe_class.hpp"

namespace krtorus {

struct ShiftLedger {
  std::optional<std::size_t> fiber_dimension;  // n
  std::optional<std::size_t> minus_rank;       // b_-, the R_- summands of V
  int source_twist_shift = 0;                  // degree_shift_of_twist, source
  std::vector<int> target_twist_shifts;        // one per candidate

  bool complete() const { return fiber_dimension && minus_rank; }
};

struct DualityDatum {
  RealTorus source;
  AffineGerbeClass source_gerbe;
  ReducedGerbe source_reduced;

  RealTorus target;  // sigma = -sigma0^T, lift lambda / 2
  std::vector<AffineGerbeClass> target_candidates;
  std::vector<ReducedGerbe> target_reduced;  // one per candidate

  IntMatrix delta;  // identity in the canonical dual basis
  ShiftLedger shift_ledger;

  bool source_chern_nonzero = false;  // c != 0
  bool target_chern_nonzero = false;  // c^ != 0
};

/// The dual pair. Two candidates, differing by the point gerbe (0, 1), exactly
/// when c != 0 and c^ = 0. Throws GradedInput if the gerbe is graded.
DualityDatum tdualize(const RealTorus& x, const AffineGerbeClass& g);

/// T1 <-> T3, T2 <-> T4, T5 <-> T5 elementwise; result sorted.
std::vector<FactorType> dualize_classified(const std::vector<FactorType>& factors);
FactorType dual_factor(FactorType t);

/// j' = j + 2 b_- - n (mod 8). Throws LedgerIncomplete.
int fm_degree_map(const DualityDatum& d, int j);

/// Rebuilds a datum whose target is the given candidate as a new source, for
/// double-dual checks.
TorusWithGerbe target_pair(const DualityDatum& d, std::size_t candidate);

}  // namespace krtorus
