#pragma once

// KR-theory of Real tori over a point: the coefficient ring, the five
// indecomposable tables, free-factor splitting and Fourier-Mukai checks.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "krtorus/tduality.hpp"

namespace krtorus {

/// a + b eta + c eta^2 + d h in Z[eta, h] / (2 eta, eta^3, eta h, h^2 - 4).
/// deg eta = -1, deg h = 4.
struct RElement {
  BigInt one = 0;
  int eta = 0;   // mod 2
  int eta2 = 0;  // mod 2
  BigInt h = 0;

  static RElement unit() { return {1, 0, 0, 0}; }
  static RElement eta_gen() { return {0, 1, 0, 0}; }
  static RElement h_gen() { return {0, 0, 0, 1}; }

  bool is_zero() const { return one == 0 && eta == 0 && eta2 == 0 && h == 0; }
  /// Degree mod 8 when the element is a nonzero homogeneous element.
  std::optional<int> degree() const;

  friend bool operator==(const RElement&, const RElement&) = default;
};

RElement r_add(const RElement& x, const RElement& y);
RElement r_mul(const RElement& x, const RElement& y);

/// KR^j(pt).
FGAbelianGroup kr_point(int j);

inline int mod8(long j) { return static_cast<int>(((j % 8) + 8) % 8); }

struct GradedGroupZ8 {
  std::array<FGAbelianGroup, 8> groups{};

  const FGAbelianGroup& operator[](long j) const { return groups[mod8(j)]; }
  FGAbelianGroup& operator[](long j) { return groups[mod8(j)]; }
  std::size_t total_free_rank() const;

  friend bool operator==(const GradedGroupZ8&, const GradedGroupZ8&) = default;
};

/// shift(G, s)[j] = G[j - s].
GradedGroupZ8 shift(const GradedGroupZ8& g, int s);
GradedGroupZ8 direct_sum(const GradedGroupZ8& a, const GradedGroupZ8& b);

struct KRGenerator {
  std::string name;
  int degree;  // mod 8
  long order;  // 0 for a free generator
};

struct KRTable {
  std::string type_tag;  // "point" or "T1".."T5"
  GradedGroupZ8 graded;
  std::vector<KRGenerator> generators;
  bool free_over_R = false;
};

KRTable kr_point_table();
KRTable kr_table(FactorType t);

struct KRTorusResult {
  bool complete = false;
  GradedGroupZ8 groups;             // set when complete
  std::vector<KRTable> factor_tables;  // set when not complete
  std::string reason;
};

/// KR^*(X, G (x) twist) for the product of the given factors with their
/// reduced gerbes. Complete when at most one factor is T2, T4 or T5.
KRTorusResult kr_torus(const std::vector<FactorType>& factors,
                       PointGerbeClass twist = {});

struct FMDegreeRow {
  int source_degree;
  int target_degree;
  FGAbelianGroup source;
  FGAbelianGroup target;
  bool equal;
};

struct FMCandidateReport {
  std::vector<FactorType> source_factors;
  std::vector<FactorType> target_factors;
  PointGerbeClass source_twist;
  PointGerbeClass target_twist;
  std::vector<FMDegreeRow> rows;  // 8 rows, j = 0..7
  bool pass = false;
};

struct FMReport {
  std::vector<FMCandidateReport> candidates;
  bool pass = false;
  std::size_t source_free_rank = 0;
  std::size_t target_free_rank = 0;
};

/// Compares KR^j(source) with KR^{j'}(target) for each candidate. Throws
/// UnsupportedProduct when a side has two or more non-free factors.
FMReport fm_verify(const DualityDatum& d);

struct FactorPairReport {
  FactorType source;
  FactorType target;
  FMReport report;
};

struct FactorwiseReport {
  std::vector<FactorPairReport> pairs;
  bool pass = false;
};

/// Runs fm_verify on each indecomposable factor of the source with its dual.
/// The residual point twist is attached to the first factor.
FactorwiseReport fm_verify_factorwise(const DualityDatum& d);

bool kr_supported(const std::vector<FactorType>& factors);

}  // namespace krtorus
