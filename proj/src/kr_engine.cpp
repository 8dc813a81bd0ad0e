#include "krtorus/kr_engine.hpp"

#include "krtorus/errors.hpp"

namespace krtorus {

std::optional<int> RElement::degree() const {
  const int terms = (one != 0) + (eta != 0) + (eta2 != 0) + (h != 0);
  if (terms != 1) return std::nullopt;
  if (one != 0) return 0;
  if (eta != 0) return 7;
  if (eta2 != 0) return 6;
  return 4;
}

RElement r_add(const RElement& x, const RElement& y) {
  return {x.one + y.one, (x.eta + y.eta) & 1, (x.eta2 + y.eta2) & 1, x.h + y.h};
}

RElement r_mul(const RElement& x, const RElement& y) {
  RElement z;
  z.one = x.one * y.one + 4 * x.h * y.h;
  const BigInt e = x.one * y.eta + y.one * x.eta;
  const BigInt e2 = x.one * y.eta2 + y.one * x.eta2 + x.eta * y.eta;
  z.eta = mpz_odd_p(e.get_mpz_t()) ? 1 : 0;
  z.eta2 = mpz_odd_p(e2.get_mpz_t()) ? 1 : 0;
  z.h = x.one * y.h + y.one * x.h;
  return z;
}

FGAbelianGroup kr_point(int j) {
  switch (mod8(j)) {
    case 0:
    case 4: return FGAbelianGroup::free(1);
    case 6:
    case 7: return FGAbelianGroup::cyclic(2);
    default: return FGAbelianGroup::trivial();
  }
}

std::size_t GradedGroupZ8::total_free_rank() const {
  std::size_t r = 0;
  for (const auto& g : groups) r += g.free_rank;
  return r;
}

GradedGroupZ8 shift(const GradedGroupZ8& g, int s) {
  GradedGroupZ8 out;
  for (int j = 0; j < 8; ++j) out[j] = g[j - s];
  return out;
}

GradedGroupZ8 direct_sum(const GradedGroupZ8& a, const GradedGroupZ8& b) {
  GradedGroupZ8 out;
  for (int j = 0; j < 8; ++j) out[j] = direct_sum(a[j], b[j]);
  return out;
}

namespace {

KRTable assemble(std::string tag, std::vector<KRGenerator> gens, bool free_over_r) {
  KRTable t;
  t.type_tag = std::move(tag);
  std::array<std::vector<BigInt>, 8> orders;
  for (const auto& g : gens) orders[mod8(g.degree)].push_back(BigInt(g.order));
  for (int j = 0; j < 8; ++j)
    t.graded[j] = FGAbelianGroup::from_cyclic_orders(orders[j]);
  t.generators = std::move(gens);
  t.free_over_R = free_over_r;
  return t;
}

// R-module generated by `basis` of degree `deg`, named with `suffix`.
void append_free(std::vector<KRGenerator>& gens, const std::string& suffix, int deg) {
  const auto name = [&](const std::string& r) {
    if (suffix.empty()) return r;
    return r == "1" ? suffix : r + suffix;
  };
  gens.push_back({name("1"), mod8(deg), 0});
  gens.push_back({name("η"), mod8(deg - 1), 2});
  gens.push_back({name("η²"), mod8(deg - 2), 2});
  gens.push_back({name("h"), mod8(deg + 4), 0});
}

}  // namespace

KRTable kr_point_table() {
  std::vector<KRGenerator> gens;
  append_free(gens, "", 0);
  return assemble("point", std::move(gens), true);
}

KRTable kr_table(FactorType t) {
  std::vector<KRGenerator> gens;
  switch (t) {
    case FactorType::T1:
      append_free(gens, "", 0);
      append_free(gens, "τ", 1);
      return assemble("T1", std::move(gens), true);
    case FactorType::T3:
      append_free(gens, "", 0);
      append_free(gens, "τ₋", -1);
      return assemble("T3", std::move(gens), true);
    case FactorType::T2:
      gens = {{"1", 0, 0}, {"ω", 1, 0}, {"ηq", 3, 2},
              {"q", 4, 0}, {"qω", 5, 0}, {"η", 7, 2}};
      return assemble("T2", std::move(gens), false);
    case FactorType::T4:
      gens = {{"χ₀", 0, 0}, {"ηχ₃", 2, 2}, {"χ₃", 3, 0},
              {"χ₄", 4, 0}, {"ηχ₇", 6, 2}, {"χ₇", 7, 0}};
      return assemble("T4", std::move(gens), false);
    case FactorType::T5:
      gens = {{"1", 0, 0},   {"τ", 0, 0},    {"μ₁", 1, 0},   {"μ₃", 3, 0},
              {"h", 4, 0},   {"hτ", 4, 0},   {"μ₅", 5, 0},   {"η²", 6, 2},
              {"η²τ", 6, 2}, {"η", 7, 2},    {"ητ", 7, 2},   {"μ₇", 7, 0}};
      return assemble("T5", std::move(gens), false);
  }
  return {};
}

bool kr_supported(const std::vector<FactorType>& factors) {
  std::size_t non_free = 0;
  for (FactorType t : factors) non_free += is_free_factor(t) ? 0 : 1;
  return non_free <= 1;
}

KRTorusResult kr_torus(const std::vector<FactorType>& factors, PointGerbeClass twist) {
  KRTorusResult out;
  if (!kr_supported(factors)) {
    for (FactorType t : factors) out.factor_tables.push_back(kr_table(t));
    out.reason = "two or more factors of type T2, T4 or T5";
    return out;
  }
  GradedGroupZ8 base = kr_point_table().graded;
  for (FactorType t : factors)
    if (!is_free_factor(t)) base = kr_table(t).graded;
  for (FactorType t : factors) {
    if (t == FactorType::T1) base = direct_sum(base, shift(base, 1));
    if (t == FactorType::T3) base = direct_sum(base, shift(base, -1));
  }
  out.complete = true;
  out.groups = shift(base, -degree_shift_of_twist(twist));
  return out;
}

FMReport fm_verify(const DualityDatum& d) {
  FMReport report;
  report.pass = true;
  for (std::size_t c = 0; c < d.target_candidates.size(); ++c) {
    FMCandidateReport cand;
    cand.source_factors = d.source_reduced.factors;
    cand.target_factors = d.target_reduced.at(c).factors;
    cand.source_twist = d.source_reduced.residual_twist;
    cand.target_twist = d.target_reduced.at(c).residual_twist;
    if (!kr_supported(cand.source_factors) || !kr_supported(cand.target_factors))
      throw UnsupportedProduct(
          "KR groups of a product with two non-free factors are not computed");
    const GradedGroupZ8 src = kr_torus(cand.source_factors, cand.source_twist).groups;
    const GradedGroupZ8 tgt = kr_torus(cand.target_factors, cand.target_twist).groups;
    cand.pass = true;
    for (int j = 0; j < 8; ++j) {
      const int jp = fm_degree_map(d, j);
      FMDegreeRow row{j, jp, src[j], tgt[jp], src[j] == tgt[jp]};
      cand.pass = cand.pass && row.equal;
      cand.rows.push_back(std::move(row));
    }
    report.pass = report.pass && cand.pass;
    report.source_free_rank = src.total_free_rank();
    report.target_free_rank = tgt.total_free_rank();
    report.candidates.push_back(std::move(cand));
  }
  return report;
}

FactorwiseReport fm_verify_factorwise(const DualityDatum& d) {
  FactorwiseReport out;
  out.pass = true;
  bool first = true;
  for (FactorType t : d.source_reduced.factors) {
    const PointGerbeClass twist = first ? d.source_reduced.residual_twist : PointGerbeClass{};
    first = false;
    const TorusWithGerbe pair = realize({t}, twist);
    const DualityDatum sub = tdualize(pair.torus, pair.gerbe);
    FactorPairReport fp{t, dual_factor(t), fm_verify(sub)};
    out.pass = out.pass && fp.report.pass;
    out.pairs.push_back(std::move(fp));
  }
  return out;
}

}  // namespace krtorus
