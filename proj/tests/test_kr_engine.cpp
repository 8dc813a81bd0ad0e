#include <doctest.h>

#include <random>

#include "krtorus/errors.hpp"
#include "krtorus/kr_engine.hpp"

using namespace krtorus;

namespace {

const FGAbelianGroup Z = FGAbelianGroup::free(1);
const FGAbelianGroup Z2 = FGAbelianGroup::cyclic(2);
const FGAbelianGroup zero = FGAbelianGroup::trivial();

FGAbelianGroup grp(std::size_t free, std::size_t twos) { return {free, IntVector(twos, 2)}; }

const std::vector<FactorType> all_types{FactorType::T1, FactorType::T2, FactorType::T3,
                                        FactorType::T4, FactorType::T5};

// Hand expansion of R^j: Z, 0, 0, 0, Z, 0, Z/2, Z/2.
FGAbelianGroup point(int j) {
  static const FGAbelianGroup table[8] = {Z, zero, zero, zero, Z, zero, Z2, Z2};
  return table[mod8(j)];
}

RElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  return {d(rng), static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), d(rng)};
}

}  // namespace

TEST_SUITE("kr_engine") {

TEST_CASE("ring relations") {
  CHECK(r_mul(RElement::h_gen(), RElement::h_gen()) == RElement{4, 0, 0, 0});
  CHECK(r_mul(RElement::eta_gen(), RElement::h_gen()).is_zero());
  const RElement eta2 = r_mul(RElement::eta_gen(), RElement::eta_gen());
  CHECK(eta2 == RElement{0, 0, 1, 0});
  CHECK(r_mul(eta2, RElement::eta_gen()).is_zero());
  CHECK(r_add(RElement::eta_gen(), RElement::eta_gen()).is_zero());
  CHECK(r_mul(RElement{2, 0, 0, 0}, RElement::eta_gen()).is_zero());
}

TEST_CASE("ring is commutative and associative") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const RElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK(r_mul(a, b) == r_mul(b, a));
    CHECK(r_mul(r_mul(a, b), c) == r_mul(a, r_mul(b, c)));
    CHECK(r_mul(a, r_add(b, c)) == r_add(r_mul(a, b), r_mul(a, c)));
  }
  const std::vector<RElement> monomials{RElement::unit(), RElement::eta_gen(),
                                        RElement{0, 0, 1, 0}, RElement::h_gen()};
  for (const auto& x : monomials)
    for (const auto& y : monomials) {
      const RElement p = r_mul(x, y);
      if (!p.is_zero() && p.degree())
        CHECK(*p.degree() == mod8(*x.degree() + *y.degree()));
    }
}

TEST_CASE("coefficient groups") {
  CHECK(kr_point(0) == Z);
  CHECK(kr_point(7) == Z2);
  CHECK(kr_point(5) == zero);
  CHECK(kr_point(-1) == Z2);
  for (int j = 0; j < 8; ++j) CHECK(kr_point(j) == point(j));
  CHECK(kr_point_table().graded[6] == Z2);
}

TEST_CASE("type tables") {
  CHECK(kr_table(FactorType::T2).graded[3] == Z2);
  CHECK(kr_table(FactorType::T4).graded[2] == Z2);
  CHECK(kr_table(FactorType::T4).graded[3] == Z);
  CHECK(kr_table(FactorType::T5).graded[7] == grp(1, 2));
  CHECK(kr_table(FactorType::T1).graded[0] == grp(1, 1));
  CHECK(kr_table(FactorType::T1).free_over_R);
  CHECK(kr_table(FactorType::T3).free_over_R);
  CHECK_FALSE(kr_table(FactorType::T2).free_over_R);
  CHECK_FALSE(kr_table(FactorType::T4).free_over_R);
  CHECK_FALSE(kr_table(FactorType::T5).free_over_R);
}

TEST_CASE("free tables expand over the coefficients") {
  for (int j = 0; j < 8; ++j) {
    CHECK(kr_table(FactorType::T1).graded[j] == direct_sum(point(j), point(j - 1)));
    CHECK(kr_table(FactorType::T3).graded[j] == direct_sum(point(j), point(j + 1)));
  }
}

TEST_CASE("periodicity of the torsion tables") {
  for (int j = 0; j < 8; ++j) {
    CHECK(kr_table(FactorType::T4).graded[j] == kr_table(FactorType::T4).graded[j + 4]);
    CHECK(kr_table(FactorType::T2).graded[j] == kr_table(FactorType::T2).graded[j + 4]);
  }
}

TEST_CASE("generators are consistent with the groups") {
  for (FactorType t : all_types) {
    const KRTable table = kr_table(t);
    std::size_t free = 0, torsion = 0;
    for (const auto& g : table.generators) (g.order == 0 ? free : torsion) += 1;
    std::size_t free_sum = 0, torsion_sum = 0;
    for (int j = 0; j < 8; ++j) {
      free_sum += table.graded[j].free_rank;
      torsion_sum += table.graded[j].torsion.size();
    }
    CHECK(free == free_sum);
    CHECK(torsion == torsion_sum);
  }
}

TEST_CASE("shift") {
  const GradedGroupZ8 g = kr_point_table().graded;
  CHECK(shift(g, 0) == g);
  CHECK(shift(g, 4)[0] == Z);
  CHECK(shift(g, 1)[0] == Z2);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(shift(shift(g, a), b) == shift(g, a + b));
}

TEST_CASE("torus groups") {
  const KRTorusResult t11 = kr_torus({FactorType::T1, FactorType::T1});
  REQUIRE(t11.complete);
  CHECK(t11.groups[0] == grp(1, 3));
  for (int j = 0; j < 8; ++j)
    CHECK(t11.groups[j] ==
          direct_sum(direct_sum(point(j), point(j - 1)), direct_sum(point(j - 1), point(j - 2))));

  const KRTorusResult t5 = kr_torus({FactorType::T5}, {1, 0});
  REQUIRE(t5.complete);
  CHECK(t5.groups[2] == grp(2, 0));
  CHECK(t5.groups[2] == kr_table(FactorType::T5).graded[4]);

  const KRTorusResult partial = kr_torus({FactorType::T2, FactorType::T4});
  CHECK_FALSE(partial.complete);
  CHECK(partial.factor_tables.size() == 2);
  CHECK(kr_torus({}).groups == kr_point_table().graded);
}

TEST_CASE("fourier-mukai on indecomposable pairs") {
  for (FactorType t : all_types) {
    const TorusWithGerbe p = realize({t});
    const DualityDatum d = tdualize(p.torus, p.gerbe);
    const FMReport r = fm_verify(d);
    CHECK(r.pass);
    CHECK(r.candidates.size() == (t == FactorType::T2 ? 2u : 1u));
    CHECK(r.source_free_rank == r.target_free_rank);
    for (const auto& c : r.candidates) CHECK(c.rows.size() == 8);
  }
}

TEST_CASE("fourier-mukai on products and twists") {
  for (FactorType a : all_types)
    for (FactorType b : all_types)
      for (PointGerbeClass twist : {PointGerbeClass{0, 0}, PointGerbeClass{0, 1}}) {
        const TorusWithGerbe p = realize({a, b}, twist);
        const DualityDatum d = tdualize(p.torus, p.gerbe);
        if (kr_supported(d.source_reduced.factors)) {
          const FMReport r = fm_verify(d);
          CHECK(r.pass);
          CHECK(r.source_free_rank == r.target_free_rank);
        } else {
          CHECK_THROWS_AS(fm_verify(d), UnsupportedProduct);
          CHECK(fm_verify_factorwise(d).pass);
        }
      }
}

TEST_CASE("a wrong degree map is detected") {
  const TorusWithGerbe p = realize({FactorType::T2});
  DualityDatum d = tdualize(p.torus, p.gerbe);
  d.shift_ledger.minus_rank = 1;
  CHECK_FALSE(fm_verify(d).pass);
}

}
