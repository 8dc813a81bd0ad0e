// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "krtorus/c2cohomology.hpp"
#include "krtorus/dirac_index.hpp"
#include "krtorus/errors.hpp"
#include "krtorus/gerbe_class.hpp"
#include "krtorus/kr_engine.hpp"
#include "krtorus/tduality.hpp"
#include "krtorus/torus_class.hpp"
#include "oracle.hpp"

using namespace krtorus;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

FGAbelianGroup grp(std::size_t free, std::size_t twos) { return {free, IntVector(twos, 2)}; }

const std::vector<FactorType> all_types{FactorType::T1, FactorType::T2, FactorType::T3,
                                        FactorType::T4, FactorType::T5};

// Z/4 with generator (1,0): (0,0) -> 0, (1,0) -> 1, (0,1) -> 2, (1,1) -> 3.
int as_z4(PointGerbeClass g) { return g.e + 2 * g.mu; }
PointGerbeClass from_z4(int x) { return {x % 2, (x / 2) % 2}; }

Outcome point_gerbe_group() {
  Outcome o;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      o.require(as_z4(point_gerbe_mul(from_z4(x), from_z4(y))) == (x + y) % 4,
                "product " + std::to_string(x) + "*" + std::to_string(y));
  o.require(point_gerbe_order({1, 0}) == 4, "order of (1,0)");
  o.require(point_gerbe_mul({1, 0}, {1, 0}) == PointGerbeClass{0, 1}, "(1,0)^2");
  return o;
}

Outcome cohomology_golden() {
  Outcome o;
  o.require(cohomology(C2Module::trivial_z(), 2) == grp(0, 1), "H2(Z)");
  o.require(cohomology(C2Module::cyclotomic(), 2) == grp(0, 0), "H2(Z-)");
  o.require(cohomology(C2Module::regular(), 2) == grp(0, 0), "H2(R)");
  o.require(cohomology(C2Module::cyclotomic(), 3) == grp(0, 1), "H3(Z-)");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(301);
  std::uniform_int_distribution<long> d(-3, 3);
  std::size_t modules = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto c = oracle::random_counts(n, rng);
    const auto u = oracle::random_unimodular(n, rng);
    const IntMatrix s = oracle::from_mat(oracle::mul(oracle::mul(u.u, oracle::block_involution(c)), u.u_inv));
    const std::size_t r = rng() % (n + 1);
    for (bool twist : {false, true}) {
      C2Module m = C2Module::lattice(s, twist);
      if (r > 0) {
        IntMatrix rel(n, r);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < r; ++j) rel(i, j) = d(rng);
        m.relations = rel.hconcat(m.action() * rel);
      }
      for (int k = 0; k <= 5; ++k)
        o.require(cohomology(m, k) == cohomology_oracle(m, k),
                  "trial " + std::to_string(trial) + " k=" + std::to_string(k));
      ++modules;
    }
  }
  o.require(modules >= 200, "too few modules");
  const double t = seconds_since(t0);
  o.require(t <= 60.0, "runtime " + std::to_string(t) + " s");
  o.detail = o.pass ? std::to_string(modules) + " modules, " + std::to_string(t) + " s" : o.detail;
  return o;
}

Outcome affine_cases() {
  Outcome o;
  o.require(affine_h2({C2Module::trivial_z(), {Rational(0)}}).group == grp(0, 1), "case 1");
  o.require(affine_h2({C2Module::trivial_z(), {Rational(1, 2)}}).group == grp(0, 0), "case 2");
  o.require(affine_h2({C2Module::cyclotomic(), {Rational(0)}}).group == grp(0, 2), "case 3");
  o.require(affine_h2({C2Module::regular(), {Rational(0), Rational(0)}}).group == grp(0, 1), "case 4");
  return o;
}

Outcome decomposition() {
  Outcome o;
  std::mt19937_64 rng(501);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto c = oracle::random_counts(n, rng);
    const std::size_t chern = c.a ? rng() % (c.a + 1) : 0;
    const RealTorus x = oracle::assembled_torus(c, chern, oracle::random_unimodular(n, rng, 12), rng);
    o.require(decompose(x) == DecompositionInvariants{c.a, c.b, c.r, chern > 0},
              "trial " + std::to_string(trial));
  }
  return o;
}

Outcome kr_tables() {
  // Degrees 0..7 as (free rank, number of Z/2 summands).
  const std::vector<std::pair<FactorType, std::vector<FGAbelianGroup>>> golden{
      {FactorType::T1, {grp(1, 1), grp(1, 0), grp(0, 0), grp(0, 0), grp(1, 0), grp(1, 0), grp(0, 1), grp(0, 2)}},
      {FactorType::T2, {grp(1, 0), grp(1, 0), grp(0, 0), grp(0, 1), grp(1, 0), grp(1, 0), grp(0, 0), grp(0, 1)}},
      {FactorType::T3, {grp(1, 0), grp(0, 0), grp(0, 0), grp(1, 0), grp(1, 0), grp(0, 1), grp(0, 2), grp(1, 1)}},
      {FactorType::T4, {grp(1, 0), grp(0, 0), grp(0, 1), grp(1, 0), grp(1, 0), grp(0, 0), grp(0, 1), grp(1, 0)}},
      {FactorType::T5, {grp(2, 0), grp(1, 0), grp(0, 0), grp(1, 0), grp(2, 0), grp(1, 0), grp(0, 2), grp(1, 2)}},
  };
  Outcome o;
  int entries = 0;
  for (const auto& [t, row] : golden) {
    const KRTable table = kr_table(t);
    for (int j = 0; j < 8; ++j, ++entries)
      o.require(table.graded[j] == row[j], std::string(to_string(t)) + " degree " + std::to_string(j));
  }
  o.require(entries == 40, "entry count");
  return o;
}

Outcome fourier_mukai() {
  Outcome o;
  const auto t0 = Clock::now();
  int checked = 0;
  for (FactorType t : all_types) {
    const TorusWithGerbe p = realize({t});
    const DualityDatum d = tdualize(p.torus, p.gerbe);
    const FMReport r = fm_verify(d);
    o.require(r.pass && !r.candidates.empty(), std::string(to_string(t)));
    ++checked;
  }
  for (FactorType a : all_types)
    for (FactorType b : all_types)
      for (PointGerbeClass twist : {PointGerbeClass{0, 0}, PointGerbeClass{0, 1}}) {
        const TorusWithGerbe p = realize({a, b}, twist);
        const DualityDatum d = tdualize(p.torus, p.gerbe);
        const std::string name = std::string(to_string(a)) + "x" + std::string(to_string(b));
        bool supported = kr_supported(d.source_reduced.factors);
        for (const auto& tr : d.target_reduced) supported = supported && kr_supported(tr.factors);
        if (supported) {
          const FMReport r = fm_verify(d);
          o.require(r.pass && r.candidates.size() == d.target_candidates.size(), name);
        } else {
          const FactorwiseReport r = fm_verify_factorwise(d);
          bool all = r.pass;
          for (const auto& fp : r.pairs)
            all = all && fp.report.pass && !fp.report.candidates.empty();
          o.require(all, name + " factorwise");
        }
        ++checked;
      }
  const double t = seconds_since(t0);
  o.require(t <= 5.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " pairs, " + std::to_string(t) + " s";
  return o;
}

Outcome candidate_cardinality() {
  // c != 0 only for the half-shift circle; its dual is the reflected circle
  // with nontrivial gerbe, which has c^ = 0.
  Outcome o;
  for (FactorType t : all_types) {
    const bool c = t == FactorType::T2;
    const bool c_hat = t == FactorType::T4;
    for (PointGerbeClass twist : {PointGerbeClass{0, 0}, PointGerbeClass{0, 1}}) {
      const TorusWithGerbe p = realize({t}, twist);
      const DualityDatum d = tdualize(p.torus, p.gerbe);
      const std::string name(to_string(t));
      o.require(d.source_chern_nonzero == c && d.target_chern_nonzero == c_hat, name + " chern flags");
      o.require(d.target_candidates.size() == (c && !c_hat ? 2u : 1u), name + " candidates");
    }
  }
  return o;
}

Outcome index_grid() {
  Outcome o;
  for (long n = 0; n < 8; ++n)
    for (long k = 0; k < 4; ++k) {
      const long deg = ((2 * k - n) % 8 + 8) % 8;
      IndexVerdict want = IndexVerdict::Unconstrained;
      if (deg == 4) want = IndexVerdict::Even;
      if (deg == 2 || deg == 6 || n % 2 == 1) want = IndexVerdict::Zero;
      const bool mod2 = deg == 7 || deg == 6;
      const IndexConstraint got = index_constraint({n, k});
      const std::string cell = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.require(got.verdict == want, cell + " verdict");
      o.require(got.mod2_index_available == mod2, cell + " mod 2 flag");
      o.require(got.lift_degree == deg, cell + " degree");
    }
  return o;
}

Outcome jacobian_identity() {
  Outcome o;
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 1000; ++trial) {
    RealSpinContext c;
    c.n = static_cast<long>(rng() % 64);
    c.k = static_cast<long>(rng() % 4);
    c.b_plus = static_cast<long>(rng() % 32);
    c.b_minus = static_cast<long>(rng() % 32);
    const JacobianDegrees j = jacobian_degrees(c);
    const long want = ((2 * c.k - c.n) % 8 + 8) % 8;
    const long got = ((j.albanese_push + j.fm_shift) % 8 + 8) % 8;
    o.require(got == want, "trial " + std::to_string(trial));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"point-gerbe group is cyclic of order 4", point_gerbe_group},
      {"cohomology golden values", cohomology_golden},
      {"cohomology agrees with the resolution oracle", oracle_equivalence},
      {"affine gerbe groups of the four circle cases", affine_cases},
      {"decomposition of conjugated block tori", decomposition},
      {"KR tables of the five types", kr_tables},
      {"Fourier-Mukai degree check on dual pairs", fourier_mukai},
      {"dual candidate cardinality", candidate_cardinality},
      {"index constraint grid", index_grid},
      {"Jacobian shift identity", jacobian_identity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
