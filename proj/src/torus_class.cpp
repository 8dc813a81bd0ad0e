#include "krtorus/torus_class.hpp"

#include <algorithm>
#include <stdexcept>

#include "krtorus/errors.hpp"

namespace krtorus {

IntVector RealTorus::chern_vector() const {
  const std::size_t n = rank();
  IntVector c(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational v = translation_lift[i];
    for (std::size_t j = 0; j < n; ++j) v += Rational(sigma(i, j)) * translation_lift[j];
    v.canonicalize();
    if (v.get_den() != 1)
      throw NotAnInvolution("t + sigma0(t) is not a lattice vector");
    c[i] = v.get_num();
  }
  return c;
}

void validate(const RealTorus& x) {
  const std::size_t n = x.sigma.rows();
  if (x.sigma.cols() != n) throw NotAnInvolution("sigma0 must be square");
  if (x.translation_lift.size() != n)
    throw DimensionMismatch("translation lift length differs from rank");
  if (x.sigma * x.sigma != IntMatrix::identity(n))
    throw NotAnInvolution("sigma0 does not square to the identity");
  (void)x.chern_vector();
}

std::string_view to_string(FactorType t) {
  switch (t) {
    case FactorType::T1: return "T1";
    case FactorType::T2: return "T2";
    case FactorType::T3: return "T3";
    case FactorType::T4: return "T4";
    case FactorType::T5: return "T5";
  }
  return "?";
}

FactorType parse_factor_type(std::string_view s) {
  if (s == "T1") return FactorType::T1;
  if (s == "T2") return FactorType::T2;
  if (s == "T3") return FactorType::T3;
  if (s == "T4") return FactorType::T4;
  if (s == "T5") return FactorType::T5;
  throw std::invalid_argument("unknown factor type '" + std::string(s) + "'");
}

bool is_free_factor(FactorType t) {
  return t == FactorType::T1 || t == FactorType::T3;
}

std::size_t factor_dimension(FactorType t) { return t == FactorType::T5 ? 2 : 1; }

std::size_t minus_eigenspace_rank(const IntMatrix& sigma) {
  return kernel_basis(sigma + IntMatrix::identity(sigma.rows())).cols();
}

DecompositionInvariants decompose(const RealTorus& x) {
  validate(x);
  const std::size_t n = x.rank();
  const C2Module lat = x.lattice();
  const IntMatrix id = IntMatrix::identity(n);

  DecompositionInvariants inv;
  // H^2 = (Z/2)^a, H^1 = (Z/2)^b for Z^a + Z_-^b + R^r.
  inv.trivial = cohomology(lat, 2).torsion.size();
  inv.cyclotomic = cohomology(lat, 1).torsion.size();
  const std::size_t fixed_rank = kernel_basis(x.sigma - id).cols();
  inv.regular = fixed_rank - inv.trivial;
  if (inv.trivial + inv.cyclotomic + 2 * inv.regular != n)
    throw NotAnInvolution("lattice does not split into C2 summands");

  inv.chern_nonzero = !in_lattice(x.chern_vector(), id + x.sigma);
  return inv;
}

std::vector<FactorSlot> canonical_factors(const DecompositionInvariants& inv) {
  std::vector<FactorSlot> slots;
  for (std::size_t i = 0; i < inv.trivial; ++i) {
    const bool distinguished = inv.chern_nonzero && i == 0;
    slots.push_back({distinguished ? FactorType::T2 : FactorType::T1, false});
  }
  for (std::size_t i = 0; i < inv.cyclotomic; ++i)
    slots.push_back({FactorType::T3, true});
  for (std::size_t i = 0; i < inv.regular; ++i)
    slots.push_back({FactorType::T5, false});
  std::stable_sort(slots.begin(), slots.end(),
                   [](const FactorSlot& a, const FactorSlot& b) {
                     return static_cast<int>(a.type) < static_cast<int>(b.type);
                   });
  return slots;
}

std::vector<FactorSlot> canonical_factors(const RealTorus& x) {
  return canonical_factors(decompose(x));
}

DualTorusShape dual_torus(const RealTorus& x) {
  validate(x);
  return {-x.sigma.transpose()};
}

}  // namespace krtorus
