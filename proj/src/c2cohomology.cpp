#include "krtorus/c2cohomology.hpp"

#include <stdexcept>

#include "krtorus/errors.hpp"

namespace krtorus {

IntMatrix C2Module::relation_lattice() const {
  if (relations.cols() == 0) return IntMatrix(generator_count(), 0);
  return relations;
}

C2Module C2Module::lattice(IntMatrix sigma, bool sign_twist) {
  C2Module m;
  m.relations = IntMatrix(sigma.rows(), 0);
  m.sigma = std::move(sigma);
  m.sign_twist = sign_twist;
  return m;
}

void validate(const C2Module& m) {
  const std::size_t n = m.generator_count();
  if (m.sigma.cols() != n) throw NotAModule("sigma must be square");
  const IntMatrix rel = m.relation_lattice();
  if (rel.rows() != n) throw NotAModule("relation rows must match generators");
  const IntMatrix s = m.action();
  const IntMatrix moved = s * rel;
  for (std::size_t j = 0; j < moved.cols(); ++j)
    if (!in_lattice(moved.column(j), rel))
      throw NotAModule("sigma does not preserve the relation lattice");
  const IntMatrix sq = s * s - IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    if (!in_lattice(sq.column(j), rel))
      throw NotAModule("sigma does not square to the identity on the module");
}

C2Module direct_sum(const C2Module& a, const C2Module& b) {
  C2Module m;
  m.sigma = block_diagonal(a.action(), b.action());
  m.relations = block_diagonal(a.relation_lattice(), b.relation_lattice());
  m.sign_twist = false;
  return m;
}

void validate(const AffineCoefficient& a) {
  const IntMatrix& s = a.lattice.sigma;
  const std::size_t n = s.rows();
  if (a.translation_lift.size() != n)
    throw DimensionMismatch("translation lift has wrong length");
  const IntMatrix act = a.lattice.action();
  for (std::size_t i = 0; i < n; ++i) {
    Rational v = a.translation_lift[i];
    for (std::size_t j = 0; j < n; ++j) v += Rational(act(i, j)) * a.translation_lift[j];
    v.canonicalize();
    if (v.get_den() != 1)
      throw NotAnInvolution("t + sigma(t) is not a lattice vector");
  }
}

FGAbelianGroup cohomology(const C2Module& m, int k) {
  if (k < 0) throw std::invalid_argument("cohomology degree must be >= 0");
  validate(m);
  const std::size_t n = m.generator_count();
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix s = m.action();
  const IntMatrix rel = m.relation_lattice();
  const IntMatrix one_minus = id - s;
  const IntMatrix one_plus = id + s;

  if (k == 0) return subquotient(preimage(one_minus, rel), rel);
  const bool even = k % 2 == 0;
  const IntMatrix& cocycle_map = even ? one_minus : one_plus;
  const IntMatrix& boundary_map = even ? one_plus : one_minus;
  return subquotient(preimage(cocycle_map, rel), boundary_map.hconcat(rel));
}

FGAbelianGroup cohomology_torus_coeff(const TorusCoefficient& t, int k) {
  if (k == 0)
    throw DegreeZeroUnsupported(
        "H^0 with torus coefficients is not finitely generated");
  if (k < 0) throw std::invalid_argument("cohomology degree must be >= 0");
  if (!cokernel(t.lattice.relation_lattice()).torsion.empty())
    throw NotAModule("torus coefficients need a torsion-free lattice");
  return cohomology(t.lattice, k + 1);
}

AffineH2 affine_h2(const AffineCoefficient& a) {
  validate(a.lattice);
  validate(a);
  const std::size_t n = a.lattice.generator_count();
  const IntMatrix s_dual = a.lattice.action().transpose();
  const IntMatrix id = IntMatrix::identity(n);

  // Common denominator q of the lift; T = q t is integral and u is stored as
  // w / (2q) with w taken modulo 2q.
  BigInt q = 1;
  for (Rational x : a.translation_lift) {
    x.canonicalize();
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), x.get_den().get_mpz_t());
  }
  IntVector scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational v = a.translation_lift[i] * Rational(q);
    v.canonicalize();
    scaled[i] = v.get_num();
  }
  const BigInt two_q = 2 * q;

  // Ambient Z^{n+1} with coordinates (lambda, w). The numerator is cut out by
  // (1 + s^T) lambda = 0 and w + T.lambda = 0 (mod q).
  IntMatrix conditions(n + 1, n + 1);
  const IntMatrix one_plus = id + s_dual;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) conditions(i, j) = one_plus(i, j);
  for (std::size_t j = 0; j < n; ++j) conditions(n, j) = scaled[j];
  conditions(n, n) = 1;
  IntMatrix modulus(n + 1, 1);
  modulus(n, 0) = q;
  const IntMatrix numerator = preimage(conditions, modulus);

  // Denominator: (a - s^T a, -2 T.a) for a = e_j, plus u = 1.
  IntMatrix denominator(n + 1, n + 1);
  const IntMatrix one_minus = id - s_dual;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) denominator(i, j) = one_minus(i, j);
    denominator(n, j) = -2 * scaled[j];
  }
  denominator(n, n) = two_q;

  SubquotientPresentation pres = subquotient_presentation(numerator, denominator);
  AffineH2 out;
  out.group = pres.group;
  for (const auto& g : pres.generators) {
    AffineClassRep rep;
    rep.lambda.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
    BigInt w;
    mpz_fdiv_r(w.get_mpz_t(), g[n].get_mpz_t(), two_q.get_mpz_t());
    rep.u = Rational(w, two_q);
    rep.u.canonicalize();
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

namespace {

// Multiplication by alpha + beta g on Z[C2] in the basis {1, g}.
struct GroupRingElement {
  long alpha;
  long beta;
};

// x_k for the boundary P_k -> P_{k-1}: 1 - g for odd k, 1 + g for even k.
GroupRingElement resolution_boundary(int k) {
  return k % 2 == 1 ? GroupRingElement{1, -1} : GroupRingElement{1, 1};
}

// Precomposition f -> f o x on Hom_Z(Z[C2], M) = M^2 in coordinates
// (f(1), f(g)): f'(1) = alpha f(1) + beta f(g), f'(g) = beta f(1) + alpha f(g).
IntMatrix precompose(GroupRingElement x, std::size_t n) {
  IntMatrix d(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = x.alpha;
    d(i, n + i) = x.beta;
    d(n + i, i) = x.beta;
    d(n + i, n + i) = x.alpha;
  }
  return d;
}

}  // namespace

FGAbelianGroup cohomology_oracle(const C2Module& m, int k) {
  if (k < 0) throw std::invalid_argument("cohomology degree must be >= 0");
  validate(m);
  const std::size_t n = m.generator_count();
  const IntMatrix s = m.action();
  const IntMatrix rel = m.relation_lattice();
  const IntMatrix rel2 = block_diagonal(rel, rel);

  // Equivariance f(g) = s f(1) modulo relations.
  IntMatrix equivariance(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) equivariance(i, j) = -s(i, j);
    equivariance(i, n + i) += 1;
  }
  const IntMatrix cochains = preimage(equivariance, rel);

  // Cocycles: equivariant f with f o x_{k+1} = 0 in M^2.
  const IntMatrix d_k = precompose(resolution_boundary(k + 1), n);
  const IntMatrix cocycle_conditions = d_k.vconcat(equivariance);
  const IntMatrix cocycle_targets = block_diagonal(rel2, rel);
  const IntMatrix cocycles = preimage(cocycle_conditions, cocycle_targets);

  IntMatrix coboundaries = rel2;
  if (k >= 1) {
    const IntMatrix d_prev = precompose(resolution_boundary(k), n);
    coboundaries = (d_prev * cochains).hconcat(rel2);
  }
  return subquotient(cocycles, coboundaries);
}

}  // namespace krtorus
