#pragma once

// Cohomology of the two-element group C2 with coefficients in finitely
// generated abelian groups with involution.

#include <vector>

#include "krtorus/zlinalg.hpp"

namespace krtorus {

/// A finitely generated abelian group Z^n / span(relations) together with an
/// involution given on generators. When `sign_twist` is set the module is
/// M (x) Z_-, i.e. the acting matrix is -sigma.
struct C2Module {
  IntMatrix relations;  // n x r, columns span the relation lattice
  IntMatrix sigma;      // n x n
  bool sign_twist = false;

  std::size_t generator_count() const { return sigma.rows(); }
  /// The matrix by which the nontrivial element acts, with the twist applied.
  IntMatrix action() const { return sign_twist ? -sigma : sigma; }
  /// Relation matrix with the right number of rows even when empty.
  IntMatrix relation_lattice() const;

  /// Free module Z^n with the given involution.
  static C2Module lattice(IntMatrix sigma, bool sign_twist = false);
  static C2Module trivial_z() { return lattice(IntMatrix{{1}}); }
  static C2Module cyclotomic() { return lattice(IntMatrix{{-1}}); }
  static C2Module regular() { return lattice(IntMatrix{{0, 1}, {1, 0}}); }
};

/// Throws NotAModule unless sigma preserves the relations and squares to the
/// identity on the quotient.
void validate(const C2Module& m);

C2Module direct_sum(const C2Module& a, const C2Module& b);

/// Coefficients T = V / Lambda for a torsion-free lattice Lambda.
struct TorusCoefficient {
  C2Module lattice;
};

/// The affine-function module of a Real affine torus: lattice with involution
/// and a rational lift t of the translation, t + sigma(t) integral.
struct AffineCoefficient {
  C2Module lattice;
  RationalVector translation_lift;
};

/// H^k(C2; M). H^0 is the fixed submodule; for k >= 1 the groups are
/// 2-periodic: ker(1-s)/im(1+s) in even degree, ker(1+s)/im(1-s) in odd.
FGAbelianGroup cohomology(const C2Module& m, int k);

/// H^k(C2; T) = H^{k+1}(C2; Lambda) for k >= 1, since V is uniquely
/// divisible. Degree 0 throws DegreeZeroUnsupported.
FGAbelianGroup cohomology_torus_coeff(const TorusCoefficient& t, int k);

/// A class (lambda, u) with lambda in the dual lattice and u in Q/Z, u
/// normalized to [0, 1).
struct AffineClassRep {
  IntVector lambda;
  Rational u;

  friend bool operator==(const AffineClassRep&, const AffineClassRep&) = default;
};

struct AffineH2 {
  FGAbelianGroup group;
  /// One representative per cyclic summand of `group`, in the same order as
  /// its torsion list.
  std::vector<AffineClassRep> representatives;
};

/// {(lambda, u) : sigma^T lambda = -lambda, 2u = -lambda(t)} modulo
/// {(a - sigma^T a, -a(t))}, computed exactly.
AffineH2 affine_h2(const AffineCoefficient& a);

/// Reference computation of H^k(C2; M) from the 2-periodic free resolution
/// of Z over Z[C2], with cochains Hom_{C2}(Z[C2], M) realized inside M^2.
FGAbelianGroup cohomology_oracle(const C2Module& m, int k);

/// Validates that t + sigma(t) is integral. Throws NotAnInvolution otherwise.
void validate(const AffineCoefficient& a);

}  // namespace krtorus
