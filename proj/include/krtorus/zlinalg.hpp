#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Smith
// normal form, kernels, and finitely generated abelian groups presented as
// quotients of lattices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace krtorus {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows,
                                std::span<const IntVector> columns);
  /// Diagonal matrix of the given size with `diag` on the main diagonal.
  static IntMatrix diagonal(std::size_t rows, std::size_t cols,
                            std::span<const BigInt> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  BigInt& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  /// Columns `first .. first+count-1`.
  IntMatrix column_range(std::size_t first, std::size_t count) const;
  /// Rows `first .. first+count-1`.
  IntMatrix row_range(std::size_t first, std::size_t count) const;
  /// [this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;
  /// [this ; other]; column counts must agree.
  IntMatrix vconcat(const IntMatrix& other) const;

  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Block diagonal matrix diag(a, b).
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

struct SNFResult {
  IntVector d;  // min(rows, cols) entries, nonnegative, d[i] | d[i+1]
  IntMatrix left;
  IntMatrix right;
  IntMatrix left_inverse;

  std::size_t rank() const;
};

/// Computes unimodular `left`, `right` with left * A * right = diag(d).
///
/// Pivots are chosen as the entry of smallest nonzero absolute value in the
/// active submatrix, ties broken by lowest (row, col), so the transforms are
/// deterministic.
SNFResult smith_normal_form(const IntMatrix& a);

/// Z^free_rank + Z/torsion[0] + ... with torsion[i] > 1 and
/// torsion[i] | torsion[i+1].
struct FGAbelianGroup {
  std::size_t free_rank = 0;
  IntVector torsion;

  static FGAbelianGroup trivial() { return {}; }
  static FGAbelianGroup free(std::size_t rank) { return {rank, {}}; }
  static FGAbelianGroup cyclic(long order);
  /// Normalizes an arbitrary list of cyclic orders (0 means infinite).
  static FGAbelianGroup from_cyclic_orders(std::span<const BigInt> orders);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Product of torsion orders; only meaningful when finite.
  BigInt order() const;
  /// Number of Z/2 summands when the group is an F_2-vector space; the
  /// count of torsion factors in general.
  std::size_t torsion_count() const { return torsion.size(); }
  /// Minimal number of generators.
  std::size_t generator_count() const { return free_rank + torsion.size(); }

  /// Human-readable form such as "Z^2 + Z/2 + Z/6", or "0".
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
};

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

/// Z^rows / image(A).
FGAbelianGroup cokernel(const IntMatrix& a);

/// Columns form a basis of {x in Z^cols : A x = 0}. The basis is saturated.
IntMatrix kernel_basis(const IntMatrix& a);

/// A subquotient together with lifts of its canonical generators.
struct SubquotientPresentation {
  FGAbelianGroup group;
  /// One ambient vector per cyclic summand: torsion summands first (in the
  /// order of `group.torsion`), then free summands.
  std::vector<IntVector> generators;
};

/// (column lattice of num_gens) / (column lattice of den_gens). Generating
/// sets need not be independent. Throws DenominatorNotContained if some
/// column of den_gens lies outside the numerator lattice.
FGAbelianGroup subquotient(const IntMatrix& num_gens, const IntMatrix& den_gens);
SubquotientPresentation subquotient_presentation(const IntMatrix& num_gens,
                                                 const IntMatrix& den_gens);

/// Generators of {x in Z^cols : A x in span(lattice_gens)}.
IntMatrix preimage(const IntMatrix& a, const IntMatrix& lattice_gens);

/// A basis (as columns) of the lattice spanned by the given generators.
IntMatrix lattice_basis(const IntMatrix& gens);

/// Whether v lies in the Z-span of the columns of gens.
bool in_lattice(const IntVector& v, const IntMatrix& gens);

/// Determinant by fraction-free elimination (square matrices only).
BigInt determinant(const IntMatrix& a);

}  // namespace krtorus
