#include "krtorus/zlinalg.hpp"

#include <algorithm>
#include <sstream>

#include "krtorus/errors.hpp"

namespace krtorus {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  std::span<const IntVector> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols,
                              std::span<const BigInt> diag) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i)
    m(i, i) = diag[i];
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::column_range(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw DimensionMismatch("hconcat row count");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& other) const {
  if (cols_ != other.cols_) throw DimensionMismatch("vconcat column count");
  IntMatrix m(rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = other(i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const BigInt& v) { return sgn(v) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix sum");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix difference");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.entries_) v = -v;
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
  IntVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SNFResult::rank() const {
  return static_cast<std::size_t>(std::count_if(
      d.begin(), d.end(), [](const BigInt& x) { return sgn(x) != 0; }));
}

namespace {

// Working state for the reduction. Row operations are mirrored into `left`
// and (inversely) into `left_inv`; column operations into `right`.
class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& a)
      : d_(a),
        left_(IntMatrix::identity(a.rows())),
        left_inv_(IntMatrix::identity(a.rows())),
        right_(IntMatrix::identity(a.cols())) {}

  SNFResult run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    while (t < steps) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      if (!eliminate(t)) continue;
      if (fix_divisibility(t)) continue;
      if (sgn(d_(t, t)) < 0) negate_row(t);
      ++t;
    }
    SNFResult out;
    out.d.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) out.d[i] = d_(i, i);
    out.left = std::move(left_);
    out.right = std::move(right_);
    out.left_inverse = std::move(left_inv_);
    return out;
  }

 private:
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        const BigInt& v = d_(i, j);
        if (sgn(v) == 0) continue;
        BigInt av = abs(v);
        if (!found || av < best) {
          found = true;
          best = av;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  // Clears column t below and row t right of the pivot by truncated division.
  // Returns false if a nonzero remainder survived (pivot must be re-chosen).
  bool eliminate(std::size_t t) {
    bool clean = true;
    const BigInt pivot = d_(t, t);
    for (std::size_t i = t + 1; i < d_.rows(); ++i) {
      if (sgn(d_(i, t)) == 0) continue;
      BigInt q = d_(i, t) / pivot;
      if (sgn(q) != 0) add_row(i, t, -q);
      if (sgn(d_(i, t)) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < d_.cols(); ++j) {
      if (sgn(d_(t, j)) == 0) continue;
      BigInt q = d_(t, j) / pivot;
      if (sgn(q) != 0) add_col(j, t, -q);
      if (sgn(d_(t, j)) != 0) clean = false;
    }
    return clean;
  }

  // If some remaining entry is not a multiple of the pivot, fold its row into
  // row t so the next elimination pass produces a smaller remainder.
  bool fix_divisibility(std::size_t t) {
    const BigInt& pivot = d_(t, t);
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (sgn(d_(i, j)) == 0) continue;
        if (!mpz_divisible_p(d_(i, j).get_mpz_t(), pivot.get_mpz_t())) {
          add_row(t, i, BigInt(1));
          return true;
        }
      }
    return false;
  }

  void add_row(std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(dst, j) += c * d_(src, j);
    for (std::size_t j = 0; j < left_.cols(); ++j)
      left_(dst, j) += c * left_(src, j);
    for (std::size_t i = 0; i < left_inv_.rows(); ++i)
      left_inv_(i, src) -= c * left_inv_(i, dst);
  }

  void add_col(std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, dst) += c * d_(i, src);
    for (std::size_t i = 0; i < right_.rows(); ++i)
      right_(i, dst) += c * right_(i, src);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < left_.cols(); ++j)
      std::swap(left_(a, j), left_(b, j));
    for (std::size_t i = 0; i < left_inv_.rows(); ++i)
      std::swap(left_inv_(i, a), left_inv_(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < right_.rows(); ++i)
      std::swap(right_(i, a), right_(i, b));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    for (std::size_t j = 0; j < left_.cols(); ++j) left_(r, j) = -left_(r, j);
    for (std::size_t i = 0; i < left_inv_.rows(); ++i)
      left_inv_(i, r) = -left_inv_(i, r);
  }

  IntMatrix d_;
  IntMatrix left_;
  IntMatrix left_inv_;
  IntMatrix right_;
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) { return SnfWorker(a).run(); }

// ---------------------------------------------------------------------------
// Abelian groups

FGAbelianGroup FGAbelianGroup::cyclic(long order) {
  BigInt o(order);
  return from_cyclic_orders(std::span<const BigInt>(&o, 1));
}

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(std::span<const BigInt> orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  return cokernel(diag);
}

BigInt FGAbelianGroup::order() const {
  BigInt o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<BigInt> orders;
  orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  FGAbelianGroup g = FGAbelianGroup::from_cyclic_orders(orders);
  g.free_rank = a.free_rank + b.free_rank;
  return g;
}

FGAbelianGroup cokernel(const IntMatrix& a) {
  SNFResult snf = smith_normal_form(a);
  FGAbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto& x : snf.d) {
    if (sgn(x) == 0) continue;
    ++nonzero;
    if (x > 1) g.torsion.push_back(x);
  }
  g.free_rank = a.rows() - nonzero;
  return g;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SNFResult snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  return snf.right.column_range(r, a.cols() - r);
}

namespace {

// Columns of left_inverse * diag(d) that are nonzero: a basis of the column
// lattice of the matrix whose SNF was taken.
IntMatrix basis_from_snf(const SNFResult& snf, std::size_t rows) {
  const std::size_t r = snf.rank();
  IntMatrix basis(rows, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < rows; ++i)
      basis(i, k) = snf.left_inverse(i, k) * snf.d[k];
  return basis;
}

// Coordinates of v in the basis produced by basis_from_snf, or false if v is
// not in the lattice.
bool coordinates_in(const SNFResult& snf, const IntVector& v, IntVector& coords) {
  IntVector w = snf.left * v;
  const std::size_t r = snf.rank();
  coords.assign(r, BigInt(0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(w[i].get_mpz_t(), snf.d[i].get_mpz_t())) return false;
      coords[i] = w[i] / snf.d[i];
    } else if (sgn(w[i]) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

SubquotientPresentation subquotient_presentation(const IntMatrix& num_gens,
                                                 const IntMatrix& den_gens) {
  const std::size_t ambient = num_gens.rows();
  if (den_gens.cols() > 0 && den_gens.rows() != ambient)
    throw DimensionMismatch("subquotient: ambient dimensions differ");

  SNFResult num_snf = smith_normal_form(num_gens);
  const std::size_t r = num_snf.rank();
  IntMatrix num_basis = basis_from_snf(num_snf, ambient);

  IntMatrix coords(r, den_gens.cols());
  IntVector c;
  for (std::size_t j = 0; j < den_gens.cols(); ++j) {
    if (!coordinates_in(num_snf, den_gens.column(j), c))
      throw DenominatorNotContained("denominator generator " + std::to_string(j) +
                                    " is not in the numerator lattice");
    for (std::size_t i = 0; i < r; ++i) coords(i, j) = c[i];
  }

  // Z^r / im(coords) with generators left_inverse columns of its SNF.
  SNFResult q = smith_normal_form(coords);
  SubquotientPresentation out;
  std::vector<std::size_t> torsion_idx;
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < r; ++i) {
    BigInt di = i < q.d.size() ? q.d[i] : BigInt(0);
    if (sgn(di) == 0) {
      free_idx.push_back(i);
    } else if (di > 1) {
      torsion_idx.push_back(i);
      out.group.torsion.push_back(di);
    }
  }
  out.group.free_rank = free_idx.size();

  auto lift = [&](std::size_t i) {
    IntVector coord(r);
    for (std::size_t k = 0; k < r; ++k) coord[k] = q.left_inverse(k, i);
    return num_basis * coord;
  };
  for (auto i : torsion_idx) out.generators.push_back(lift(i));
  for (auto i : free_idx) out.generators.push_back(lift(i));
  return out;
}

FGAbelianGroup subquotient(const IntMatrix& num_gens, const IntMatrix& den_gens) {
  return subquotient_presentation(num_gens, den_gens).group;
}

IntMatrix preimage(const IntMatrix& a, const IntMatrix& lattice_gens) {
  if (lattice_gens.cols() > 0 && lattice_gens.rows() != a.rows())
    throw DimensionMismatch("preimage: target dimensions differ");
  const std::size_t n = a.cols();
  if (lattice_gens.cols() == 0) return kernel_basis(a);
  IntMatrix k = kernel_basis(a.hconcat(lattice_gens));
  return k.row_range(0, n);
}

IntMatrix lattice_basis(const IntMatrix& gens) {
  return basis_from_snf(smith_normal_form(gens), gens.rows());
}

bool in_lattice(const IntVector& v, const IntMatrix& gens) {
  if (gens.cols() == 0) {
    return std::all_of(v.begin(), v.end(),
                       [](const BigInt& x) { return sgn(x) == 0; });
  }
  if (gens.rows() != v.size()) throw DimensionMismatch("in_lattice");
  IntVector coords;
  return coordinates_in(smith_normal_form(gens), v, coords);
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss elimination.
  IntMatrix m = a;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace krtorus
