#ifndef EFFSPEC_MATRIX_HPP
#define EFFSPEC_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace effspec {

using Complex = std::complex<double>;

/// Dense row-major real matrix with finite entries.
///
/// Most operations require a square matrix; rectangular shapes exist for the
/// off-diagonal blocks K[alpha, beta] used in rank and clan computations.
class Matrix {
 public:
  /// rows x cols matrix of zeros. Both extents must be positive.
  Matrix(std::size_t rows, std::size_t cols);
  /// n x n matrix of zeros.
  explicit Matrix(std::size_t n) : Matrix(n, n) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Dimension of a square matrix; throws DimensionError otherwise.
  std::size_t dim() const;

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const;
  /// Rejects non-finite values.
  void set(std::size_t i, std::size_t j, double value);

  std::span<const double> data() const noexcept { return data_; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix transposed() const;
  /// Largest absolute entry.
  double max_abs() const noexcept;
  bool is_nonnegative() const noexcept;
  bool is_symmetric(double tol = 0.0) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
/// a * Diag(d)
Matrix scale_columns(const Matrix& a, std::span<const double> d);
/// Diag(d) * a
Matrix scale_rows(const Matrix& a, std::span<const double> d);
/// max_ij |a_ij - b_ij|
double max_abs_difference(const Matrix& a, const Matrix& b);

/// Sorted, duplicate-free subset of {0, ..., n-1}. Printed 1-based.
class IndexSet {
 public:
  IndexSet(std::vector<std::size_t> members, std::size_t n);

  static IndexSet from_mask(std::uint64_t mask, std::size_t n);
  /// Builds from 1-based indices as they appear on the command line.
  static IndexSet from_one_based(const std::vector<std::size_t>& members, std::size_t n);
  static IndexSet all(std::size_t n);

  std::span<const std::size_t> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t ambient() const noexcept { return n_; }
  bool contains(std::size_t i) const;
  std::uint64_t mask() const;
  IndexSet complement() const;
  /// "{1,3}"
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> members_;
  std::size_t n_;
};

/// Coefficient vector, index k holding the coefficient of t^k.
class Polynomial {
 public:
  explicit Polynomial(std::vector<double> coefficients);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  double coefficient(std::size_t k) const { return coeffs_.at(k); }
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  Complex evaluate(Complex t) const;

 private:
  std::vector<double> coeffs_;
};

Matrix submatrix(const Matrix& m, const IndexSet& rows, const IndexSet& cols);
Matrix principal_submatrix(const Matrix& m, const IndexSet& alpha);

/// Determinant by LU with partial pivoting. A zero pivot column gives exactly 0.
double determinant(const Matrix& m);

/// det(K - t I) = sum_k (-1)^k c_{n-k} t^k, computed by the Faddeev-LeVerrier
/// trace recursion.
Polynomial characteristic_polynomial(const Matrix& m);

/// Same polynomial assembled directly from sums of principal minors of each
/// size. Exponential in n; refuses above `cap`.
Polynomial characteristic_polynomial_from_minors(const Matrix& m, std::size_t cap = 20);

/// All n eigenvalues with multiplicity, sorted by decreasing real part then
/// decreasing imaginary part. Throws NumericalError if the QR iteration fails.
std::vector<Complex> eigenvalues(const Matrix& m);

double spectral_radius(const Matrix& m);

double principal_minor(const Matrix& m, const IndexSet& alpha);

/// Number of pivots exceeding rel_tol * max_abs(m) under complete pivoting.
std::size_t numerical_rank(const Matrix& m, double rel_tol = 1e-9);
bool rank_at_most(const Matrix& m, std::size_t r, double rel_tol = 1e-9);

/// |a - b| <= tol * max(1, |a|, |b|)
bool close_mixed(double a, double b, double tol) noexcept;

}  // namespace effspec

#endif  // EFFSPEC_MATRIX_HPP
