#include "effspec/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <utility>

#include "effspec/error.hpp"
#include "effspec/minor_table.hpp"

namespace effspec {

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) throw DomainError("matrix entries must be finite");
}

void require_square(const Matrix& m, const char* op) {
  if (!m.is_square()) {
    throw DimensionError(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix extents must be positive");
  data_.assign(rows * cols, 0.0);
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) throw DimensionError("matrix extents must be positive");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw DimensionError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(m.cols_));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

std::size_t Matrix::dim() const {
  require_square(*this, "dim");
  return rows_;
}

double Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return data_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  require_finite(value);
  data_[i * cols_ + j] = value;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool Matrix::is_nonnegative() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return v >= 0.0; });
}

bool Matrix::is_symmetric(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c.set(i, j, s);
    }
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference: shapes differ");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j) - b(i, j));
  return c;
}

Matrix scale_columns(const Matrix& a, std::span<const double> d) {
  if (d.size() != a.cols()) throw DimensionError("column scaling: length mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j) * d[j]);
  return c;
}

Matrix scale_rows(const Matrix& a, std::span<const double> d) {
  if (d.size() != a.rows()) throw DimensionError("row scaling: length mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, d[i] * a(i, j));
  return c;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix comparison: shapes differ");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(std::vector<std::size_t> members, std::size_t n)
    : members_(std::move(members)), n_(n) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw DomainError("index set has duplicate members");
  if (!members_.empty() && members_.back() >= n)
    throw DimensionError("index " + std::to_string(members_.back() + 1) +
                         " out of range for dimension " + std::to_string(n));
}

IndexSet IndexSet::from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < 64 && (mask >> i) != 0; ++i)
    if ((mask >> i) & 1U) m.push_back(i);
  return IndexSet(std::move(m), n);
}

IndexSet IndexSet::from_one_based(const std::vector<std::size_t>& members, std::size_t n) {
  std::vector<std::size_t> m;
  m.reserve(members.size());
  for (std::size_t i : members) {
    if (i == 0 || i > n)
      throw DimensionError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    m.push_back(i - 1);
  }
  return IndexSet(std::move(m), n);
}

IndexSet IndexSet::all(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return IndexSet(std::move(m), n);
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

std::uint64_t IndexSet::mask() const {
  if (n_ > 64) throw DimensionError("index set too large for a bitmask");
  std::uint64_t m = 0;
  for (std::size_t i : members_) m |= std::uint64_t{1} << i;
  return m;
}

IndexSet IndexSet::complement() const {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < n_; ++i)
    if (!contains(i)) m.push_back(i);
  return IndexSet(std::move(m), n_);
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(members_[k] + 1);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw DomainError("polynomial needs at least one coefficient");
}

Complex Polynomial::evaluate(Complex t) const {
  Complex acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
  return acc;
}

// ---------------------------------------------------------------------------
// Submatrices, determinants, characteristic polynomials

Matrix submatrix(const Matrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.ambient() != m.rows() || cols.ambient() != m.cols())
    throw DimensionError("submatrix: index set ambient dimension does not match matrix");
  if (rows.empty() || cols.empty()) throw DimensionError("submatrix: empty selection");
  Matrix s(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      s.set(a, b, m(rows.members()[a], cols.members()[b]));
  return s;
}

Matrix principal_submatrix(const Matrix& m, const IndexSet& alpha) {
  return submatrix(m, alpha, alpha);
}

namespace detail {

// In-place LU on a row-major n x n buffer.
double lu_determinant(std::vector<double>& a, std::size_t n) {
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(a[i * n + k]);
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      det = -det;
    }
    const double pivot = a[k * n + k];
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

}  // namespace detail

double determinant(const Matrix& m) {
  require_square(m, "determinant");
  std::vector<double> a(m.data().begin(), m.data().end());
  return detail::lu_determinant(a, m.rows());
}

Polynomial characteristic_polynomial(const Matrix& m) {
  require_square(m, "characteristic_polynomial");
  const std::size_t n = m.rows();

  // p(t) = det(tI - K) = sum a_k t^k with a_n = 1, via
  //   M_1 = I,  a_{n-k} = -tr(K M_k) / k,  M_{k+1} = K M_k + a_{n-k} I.
  std::vector<double> a(n + 1, 0.0);
  a[n] = 1.0;
  std::vector<double> mk(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) mk[i * n + i] = 1.0;
  std::vector<double> km(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += m(i, l) * mk[l * n + j];
        km[i * n + j] = s;
      }
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += km[i * n + i];
    a[n - k] = -trace / static_cast<double>(k);
    mk = km;
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += a[n - k];
  }

  // det(K - tI) = (-1)^n det(tI - K)
  if (n % 2 == 1)
    for (double& c : a) c = -c;
  return Polynomial(std::move(a));
}

Polynomial characteristic_polynomial_from_minors(const Matrix& m, std::size_t cap) {
  require_square(m, "characteristic_polynomial_from_minors");
  const std::size_t n = m.rows();
  check_subset_cap(n, cap);

  // c_j = sum of principal minors of size j, c_0 = 1.
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  const MinorTable table = all_principal_minors(m, cap);
  const SubsetMask end = SubsetMask{1} << n;
  for (SubsetMask s = 1; s < end; ++s) c[std::popcount(s)] += table.at(s);

  // coefficient of t^k is (-1)^k c_{n-k}
  std::vector<double> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[k] = (k % 2 ? -1.0 : 1.0) * c[n - k];
  return Polynomial(std::move(coeffs));
}

double spectral_radius(const Matrix& m) {
  double r = 0.0;
  for (const Complex& z : eigenvalues(m)) r = std::max(r, std::abs(z));
  return r;
}

double principal_minor(const Matrix& m, const IndexSet& alpha) {
  return determinant(principal_submatrix(m, alpha));
}

// ---------------------------------------------------------------------------
// Rank

std::size_t numerical_rank(const Matrix& m, double rel_tol) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const double threshold = rel_tol * m.max_abs();
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<std::size_t> col_of(cols);
  std::iota(col_of.begin(), col_of.end(), std::size_t{0});

  std::size_t rank = 0;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    // complete pivoting over the trailing block
    std::size_t pi = k;
    std::size_t pj = k;
    double best = -1.0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const double v = std::abs(a[i * cols + j]);
        if (v > best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (!(best > threshold) || best == 0.0) break;
    if (pi != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[k * cols + j], a[pi * cols + j]);
    if (pj != k)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i * cols + k], a[i * cols + pj]);
    ++rank;
    const double pivot = a[k * cols + k];
    for (std::size_t i = k + 1; i < rows; ++i) {
      const double f = a[i * cols + k] / pivot;
      for (std::size_t j = k; j < cols; ++j) a[i * cols + j] -= f * a[k * cols + j];
    }
  }
  return rank;
}

bool rank_at_most(const Matrix& m, std::size_t r, double rel_tol) {
  return numerical_rank(m, rel_tol) <= r;
}

bool close_mixed(double a, double b, double tol) noexcept {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace effspec
