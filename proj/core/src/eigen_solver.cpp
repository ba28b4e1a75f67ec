// Nonsymmetric eigenvalues.
//
// The zero pattern is first split into strongly connected components: after a
// symmetric permutation the matrix is block upper triangular with those
// components on the diagonal, so the spectrum is the union of the diagonal
// block spectra. Each block is then balanced by powers of two and handed to
// Eigen's Hessenberg + Francis double-shift QR.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "effspec/error.hpp"
#include "effspec/matrix.hpp"
#include "graph.hpp"

namespace effspec {

namespace {

void balance(Eigen::MatrixXd& a) {
  constexpr double kRadix = 2.0;
  constexpr double kRadixSq = kRadix * kRadix;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / kRadix;
      while (c < g) {
        f *= kRadix;
        c *= kRadixSq;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kRadixSq;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

void block_eigenvalues(const Matrix& m, const std::vector<std::size_t>& block,
                       std::vector<Complex>& out) {
  const auto k = static_cast<Eigen::Index>(block.size());
  if (k == 1) {
    out.emplace_back(m(block[0], block[0]), 0.0);
    return;
  }
  Eigen::MatrixXd a(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) a(i, j) = m(block[i], block[j]);
  balance(a);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigenvalue iteration did not converge for a block of size " +
                         std::to_string(k));
  const auto& ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!std::isfinite(ev[i].real()) || !std::isfinite(ev[i].imag()))
      throw NumericalError("eigenvalue iteration produced a non-finite value");
    out.push_back(ev[i]);
  }
}

}  // namespace

std::vector<Complex> eigenvalues(const Matrix& m) {
  const std::size_t n = m.dim();
  const auto adjacency =
      detail::pattern_adjacency(n, [&](std::size_t i, std::size_t j) { return m(i, j); }, 0.0);

  std::vector<Complex> out;
  out.reserve(n);
  for (const auto& block : detail::strong_components(adjacency)) block_eigenvalues(m, block, out);

  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

}  // namespace effspec
