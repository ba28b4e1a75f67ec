#ifndef EFFSPEC_TESTS_GENERATORS_HPP
#define EFFSPEC_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "effspec/matrix.hpp"
#include "effspec/spectral.hpp"

namespace effspec::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Entries in [lo, hi], each zeroed with probability zero_prob.
inline Matrix random_nonnegative(std::size_t n, Rng& rng, double zero_prob = 0.0, double lo = 0.0,
                                 double hi = 1.0) {
  Matrix m(n);
  std::bernoulli_distribution zero(zero_prob);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, zero(rng) ? 0.0 : uniform(rng, lo, hi));
  return m;
}

inline Matrix random_positive(std::size_t n, Rng& rng, double lo = 0.1, double hi = 1.0) {
  return random_nonnegative(n, rng, 0.0, lo, hi);
}

inline Matrix random_signed(std::size_t n, Rng& rng, double scale = 1.0) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, uniform(rng, -scale, scale));
  return m;
}

inline Matrix random_rect(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, uniform(rng, -1.0, 1.0));
  return m;
}

inline std::vector<double> random_vector(std::size_t n, Rng& rng, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(rng, lo, hi);
  return v;
}

inline EtaVector random_eta(std::size_t n, Rng& rng, double lo = 0.0, double hi = 2.0) {
  return EtaVector(random_vector(n, rng, lo, hi));
}

/// D K D^-1 for D = Diag(d).
inline Matrix similarity(const Matrix& k, const std::vector<double>& d) {
  std::vector<double> inv(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) inv[i] = 1.0 / d[i];
  return scale_columns(scale_rows(k, d), inv);
}

/// Block matrix [[A, v b^T], [c w^T, B]] with alpha = {0..m-1}, then the
/// indices shuffled by a random permutation when `shuffle` is set. Entries
/// are nonnegative when `nonnegative` is set.
struct ClanInstance {
  Matrix k;
  std::vector<std::size_t> alpha;  // 0-based members of the planted clan
};

inline ClanInstance planted_clan(std::size_t n, std::size_t m, Rng& rng, bool nonnegative,
                                 bool shuffle) {
  const double lo = nonnegative ? 0.1 : -1.0;
  const auto v = random_vector(m, rng, lo, 1.0);
  const auto w = random_vector(m, rng, lo, 1.0);
  const auto b = random_vector(n - m, rng, lo, 1.0);
  const auto c = random_vector(n - m, rng, lo, 1.0);
  Matrix block(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double x;
      if (i < m && j < m) x = uniform(rng, lo, 1.0);
      else if (i >= m && j >= m) x = uniform(rng, lo, 1.0);
      else if (i < m) x = v[i] * b[j - m];
      else x = c[i - m] * w[j];
      block.set(i, j, x);
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (shuffle) std::shuffle(perm.begin(), perm.end(), rng);
  // new index perm[i] holds old index i
  Matrix k(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k.set(perm[i], perm[j], block(i, j));
  std::vector<std::size_t> alpha;
  for (std::size_t i = 0; i < m; ++i) alpha.push_back(perm[i]);
  std::sort(alpha.begin(), alpha.end());
  return {k, alpha};
}

}  // namespace effspec::testing

#endif  // EFFSPEC_TESTS_GENERATORS_HPP
