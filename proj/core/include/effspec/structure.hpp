#ifndef EFFSPEC_STRUCTURE_HPP
#define EFFSPEC_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "effspec/matrix.hpp"

namespace effspec {

/// Zero-pattern graph: edge (i, j) iff |K_ij| > pattern tolerance. Self-loops allowed.
class Digraph {
 public:
  explicit Digraph(std::size_t n);

  std::size_t vertex_count() const noexcept { return heads_.size(); }
  void add_edge(std::size_t from, std::size_t to);
  bool has_edge(std::size_t from, std::size_t to) const;
  std::span<const std::size_t> successors(std::size_t v) const { return heads_.at(v); }
  /// Sorted (from, to) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  bool is_strongly_connected() const;

 private:
  std::vector<std::vector<std::size_t>> heads_;
};

/// Disjoint blocks covering {0..n-1}, ordered by smallest member.
struct Partition {
  std::vector<IndexSet> blocks;

  /// Index of the block holding i.
  std::size_t block_of(std::size_t i) const;
};

/// Diagonal D = Diag(d) with K = D K~ D^-1.
struct SimilarityWitness {
  std::vector<double> d;
  /// Largest per-entry relative mismatch |K_ij d_j - d_i K~_ij| / max(|K_ij d_j|, |d_i K~_ij|).
  double residual = 0.0;
};

/// 1e-12 * max|K_ij|, for matrices that came out of floating-point arithmetic.
double floating_pattern_tolerance(const Matrix& k);

Digraph adjacency_digraph(const Matrix& k, double pattern_tol = 0.0);

/// Strongly connected zero pattern. Every 1x1 matrix is irreducible.
bool is_irreducible(const Matrix& k, double pattern_tol = 0.0);

/// Maximal irreducible index sets: the strongly connected components.
Partition atoms(const Matrix& k, double pattern_tol = 0.0);

/// K with every entry linking two different atoms set to zero.
Matrix atomic_part(const Matrix& k, double pattern_tol = 0.0);

/// K equals its atomic part up to the pattern tolerance.
bool is_completely_reducible(const Matrix& k, double pattern_tol = 0.0);

/// Looks for a nonsingular diagonal D with K = D K~ D^-1.
///
/// The zero patterns must coincide. d is fixed to 1 at the smallest vertex of
/// each weakly connected component, propagated along a breadth-first spanning
/// forest of the undirected pattern, then checked on every entry. Each
/// component is rescaled so that its largest |d_i| is 1 with a positive root,
/// which makes d positive whenever both matrices are nonnegative.
std::optional<SimilarityWitness> diagonal_similarity_witness(const Matrix& k, const Matrix& k2,
                                                             double tol = 1e-9,
                                                             double pattern_tol = 0.0);

}  // namespace effspec

#endif  // EFFSPEC_STRUCTURE_HPP
