#include "effspec/structure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "effspec/error.hpp"
#include "graph.hpp"

namespace effspec {

Digraph::Digraph(std::size_t n) : heads_(n) {}

void Digraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= heads_.size() || to >= heads_.size()) throw DimensionError("vertex out of range");
  auto& h = heads_[from];
  const auto it = std::lower_bound(h.begin(), h.end(), to);
  if (it == h.end() || *it != to) h.insert(it, to);
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
  const auto& h = heads_.at(from);
  return std::binary_search(h.begin(), h.end(), to);
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < heads_.size(); ++i)
    for (std::size_t j : heads_[i]) e.emplace_back(i, j);
  return e;
}

bool Digraph::is_strongly_connected() const {
  return detail::strong_components(heads_).size() == 1;
}

std::size_t Partition::block_of(std::size_t i) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].contains(i)) return b;
  throw DimensionError("index " + std::to_string(i + 1) + " is not covered by the partition");
}

double floating_pattern_tolerance(const Matrix& k) { return 1e-12 * k.max_abs(); }

Digraph adjacency_digraph(const Matrix& k, double pattern_tol) {
  const std::size_t n = k.dim();
  Digraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(k(i, j)) > pattern_tol) g.add_edge(i, j);
  return g;
}

bool is_irreducible(const Matrix& k, double pattern_tol) {
  return adjacency_digraph(k, pattern_tol).is_strongly_connected();
}

Partition atoms(const Matrix& k, double pattern_tol) {
  const std::size_t n = k.dim();
  const auto adjacency = detail::pattern_adjacency(
      n, [&](std::size_t i, std::size_t j) { return k(i, j); }, pattern_tol);
  Partition p;
  for (auto& comp : detail::strong_components(adjacency)) p.blocks.emplace_back(std::move(comp), n);
  return p;
}

namespace {

std::vector<std::size_t> atom_labels(const Matrix& k, double pattern_tol) {
  const Partition p = atoms(k, pattern_tol);
  std::vector<std::size_t> label(k.dim());
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (std::size_t i : p.blocks[b].members()) label[i] = b;
  return label;
}

}  // namespace

Matrix atomic_part(const Matrix& k, double pattern_tol) {
  const std::size_t n = k.dim();
  const auto label = atom_labels(k, pattern_tol);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (label[i] == label[j]) a.set(i, j, k(i, j));
  return a;
}

bool is_completely_reducible(const Matrix& k, double pattern_tol) {
  const std::size_t n = k.dim();
  const auto label = atom_labels(k, pattern_tol);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (label[i] != label[j] && std::abs(k(i, j)) > pattern_tol) return false;
  return true;
}

std::optional<SimilarityWitness> diagonal_similarity_witness(const Matrix& k, const Matrix& k2,
                                                             double tol, double pattern_tol) {
  const std::size_t n = k.dim();
  if (k2.dim() != n) throw DimensionError("diagonal similarity: dimensions differ");

  const auto nonzero = [pattern_tol](double x) { return std::abs(x) > pattern_tol; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (nonzero(k(i, j)) != nonzero(k2(i, j))) return std::nullopt;

  // K_ij d_j = d_i K~_ij on every pattern edge.
  std::vector<double> d(n, 0.0);
  std::vector<std::size_t> component(n, n);
  std::size_t components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] != n) continue;
    component[root] = components;
    d[root] = 1.0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (component[j] != n) continue;
        if (nonzero(k(i, j))) {
          d[j] = d[i] * k2(i, j) / k(i, j);
        } else if (nonzero(k(j, i))) {
          d[j] = d[i] * k(j, i) / k2(j, i);
        } else {
          continue;
        }
        component[j] = components;
        queue.push_back(j);
      }
    }
    ++components;
  }

  std::vector<double> largest(components, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    largest[component[i]] = std::max(largest[component[i]], std::abs(d[i]));
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(d[i]) || d[i] == 0.0 || !(largest[component[i]] > 0.0)) return std::nullopt;
    d[i] /= largest[component[i]];
  }

  SimilarityWitness w;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double lhs = k(i, j) * d[j];
      const double rhs = d[i] * k2(i, j);
      const double scale = std::max(std::abs(lhs), std::abs(rhs));
      if (scale == 0.0) continue;
      w.residual = std::max(w.residual, std::abs(lhs - rhs) / scale);
    }
  }
  if (!(w.residual <= tol)) return std::nullopt;
  w.d = std::move(d);
  return w;
}

}  // namespace effspec
