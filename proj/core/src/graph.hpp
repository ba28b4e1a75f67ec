#ifndef EFFSPEC_SRC_GRAPH_HPP
#define EFFSPEC_SRC_GRAPH_HPP

#include <cstddef>
#include <vector>

namespace effspec::detail {

/// adjacency[i] lists the heads j of the edges i -> j.
using AdjacencyList = std::vector<std::vector<std::size_t>>;

/// Strongly connected components (Tarjan, iterative). Members of each
/// component are sorted; components are ordered by their smallest member.
std::vector<std::vector<std::size_t>> strong_components(const AdjacencyList& adjacency);

/// Edge i -> j whenever |m_ij| > pattern_tol, for a row-major n x n buffer.
template <class Entry>
AdjacencyList pattern_adjacency(std::size_t n, Entry&& entry, double pattern_tol) {
  AdjacencyList adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = entry(i, j);
      if ((v < 0 ? -v : v) > pattern_tol) adj[i].push_back(j);
    }
  return adj;
}

}  // namespace effspec::detail

#endif  // EFFSPEC_SRC_GRAPH_HPP
