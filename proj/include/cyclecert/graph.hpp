#pragma once

#include <cstdint>
#include <vector>

#include "cyclecert/common.hpp"

namespace cyclecert {

/// Undirected simple graph over vertices 0..n-1 with bitset adjacency rows.
class SimpleGraph {
public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int size() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) &
           1u;
  }

  int degree(int v) const;
  std::vector<int> neighbours(int v) const;  // ascending

  /// Induced subgraph; vertex i of the result is verts[i].
  SimpleGraph induced(const std::vector<int>& verts) const;

  /// All edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  static SimpleGraph cycle(int n);
  static SimpleGraph complete(int n);
  static SimpleGraph petersen();

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;  // n_ rows of words_ words each
};

/// Plain-BFS distances from root, -1 for unreachable.
std::vector<int> bfs_distances(const SimpleGraph& g, int root);

/// 2-colourability check; empty result means non-bipartite.
bool is_bipartite(const SimpleGraph& g);

/// Edge-list file format: header `graph <n> <m>`, then m lines `u v`.
std::string save_graph(const SimpleGraph& g);
SimpleGraph load_graph(const std::string& text);

}  // namespace cyclecert
