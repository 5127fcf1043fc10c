#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclecert/common.hpp"
#include "cyclecert/graph.hpp"

namespace cyclecert {

inline constexpr int kDefaultVertexLimit = 5000;

/// Reads the optional vertex-limit override (CYCLECERT_MAX_VERTICES),
/// falling back to kDefaultVertexLimit.
int configured_vertex_limit();

/// Edge-colouring of a complete graph: every unordered pair {u,v} carries
/// exactly one colour id. The palette is kept normalized to the set of
/// colours that are actually used by at least one edge.
class EdgeColouring {
public:
  /// K_n with every edge coloured `fill`.
  static EdgeColouring complete(int n, Colour fill);

  /// Lower-bound construction on half_length * 2^colours vertices:
  /// disjoint K_{2*half_length} blocks in colour 1, then repeated complete
  /// joins of two copies, one fresh colour per doubling step. Contains no
  /// monochromatic C_{2*half_length+1}.
  static EdgeColouring doubling(int half_length, int colours,
                                int vertex_limit = configured_vertex_limit());

  /// Every edge independently uniform in [1..colours]; reproducible from
  /// the seed (mt19937_64 with rejection sampling, no stdlib distribution).
  static EdgeColouring random(int n, int colours, std::uint64_t seed);

  int size() const { return n_; }

  Colour colour(Vertex u, Vertex v) const {
    check_pair(u, v);
    return edges_[pair_index(u, v)];
  }

  void set_colour(Vertex u, Vertex v, Colour c);

  /// Number of distinct colours on edges at v.
  int colour_degree(Vertex v) const;

  /// Max colour degree over all vertices: the k for which this colouring
  /// is k-local. 0 when there are no edges.
  int locality() const;

  /// Sorted set of colours used by at least one edge.
  std::vector<Colour> palette() const;

  bool uses_colour(Colour c) const { return use_count_.count(c) > 0; }

  /// Colour-c neighbours of v, ascending. O(n).
  std::vector<Vertex> colour_neighbours(Vertex v, Colour c) const;

  /// Subgraph on `vertices` whose edges are exactly the pairs coloured c;
  /// result vertex i corresponds to vertices[i]. Unknown colour gives an
  /// edgeless graph.
  SimpleGraph monochromatic_subgraph(Colour c,
                                     const std::vector<Vertex>& vertices) const;

  std::vector<Vertex> all_vertices() const;

  bool operator==(const EdgeColouring& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  /// Canonical text serialization (see load for the format). Requires all
  /// colour ids to be >= 1.
  std::string save() const;

  /// Parses the text format:
  ///   line 1: `kcol <n> <k>`
  ///   lines 2..n: line for vertex i holds i colour ids, entry j being
  ///   colour{i, j}, ids in [1, k].
  /// The palette is recomputed from the ids actually present; colours the
  /// header declares but no edge uses are dropped.
  static EdgeColouring load(const std::string& text);

private:
  explicit EdgeColouring(int n);

  static std::size_t pair_index_static(Vertex u, Vertex v) {
    if (u < v) std::swap(u, v);
    return static_cast<std::size_t>(u) * (u - 1) / 2 + v;
  }
  std::size_t pair_index(Vertex u, Vertex v) const {
    return pair_index_static(u, v);
  }
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<Colour> edges_;          // lower triangle, row-major
  std::map<Colour, long> use_count_;   // palette with multiplicities
};

}  // namespace cyclecert
