#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclecert/colouring.hpp"
#include "cyclecert/common.hpp"

namespace cyclecert {

/// Colour-distance layers around a root: layers[i] is the set of vertices
/// whose shortest path of colour `colour` from the root has length exactly
/// i, with one BFS-tree parent per reached non-root vertex. `unreached`
/// holds the universe vertices not in any computed layer (disconnected in
/// this colour, or beyond the depth cap).
struct BfsLayering {
  Vertex root = 0;
  Colour colour = 0;
  std::vector<std::vector<Vertex>> layers;  // layers[0] = {root}; sorted
  std::vector<Vertex> parent;               // indexed by vertex, -1 if none
  std::vector<int> depth;                   // indexed by vertex, -1 unreached
  std::vector<Vertex> unreached;            // sorted

  int computed_depth() const { return static_cast<int>(layers.size()) - 1; }
  bool reached(Vertex v) const { return depth[v] >= 0; }

  /// Union of layers[0..max_layer], sorted.
  std::vector<Vertex> ball(int max_layer) const;
};

/// BFS in the colour-c subgraph, layers up to min(depth_cap, eccentricity).
/// Parent choice is deterministic: smallest-index eligible parent.
BfsLayering bfs_layers(const EdgeColouring& ec, Colour c, Vertex v,
                       int depth_cap);

/// Same, restricted to the induced sub-colouring on {u : alive[u]};
/// alive[v] must hold.
BfsLayering bfs_layers(const EdgeColouring& ec, Colour c, Vertex v,
                       int depth_cap, const std::vector<char>& alive);

struct WithinLayerEdge {
  int layer = 0;  // j
  Vertex x = 0, y = 0;
};

/// Smallest j in [1, max_layer] such that layers[j] spans an edge of the
/// layering's colour, with the lexicographically least witness edge.
std::optional<WithinLayerEdge> find_within_layer_edge(
    const EdgeColouring& ec, const BfsLayering& layering, int max_layer);

/// Monochromatic odd cycle: `cycle` lists pairwise-distinct vertices, odd
/// count >= 3, consecutive pairs (cyclically) all coloured `colour`.
struct OddCycleCertificate {
  Colour colour = 0;
  std::vector<Vertex> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
};

/// Given an edge {x,y} inside layers[j], walks both parent chains to their
/// deepest common vertex and closes the cycle over {x,y}: odd length
/// 2(j-d)+1 <= 2j+1 with all edges in the layering's colour.
OddCycleCertificate extract_odd_cycle(const EdgeColouring& ec,
                                      const BfsLayering& layering, int layer,
                                      Vertex x, Vertex y);

struct Bipartition {
  std::vector<Vertex> even, odd;  // by layer parity, sorted
};

/// For the ball N^{<=max_layer}: either a proper 2-partition of the
/// colour-c subgraph by layer parity, or the within-layer witness that
/// makes one impossible. Also asserts the BFS property that colour-c edges
/// inside the ball never skip a layer.
std::variant<Bipartition, WithinLayerEdge> parity_partition(
    const EdgeColouring& ec, const BfsLayering& layering, int max_layer);

/// One line: `cycle <c> <L> v_0 v_1 ... v_{L-1}`.
std::string save_certificate(const OddCycleCertificate& cert);
OddCycleCertificate load_certificate(const std::string& text);

}  // namespace cyclecert
