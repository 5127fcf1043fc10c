#include "cyclecert/bfs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cyclecert {

std::vector<Vertex> BfsLayering::ball(int max_layer) const {
  std::vector<Vertex> out;
  int top = std::min<int>(max_layer, computed_depth());
  for (int i = 0; i <= top; ++i)
    out.insert(out.end(), layers[i].begin(), layers[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

BfsLayering bfs_layers(const EdgeColouring& ec, Colour c, Vertex v,
                       int depth_cap) {
  return bfs_layers(ec, c, v, depth_cap,
                    std::vector<char>(static_cast<std::size_t>(ec.size()), 1));
}

BfsLayering bfs_layers(const EdgeColouring& ec, Colour c, Vertex v,
                       int depth_cap, const std::vector<char>& alive) {
  const int n = ec.size();
  if (v < 0 || v >= n) throw InputError("bfs root out of range");
  if (static_cast<int>(alive.size()) != n)
    throw InputError("bfs alive mask size mismatch");
  if (!alive[v]) throw InputError("bfs root is not alive");
  if (depth_cap < 0) throw InputError("bfs depth cap must be >= 0");

  BfsLayering out;
  out.root = v;
  out.colour = c;
  out.parent.assign(static_cast<std::size_t>(n), -1);
  out.depth.assign(static_cast<std::size_t>(n), -1);
  out.depth[v] = 0;
  out.layers.push_back({v});

  // Expanding frontiers in vertex order makes the parent of every reached
  // vertex the smallest-index candidate in the previous layer.
  std::vector<Vertex> frontier{v};
  while (!frontier.empty() &&
         static_cast<int>(out.layers.size()) <= depth_cap) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex w = 0; w < n; ++w) {
        if (!alive[w] || out.depth[w] >= 0 || w == u) continue;
        if (ec.colour(u, w) != c) continue;
        out.depth[w] = static_cast<int>(out.layers.size());
        out.parent[w] = u;
        next.push_back(w);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.layers.push_back(next);
    frontier = std::move(next);
  }

  for (Vertex w = 0; w < n; ++w)
    if (alive[w] && out.depth[w] < 0) out.unreached.push_back(w);
  return out;
}

std::optional<WithinLayerEdge> find_within_layer_edge(
    const EdgeColouring& ec, const BfsLayering& layering, int max_layer) {
  int top = std::min<int>(max_layer, layering.computed_depth());
  for (int j = 1; j <= top; ++j) {
    const auto& layer = layering.layers[j];
    for (std::size_t i = 0; i < layer.size(); ++i)
      for (std::size_t l = i + 1; l < layer.size(); ++l)
        if (ec.colour(layer[i], layer[l]) == layering.colour)
          return WithinLayerEdge{j, layer[i], layer[l]};
  }
  return std::nullopt;
}

OddCycleCertificate extract_odd_cycle(const EdgeColouring& ec,
                                      const BfsLayering& layering, int layer,
                                      Vertex x, Vertex y) {
  if (layer < 1 || layer > layering.computed_depth())
    throw InputError("odd cycle extraction: layer out of range");
  if (layering.depth[x] != layer || layering.depth[y] != layer)
    throw InputError("odd cycle extraction: endpoints not in the layer");
  if (x == y || ec.colour(x, y) != layering.colour)
    throw InputError("odd cycle extraction: witness edge has wrong colour");

  auto chain = [&](Vertex from) {
    std::vector<Vertex> path{from};
    while (layering.parent[path.back()] >= 0)
      path.push_back(layering.parent[path.back()]);
    return path;  // from -> root, length layer+1
  };
  std::vector<Vertex> px = chain(x);
  std::vector<Vertex> py = chain(y);

  // Deepest common ancestor: the chains agree on a suffix ending at the
  // root; cut both at its start.
  std::size_t common = 0;
  while (common + 1 < px.size() &&
         px[px.size() - 2 - common] == py[py.size() - 2 - common])
    ++common;
  std::size_t keep = px.size() - common;  // x .. ancestor inclusive

  OddCycleCertificate cert;
  cert.colour = layering.colour;
  for (std::size_t i = 0; i < keep; ++i) cert.cycle.push_back(px[i]);
  for (std::size_t i = keep - 1; i-- > 0;) cert.cycle.push_back(py[i]);
  std::reverse(cert.cycle.begin(), cert.cycle.end());
  return cert;
}

std::variant<Bipartition, WithinLayerEdge> parity_partition(
    const EdgeColouring& ec, const BfsLayering& layering, int max_layer) {
  if (auto witness = find_within_layer_edge(ec, layering, max_layer))
    return *witness;
  Bipartition parts;
  int top = std::min<int>(max_layer, layering.computed_depth());
  for (int i = 0; i <= top; ++i) {
    auto& side = (i % 2 == 0) ? parts.even : parts.odd;
    side.insert(side.end(), layering.layers[i].begin(),
                layering.layers[i].end());
  }
  std::sort(parts.even.begin(), parts.even.end());
  std::sort(parts.odd.begin(), parts.odd.end());
  // With no within-layer edge, properness could only fail on an edge
  // skipping a layer, which BFS layering rules out.
  for (int i = 0; i + 2 <= top; ++i)
    for (Vertex u : layering.layers[i])
      for (int j = i + 2; j <= top; j += 2)
        for (Vertex w : layering.layers[j])
          if (ec.colour(u, w) == layering.colour)
            throw std::logic_error("bfs layering admits a layer-skipping edge");
  return parts;
}

std::string save_certificate(const OddCycleCertificate& cert) {
  std::ostringstream out;
  out << "cycle " << cert.colour << " " << cert.cycle.size();
  for (Vertex v : cert.cycle) out << " " << v;
  out << "\n";
  return out.str();
}

OddCycleCertificate load_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  long long c = 0, len = 0;
  if (!(in >> magic >> c >> len) || magic != "cycle")
    throw InputError("certificate: expected `cycle <c> <L> v_0 ...`");
  if (len < 3 || len % 2 == 0)
    throw InputError("certificate: length must be odd and >= 3");
  OddCycleCertificate cert;
  cert.colour = static_cast<Colour>(c);
  for (long long i = 0; i < len; ++i) {
    long long v = 0;
    if (!(in >> v)) throw InputError("certificate: truncated vertex list");
    cert.cycle.push_back(static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw InputError("certificate: trailing data");
  return cert;
}

}  // namespace cyclecert
