#include "cyclecert/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace cyclecert {

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0) throw InputError("graph size must be non-negative");
  words_ = (n + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loops are not allowed");
  if (adjacent(u, v)) return;
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  ++m_;
}

int SimpleGraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += std::popcount(rows_[static_cast<std::size_t>(v) * words_ + w]);
  return d;
}

std::vector<int> SimpleGraph::neighbours(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = rows_[static_cast<std::size_t>(v) * words_ + w];
    while (bits) {
      int bit = std::countr_zero(bits);
      out.push_back(w * 64 + bit);
      bits &= bits - 1;
    }
  }
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& verts) const {
  SimpleGraph sub(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    check_vertex(verts[i]);
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (verts[i] == verts[j]) throw InputError("duplicate vertex in induced set");
      if (adjacent(verts[i], verts[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return sub;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbours(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::cycle(int n) {
  SimpleGraph g(n);
  if (n >= 3)
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);        // outer 5-cycle
    g.add_edge(i, i + 5);              // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

std::vector<int> bfs_distances(const SimpleGraph& g, int root) {
  std::vector<int> dist(g.size(), -1);
  dist[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbours(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.size(), -1);
  for (int s = 0; s < g.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbours(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string save_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph " << g.size() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

SimpleGraph load_graph(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  int n = -1, m = -1;
  if (!(in >> magic >> n >> m) || magic != "graph")
    throw InputError("graph file: expected header `graph <n> <m>`");
  if (n < 0 || m < 0) throw InputError("graph file: negative counts");
  SimpleGraph g(n);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw InputError("graph file: truncated edge list");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("graph file: edge endpoint out of range");
    if (u == v) throw InputError("graph file: self-loop");
    if (g.adjacent(u, v)) throw InputError("graph file: duplicate edge");
    g.add_edge(u, v);
  }
  std::string rest;
  if (in >> rest) throw InputError("graph file: trailing data");
  return g;
}

}  // namespace cyclecert
