#include "cyclecert/colouring.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace cyclecert {

int configured_vertex_limit() {
  if (const char* env = std::getenv("CYCLECERT_MAX_VERTICES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return kDefaultVertexLimit;
}

EdgeColouring::EdgeColouring(int n) : n_(n) {
  if (n < 1) throw InputError("colouring needs at least one vertex");
  edges_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

void EdgeColouring::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw InputError("vertex out of range [0, " + std::to_string(n_) + ")");
  if (u == v) throw InputError("self-pairs carry no colour");
}

EdgeColouring EdgeColouring::complete(int n, Colour fill) {
  EdgeColouring ec(n);
  std::fill(ec.edges_.begin(), ec.edges_.end(), fill);
  if (!ec.edges_.empty()) ec.use_count_[fill] = static_cast<long>(ec.edges_.size());
  return ec;
}

EdgeColouring EdgeColouring::doubling(int half_length, int colours,
                                      int vertex_limit) {
  if (half_length < 1) throw InputError("doubling: half cycle length must be >= 1");
  if (colours < 1) throw InputError("doubling: colour count must be >= 1");
  // n = half_length * 2^colours, guarded against blowup.
  long long n = half_length;
  for (int j = 0; j < colours; ++j) {
    n *= 2;
    if (n > vertex_limit)
      throw InputError("doubling: " + std::to_string(half_length) + "*2^" +
                       std::to_string(colours) + " exceeds vertex limit " +
                       std::to_string(vertex_limit));
  }
  EdgeColouring ec(static_cast<int>(n));
  const int block = 2 * half_length;  // colour-1 cliques K_{2*half_length}
  for (Vertex u = 1; u < ec.n_; ++u) {
    for (Vertex v = 0; v < u; ++v) {
      int bu = u / block, bv = v / block;
      Colour c;
      if (bu == bv) {
        c = 1;
      } else {
        // Blocks first diverge at the highest differing bit h of their
        // indices; that join was made at doubling step h+1.
        int h = std::bit_width(static_cast<unsigned>(bu ^ bv)) - 1;
        c = h + 2;
      }
      ec.edges_[ec.pair_index(u, v)] = c;
      ++ec.use_count_[c];
    }
  }
  return ec;
}

EdgeColouring EdgeColouring::random(int n, int colours, std::uint64_t seed) {
  if (n < 1) throw InputError("random: vertex count must be >= 1");
  if (colours < 1) throw InputError("random: colour count must be >= 1");
  EdgeColouring ec(n);
  std::mt19937_64 rng(seed);
  // Rejection sampling keeps the draw unbiased and independent of any
  // library distribution implementation.
  const std::uint64_t k = static_cast<std::uint64_t>(colours);
  const std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % k;
  for (Vertex u = 1; u < n; ++u) {
    for (Vertex v = 0; v < u; ++v) {
      std::uint64_t x;
      do {
        x = rng();
      } while (x >= bound);
      Colour c = static_cast<Colour>(1 + x % k);
      ec.edges_[ec.pair_index(u, v)] = c;
      ++ec.use_count_[c];
    }
  }
  return ec;
}

void EdgeColouring::set_colour(Vertex u, Vertex v, Colour c) {
  check_pair(u, v);
  Colour old = edges_[pair_index(u, v)];
  if (old == c) return;
  auto it = use_count_.find(old);
  if (it != use_count_.end() && --it->second == 0) use_count_.erase(it);
  edges_[pair_index(u, v)] = c;
  ++use_count_[c];
}

int EdgeColouring::colour_degree(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex out of range [0, " + std::to_string(n_) + ")");
  std::vector<Colour> seen;
  for (Vertex u = 0; u < n_; ++u) {
    if (u == v) continue;
    seen.push_back(edges_[pair_index(u, v)]);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return static_cast<int>(seen.size());
}

int EdgeColouring::locality() const {
  int k = 0;
  for (Vertex v = 0; v < n_; ++v) k = std::max(k, colour_degree(v));
  return k;
}

std::vector<Colour> EdgeColouring::palette() const {
  std::vector<Colour> out;
  out.reserve(use_count_.size());
  for (const auto& [c, cnt] : use_count_) out.push_back(c);
  return out;  // std::map keeps them sorted
}

std::vector<Vertex> EdgeColouring::colour_neighbours(Vertex v, Colour c) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex out of range [0, " + std::to_string(n_) + ")");
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u)
    if (u != v && edges_[pair_index(u, v)] == c) out.push_back(u);
  return out;
}

SimpleGraph EdgeColouring::monochromatic_subgraph(
    Colour c, const std::vector<Vertex>& vertices) const {
  SimpleGraph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      check_pair(vertices[i], vertices[j]);
      if (edges_[pair_index(vertices[i], vertices[j])] == c)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

std::vector<Vertex> EdgeColouring::all_vertices() const {
  std::vector<Vertex> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = i;
  return out;
}

std::string EdgeColouring::save() const {
  Colour max_id = 0;
  for (const auto& [c, cnt] : use_count_) {
    if (c < 1)
      throw InputError("save: colour ids must be >= 1 (found " +
                       std::to_string(c) + ")");
    max_id = std::max(max_id, c);
  }
  std::ostringstream out;
  out << "kcol " << n_ << " " << max_id << "\n";
  for (Vertex u = 1; u < n_; ++u) {
    for (Vertex v = 0; v < u; ++v) {
      if (v) out << " ";
      out << edges_[pair_index(u, v)];
    }
    out << "\n";
  }
  return out.str();
}

EdgeColouring EdgeColouring::load(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw InputError("kcol file: empty input");
  std::istringstream head(header);
  std::string magic;
  int n = 0, k = -1;
  if (!(head >> magic >> n >> k) || magic != "kcol")
    throw InputError("kcol file: expected header `kcol <n> <k>`");
  std::string extra;
  if (head >> extra) throw InputError("kcol file: trailing data in header");
  if (n < 1) throw InputError("kcol file: vertex count must be >= 1");
  if (k < 0) throw InputError("kcol file: negative colour count");

  EdgeColouring ec(n);
  for (Vertex u = 1; u < n; ++u) {
    std::string line;
    if (!std::getline(in, line))
      throw InputError("kcol file: truncated matrix at vertex " +
                       std::to_string(u));
    std::istringstream row(line);
    for (Vertex v = 0; v < u; ++v) {
      Colour c;
      if (!(row >> c))
        throw InputError("kcol file: row for vertex " + std::to_string(u) +
                         " has fewer than " + std::to_string(u) + " entries");
      if (c < 1 || c > k)
        throw InputError("kcol file: colour " + std::to_string(c) +
                         " outside declared palette [1, " + std::to_string(k) +
                         "]");
      ec.edges_[ec.pair_index(u, v)] = c;
      ++ec.use_count_[c];
    }
    std::string excess;
    if (row >> excess)
      throw InputError("kcol file: row for vertex " + std::to_string(u) +
                       " has more than " + std::to_string(u) +
                       " entries (self-loop or stray data)");
  }
  std::string tail;
  while (std::getline(in, tail)) {
    if (!tail.empty() && tail.find_first_not_of(" \t\r") != std::string::npos)
      throw InputError("kcol file: trailing data after matrix");
  }
  return ec;
}

}  // namespace cyclecert
