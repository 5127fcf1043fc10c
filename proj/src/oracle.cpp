#include "cyclecert/oracle.hpp"

#include <algorithm>

namespace cyclecert {

namespace {

void check_vertex_budget(int n, const OracleBudget& budget,
                         const char* which) {
  if (n > budget.max_vertices)
    throw BudgetError(std::string(which) + ": " + std::to_string(n) +
                      " vertices exceed the budget of " +
                      std::to_string(budget.max_vertices));
}

}  // namespace

VerifyResult verify_certificate(const EdgeColouring& ec,
                                const OddCycleCertificate& cert) {
  const int n = ec.size();
  const auto& cyc = cert.cycle;
  if (cyc.size() < 3 || cyc.size() % 2 == 0)
    return VerifyResult::fail("cycle length must be odd and >= 3");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : cyc) {
    if (v < 0 || v >= n)
      return VerifyResult::fail("cycle vertex " + std::to_string(v) +
                                " out of range");
    if (seen[v])
      return VerifyResult::fail("cycle vertex " + std::to_string(v) +
                                " repeats");
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    Vertex u = cyc[i];
    Vertex w = cyc[(i + 1) % cyc.size()];
    if (ec.colour(u, w) != cert.colour)
      return VerifyResult::fail(
          "edge {" + std::to_string(u) + "," + std::to_string(w) +
          "} has colour " + std::to_string(ec.colour(u, w)) + ", expected " +
          std::to_string(cert.colour));
  }
  return VerifyResult::ok();
}

std::optional<OddCycleCertificate> find_mono_odd_cycle(
    const EdgeColouring& ec, int max_len, const OracleBudget& budget) {
  check_vertex_budget(ec.size(), budget, "odd cycle oracle");
  if (max_len < 3) return std::nullopt;

  // The odd girth of a graph is min over roots v and edges {x,y} inside a
  // BFS layer j of 2j+1: a shortest odd cycle contributes a within-layer
  // edge from any of its vertices, and every within-layer edge closes an
  // odd cycle of length <= 2j+1 through the layering's tree paths. The
  // smallest candidate therefore extracts at exactly the odd girth.
  std::optional<OddCycleCertificate> best;
  for (Colour c : ec.palette()) {
    for (Vertex root = 0; root < ec.size(); ++root) {
      auto layering = bfs_layers(ec, c, root, ec.size());
      int cap = best ? (best->length() - 1) / 2 : (max_len - 1) / 2;
      auto witness = find_within_layer_edge(ec, layering, cap);
      if (!witness) continue;
      auto cert = extract_odd_cycle(ec, layering, witness->layer, witness->x,
                                    witness->y);
      if (cert.length() > max_len) continue;
      if (!best || cert.length() < best->length()) best = std::move(cert);
    }
  }
  return best;
}

namespace {

class GraphCycleSearch {
public:
  GraphCycleSearch(const SimpleGraph& g, int length, long budget)
      : g_(g), length_(length), budget_(budget) {}

  std::optional<std::vector<int>> run() {
    on_path_.assign(static_cast<std::size_t>(g_.size()), 0);
    for (int s = 0; s < g_.size(); ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = 1;
      if (extend()) return path_;
      on_path_[s] = 0;
    }
    return std::nullopt;
  }

private:
  bool extend() {
    if (--budget_ < 0)
      throw BudgetError("cycle oracle exceeded its node budget");
    if (static_cast<int>(path_.size()) == length_)
      return g_.adjacent(path_.back(), start_);
    for (int u : g_.neighbours(path_.back())) {
      if (u <= start_ || on_path_[u]) continue;
      path_.push_back(u);
      on_path_[u] = 1;
      if (extend()) return true;
      on_path_[u] = 0;
      path_.pop_back();
    }
    return false;
  }

  const SimpleGraph& g_;
  int length_;
  long budget_;
  int start_ = 0;
  std::vector<int> path_;
  std::vector<char> on_path_;
};

}  // namespace

std::optional<std::vector<int>> has_cycle_of_length(
    const SimpleGraph& g, int length, const OracleBudget& budget) {
  if (length < 3) throw InputError("cycle length must be >= 3");
  check_vertex_budget(g.size(), budget, "cycle length oracle");
  return GraphCycleSearch(g, length, budget.max_nodes).run();
}

EfrsReport efrs_check(const SimpleGraph& g, int ell,
                      const OracleBudget& budget, int solver_limit) {
  if (ell < 1) throw InputError("efrs check requires ell >= 1");
  check_vertex_budget(g.size(), budget, "efrs oracle");

  EfrsReport report;
  if (auto cycle = has_cycle_of_length(g, 2 * ell + 1, budget)) {
    report.verdict = EfrsReport::Verdict::PreconditionFailed;
    report.found_cycle = std::move(*cycle);
    return report;
  }
  for (int v = 0; v < g.size(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int i = 1; i <= ell; ++i) {
      std::vector<int> layer;
      for (int u = 0; u < g.size(); ++u)
        if (dist[u] == i) layer.push_back(u);
      if (layer.empty()) break;
      auto chrom = chromatic_number(g.induced(layer), 2 * ell - 1,
                                    solver_limit);
      if (chrom.exceeds_cap) {
        report.verdict = EfrsReport::Verdict::Counterexample;
        report.v = v;
        report.layer = i;
        report.layer_set = std::move(layer);
        return report;
      }
    }
  }
  report.verdict = EfrsReport::Verdict::Accept;
  return report;
}

}  // namespace cyclecert
