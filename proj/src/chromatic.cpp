#include "cyclecert/chromatic.hpp"

#include <algorithm>
#include <numeric>

namespace cyclecert {

namespace {

// Vertices by descending degree, ties by ascending id.
std::vector<int> degree_order(const SimpleGraph& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
    return g.degree(u) > g.degree(v);
  });
  return order;
}

// Greedy clique along the given order: seed with the first vertex, add any
// later vertex adjacent to everything collected so far.
std::vector<int> greedy_clique(const SimpleGraph& g,
                               const std::vector<int>& order) {
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return clique;
}

// First-fit colouring along the order; returns per-vertex colour ids.
std::vector<int> greedy_colouring(const SimpleGraph& g,
                                  const std::vector<int>& order) {
  const int n = g.size();
  std::vector<int> colour(n, -1);
  std::vector<char> taken;
  for (int v : order) {
    taken.assign(n, 0);
    for (int u : g.neighbours(v))
      if (colour[u] >= 0) taken[colour[u]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    colour[v] = c;
  }
  return colour;
}

struct Feasibility {
  const SimpleGraph& g;
  const std::vector<int>& order;
  int target;
  std::vector<int> colour;

  bool assign(std::size_t pos, int max_used) {
    while (pos < order.size() && colour[order[pos]] >= 0) ++pos;
    if (pos == order.size()) return true;
    int v = order[pos];
    std::vector<char> taken(static_cast<std::size_t>(target), 0);
    for (int u : g.neighbours(v))
      if (colour[u] >= 0) taken[colour[u]] = 1;
    int limit = std::min(max_used + 1, target - 1);
    for (int c = 0; c <= limit; ++c) {
      if (taken[c]) continue;
      colour[v] = c;
      if (assign(pos + 1, std::max(max_used, c))) return true;
      colour[v] = -1;
    }
    return false;
  }
};

// Exact t-colourability. The greedy clique is precoloured with distinct
// colours (any proper colouring can be permuted to agree), and new colours
// are introduced in increasing order, so the search space is cut without
// losing completeness. Deterministic first-feasible assignment.
std::optional<std::vector<int>> colour_with(const SimpleGraph& g,
                                            const std::vector<int>& order,
                                            const std::vector<int>& clique,
                                            int target) {
  if (static_cast<int>(clique.size()) > target) return std::nullopt;
  Feasibility search{g, order, target, std::vector<int>(g.size(), -1)};
  for (std::size_t i = 0; i < clique.size(); ++i)
    search.colour[clique[i]] = static_cast<int>(i);
  int max_used = static_cast<int>(clique.size()) - 1;
  if (!search.assign(0, max_used)) return std::nullopt;
  return search.colour;
}

void check_size(const SimpleGraph& g, int solver_limit) {
  if (g.size() > solver_limit)
    throw SolverLimitError("exact colouring limited to " +
                           std::to_string(solver_limit) + " vertices, got " +
                           std::to_string(g.size()));
}

int greedy_width(const std::vector<int>& colour) {
  int w = 0;
  for (int c : colour) w = std::max(w, c + 1);
  return w;
}

ProperColouring classes_from(const std::vector<int>& colour, int width) {
  ProperColouring pc;
  pc.classes.assign(static_cast<std::size_t>(width), {});
  for (std::size_t v = 0; v < colour.size(); ++v)
    pc.classes[colour[v]].push_back(static_cast<int>(v));
  return pc;
}

}  // namespace

ChromaticResult chromatic_number(const SimpleGraph& g, int cap,
                                 int solver_limit) {
  check_size(g, solver_limit);
  if (g.size() == 0) return cap >= 0 ? ChromaticResult::exact(0)
                                     : ChromaticResult::over_cap();
  auto order = degree_order(g);
  auto clique = greedy_clique(g, order);
  int lb = static_cast<int>(clique.size());
  int ub = greedy_width(greedy_colouring(g, order));
  for (int t = lb; t <= cap; ++t) {
    if (t >= ub) return ChromaticResult::exact(t);
    if (colour_with(g, order, clique, t)) return ChromaticResult::exact(t);
  }
  return ChromaticResult::over_cap();
}

std::optional<ProperColouring> proper_colouring(const SimpleGraph& g,
                                                int max_classes,
                                                int solver_limit) {
  check_size(g, solver_limit);
  if (g.size() == 0) {
    if (max_classes < 0) return std::nullopt;
    return ProperColouring{};
  }
  auto order = degree_order(g);
  auto clique = greedy_clique(g, order);
  int lb = static_cast<int>(clique.size());
  auto greedy = greedy_colouring(g, order);
  int ub = greedy_width(greedy);
  for (int t = lb; t <= max_classes; ++t) {
    if (t >= ub) return classes_from(greedy, ub);
    if (auto colour = colour_with(g, order, clique, t))
      return classes_from(*colour, t);
  }
  return std::nullopt;
}

bool is_proper_colouring(const SimpleGraph& g, const ProperColouring& pc) {
  const int n = g.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& cls : pc.classes) {
    if (cls.empty()) return false;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      int v = cls[i];
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (g.adjacent(v, cls[j])) return false;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) return false;
  return true;
}

std::vector<int> max_weight_class(const ProperColouring& pc,
                                  const std::vector<WeightValue>& weights) {
  if (pc.classes.empty())
    throw InputError("max_weight_class: empty colouring");
  int best = -1;
  std::optional<WeightValue> best_sum;
  for (std::size_t i = 0; i < pc.classes.size(); ++i) {
    WeightValue sum = WeightValue::zero(weights.at(0).context());
    for (int v : pc.classes[i]) sum = sum + weights.at(v);
    if (best < 0 || compare(sum, *best_sum) == Ordering::Greater) {
      best = static_cast<int>(i);
      best_sum = sum;
    }
  }
  return pc.classes[best];
}

}  // namespace cyclecert
