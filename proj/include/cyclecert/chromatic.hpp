#pragma once

#include <optional>
#include <vector>

#include "cyclecert/common.hpp"
#include "cyclecert/graph.hpp"
#include "cyclecert/weights.hpp"

namespace cyclecert {

inline constexpr int kDefaultSolverLimit = 64;

/// Partition of a graph's vertices into independent sets.
struct ProperColouring {
  std::vector<std::vector<int>> classes;  // nonempty, disjoint, cover V
  int width() const { return static_cast<int>(classes.size()); }
};

struct ChromaticResult {
  bool exceeds_cap = false;
  int value = 0;  // exact chromatic number when !exceeds_cap

  static ChromaticResult exact(int v) { return {false, v}; }
  static ChromaticResult over_cap() { return {true, 0}; }
};

/// Exact chromatic number if it is <= cap, otherwise an "exceeds cap"
/// verdict. Branch and bound over vertices in descending-degree order with
/// a greedy clique lower bound and greedy upper bound. Empty graph -> 0,
/// edgeless nonempty -> 1.
ChromaticResult chromatic_number(const SimpleGraph& g, int cap,
                                 int solver_limit = kDefaultSolverLimit);

/// A proper colouring with at most max_classes classes, or nullopt if none
/// exists. Deterministic: fixed vertex order, first feasible assignment.
std::optional<ProperColouring> proper_colouring(
    const SimpleGraph& g, int max_classes,
    int solver_limit = kDefaultSolverLimit);

/// Validates the ProperColouring contract against g.
bool is_proper_colouring(const SimpleGraph& g, const ProperColouring& pc);

/// The class with maximum total weight under exact comparison; ties go to
/// the smallest class index. weights is indexed by graph-local vertex id.
std::vector<int> max_weight_class(const ProperColouring& pc,
                                  const std::vector<WeightValue>& weights);

}  // namespace cyclecert
