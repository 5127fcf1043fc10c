#pragma once

#include <optional>
#include <vector>

#include "cyclecert/bfs.hpp"
#include "cyclecert/chromatic.hpp"
#include "cyclecert/colouring.hpp"
#include "cyclecert/common.hpp"
#include "cyclecert/graph.hpp"

namespace cyclecert {

/// Explicit budgets for the exhaustive oracles. Exceeding one raises
/// BudgetError rather than degrading to a partial answer.
struct OracleBudget {
  int max_vertices = 14;
  long max_nodes = 5'000'000;
};

/// Accepts iff the cycle vertices are in range and pairwise distinct, the
/// count is odd and >= 3, and every cyclic pair is an edge of the
/// certificate's colour.
VerifyResult verify_certificate(const EdgeColouring& ec,
                                const OddCycleCertificate& cert);

/// A shortest monochromatic odd cycle of length <= max_len, or nullopt.
/// Exhaustive per colour class via odd-girth BFS from every root; ties are
/// broken towards the smallest colour id.
std::optional<OddCycleCertificate> find_mono_odd_cycle(
    const EdgeColouring& ec, int max_len, const OracleBudget& budget = {});

/// A simple cycle of exactly `length` vertices, or nullopt. Exhaustive DFS
/// with canonical start-vertex pruning and a node budget.
std::optional<std::vector<int>> has_cycle_of_length(
    const SimpleGraph& g, int length, const OracleBudget& budget = {});

struct EfrsReport {
  enum class Verdict { Accept, PreconditionFailed, Counterexample };

  Verdict verdict = Verdict::Accept;
  // PreconditionFailed: the (2*ell+1)-cycle that disqualifies the input.
  std::vector<int> found_cycle;
  // Counterexample: a distance layer needing more than 2*ell-1 colours.
  // This would contradict the classical bound, so it flags a solver or
  // cycle-oracle bug rather than a property of the input.
  int v = -1;
  int layer = -1;
  std::vector<int> layer_set;
};

/// For a C_{2*ell+1}-free graph, checks chi(G[N^i(v)]) <= 2*ell-1 for every
/// vertex v and every i in [1, ell] with the exact solver.
EfrsReport efrs_check(const SimpleGraph& g, int ell,
                      const OracleBudget& budget = {},
                      int solver_limit = kDefaultSolverLimit);

}  // namespace cyclecert
