#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cyclecert/bfs.hpp"
#include "cyclecert/chromatic.hpp"
#include "cyclecert/colouring.hpp"
#include "cyclecert/common.hpp"
#include "cyclecert/weights.hpp"

namespace cyclecert {

enum class DescentMode { Generic, Theorem1, Theorem2 };

std::string mode_name(DescentMode mode);
DescentMode mode_from_name(const std::string& name);

/// One deletion step: with v, c and layer index i chosen, S = N_c^{<=i}(v)
/// and T = N_c^{i+1}(v) in the current induced colouring, kept is the
/// max-weight class S' of a chi-colouring of the colour-c subgraph on S,
/// and T u (S \ S') is deleted. Weights are totals over the whole current
/// graph, before and after the deletion.
struct DescentStep {
  Vertex v = 0;
  Colour c = 0;
  int layer = 0;                    // i
  std::vector<Vertex> ball;         // S, sorted
  std::vector<Vertex> next_layer;   // T, sorted
  std::vector<Vertex> kept;         // S', sorted
  WeightValue weight_before, weight_after;
};

/// Why a descent stopped early. WithinLayerEdge (theorem-2 mode): layers[j]
/// of the (v, c) layering spans a colour-c edge {x, y}. ChromaticThreshold
/// (theorem-1 and generic modes): the recorded vertex set needs more than
/// `threshold` colours; layer = -1 means the whole ball S (generic mode).
struct Violation {
  enum class Kind { WithinLayerEdge, ChromaticThreshold };

  Kind kind = Kind::WithinLayerEdge;
  Vertex v = 0;
  Colour c = 0;
  int chosen_layer = 0;  // i
  int layer = 0;         // j; -1 = whole ball
  Vertex x = -1, y = -1;
  std::vector<Vertex> vertex_set;
  int threshold = 0;
};

/// Verifiable record of a full descent run over one colouring.
struct DescentTrace {
  int n = 0;
  int k = 0;
  int ell = 0;
  int chi = 0;
  DescentMode mode = DescentMode::Generic;
  std::vector<DescentStep> steps;
  bool completed = false;
  std::optional<Violation> violation;
};

struct DescentLimits {
  int solver_limit = kDefaultSolverLimit;
  long search_budget = 20'000'000;  // DFS nodes for fixed-length cycle search
};

/// Total weight of the induced sub-colouring on {u : alive[u]}, along with
/// the per-vertex weights (dead vertices get weight zero).
std::vector<WeightValue> weights_within(const EdgeColouring& ec,
                                        const std::vector<char>& alive,
                                        const WeightContext& ctx);

/// The colour incident to v (within the alive set) maximizing the exact
/// weight of N_c(v); ties to the smallest colour id. Asserts the pigeonhole
/// inequality k * w(N_c(v)) >= w(alive \ {v}).
Colour choose_colour(const EdgeColouring& ec, const std::vector<char>& alive,
                     const WeightContext& ctx, Vertex v);

/// Smallest i in [1, ell] with w(N_c^{i+1}(v)) <= (k^{1/ell}-1) * w(N_c^{<=i}(v)).
/// Existence is a consequence of the colour choice; absence is an internal
/// soundness bug and throws std::logic_error.
int choose_layer(const EdgeColouring& ec, const std::vector<char>& alive,
                 const WeightContext& ctx, Vertex v, Colour c);

/// Runs the full deletion procedure. chi is forced to 2 in Theorem2 mode
/// and to 4*ell-2 in Theorem1 mode; Generic mode uses the given chi with
/// the exact solver. Deterministic: smallest alive vertex, then
/// choose_colour / choose_layer, canonical class selection.
DescentTrace descend(const EdgeColouring& ec, int ell, int chi,
                     DescentMode mode, const DescentLimits& limits = {});

struct ExtractionResult {
  OddCycleCertificate certificate;
  int ell = 0;             // layer depth the run used
  bool degenerate = false; // theorem-2 formula degenerated (k = 1 clamp)
  DescentTrace trace;
};

/// Theorem-2 extraction: requires b > 2 and n > b^k for k = locality(ec);
/// runs a theorem-2 descent with ell = max(1, ceil(log_{b/2} k)) and turns
/// the guaranteed within-layer violation into a monochromatic odd cycle of
/// length <= 2*ell+1.
ExtractionResult extract_theorem2(const EdgeColouring& ec, const mpq_class& b,
                                  const DescentLimits& limits = {});

/// Theorem-1 extraction: requires n > (4*ell-2)^k * k^{k/ell}; runs a
/// theorem-1 descent and, at the guaranteed chromatic-threshold violation,
/// finds a monochromatic cycle of length exactly 2*ell+1 by bounded search
/// (first inside N_c^{<=i}(v), then over the whole colour class).
ExtractionResult extract_theorem1(const EdgeColouring& ec, int ell,
                                  const DescentLimits& limits = {});

/// Independent re-validation of every proof obligation in a trace against
/// the colouring it refers to: layer sets, the colour-choice and layer
/// inequalities, class independence and the pigeonhole bound, recomputed
/// weight totals, per-step weight monotonicity, nonempty deletions, and
/// the final weight / size bound for completed traces (the violation
/// witness for violation traces).
VerifyResult verify_trace(const DescentTrace& trace, const EdgeColouring& ec,
                          const DescentLimits& limits = {});

/// Line-oriented trace format; see load_trace.
std::string save_trace(const DescentTrace& trace);

/// Parses: header `trace <n> <k> <l> <chi> <mode>`; per step
/// `step <v> <c> <i> S=<list> T=<list> Sp=<list> w_before=<poly> w_after=<poly>`
/// with comma-separated lists (`-` when empty) and `<poly>` as in the
/// weight debug rendering; terminator `outcome completed` or
/// `outcome violation <kind> ...`.
DescentTrace load_trace(const std::string& text);

}  // namespace cyclecert
