#include "cyclecert/descent.hpp"

#include <algorithm>
#include <sstream>

namespace cyclecert {

namespace {

int effective_k(const EdgeColouring& ec) { return std::max(1, ec.locality()); }

int forced_chi(DescentMode mode, int ell, int chi) {
  switch (mode) {
    case DescentMode::Theorem2:
      return 2;
    case DescentMode::Theorem1:
      return 4 * ell - 2;
    case DescentMode::Generic:
      return chi;
  }
  throw std::logic_error("unknown descent mode");
}

WeightValue weight_sum(const std::vector<WeightValue>& weights,
                       const std::vector<Vertex>& set,
                       const WeightContext& ctx) {
  WeightValue sum = WeightValue::zero(ctx);
  for (Vertex v : set) sum = sum + weights[v];
  return sum;
}

WeightValue total_weight(const std::vector<WeightValue>& weights,
                         const WeightContext& ctx) {
  WeightValue sum = WeightValue::zero(ctx);
  for (const auto& w : weights) sum = sum + w;
  return sum;
}

// Distinct colours on alive edges at v.
std::vector<Colour> alive_palette_at(const EdgeColouring& ec,
                                     const std::vector<char>& alive,
                                     Vertex v) {
  std::vector<Colour> cols;
  for (Vertex u = 0; u < ec.size(); ++u) {
    if (u == v || !alive[u]) continue;
    cols.push_back(ec.colour(u, v));
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

std::vector<Vertex> sorted_difference(const std::vector<Vertex>& a,
                                      const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

std::string mode_name(DescentMode mode) {
  switch (mode) {
    case DescentMode::Generic:
      return "generic";
    case DescentMode::Theorem1:
      return "t1";
    case DescentMode::Theorem2:
      return "t2";
  }
  throw std::logic_error("unknown descent mode");
}

DescentMode mode_from_name(const std::string& name) {
  if (name == "generic") return DescentMode::Generic;
  if (name == "t1") return DescentMode::Theorem1;
  if (name == "t2") return DescentMode::Theorem2;
  throw InputError("unknown descent mode `" + name +
                   "` (expected generic, t1 or t2)");
}

std::vector<WeightValue> weights_within(const EdgeColouring& ec,
                                        const std::vector<char>& alive,
                                        const WeightContext& ctx) {
  const int n = ec.size();
  if (static_cast<int>(alive.size()) != n)
    throw InputError("alive mask size mismatch");
  std::vector<WeightValue> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) {
      out.push_back(WeightValue::zero(ctx));
      continue;
    }
    int d = static_cast<int>(alive_palette_at(ec, alive, v).size());
    out.push_back(vertex_weight(ctx, d));
  }
  return out;
}

Colour choose_colour(const EdgeColouring& ec, const std::vector<char>& alive,
                     const WeightContext& ctx, Vertex v) {
  auto weights = weights_within(ec, alive, ctx);
  std::optional<Colour> best;
  std::optional<WeightValue> best_weight;
  for (Colour c : alive_palette_at(ec, alive, v)) {
    std::vector<Vertex> nbrs;
    for (Vertex u = 0; u < ec.size(); ++u)
      if (u != v && alive[u] && ec.colour(u, v) == c) nbrs.push_back(u);
    WeightValue w = weight_sum(weights, nbrs, ctx);
    if (!best || compare(w, *best_weight) == Ordering::Greater) {
      best = c;
      best_weight = w;
    }
  }
  if (!best) throw InputError("colour choice: vertex has no alive neighbour");
  WeightValue rest = total_weight(weights, ctx) - weights[v];
  if (compare(best_weight->scaled(mpq_class(ctx.k())), rest) == Ordering::Less)
    throw std::logic_error(
        "colour choice lost the pigeonhole inequality; the neighbourhoods "
        "cannot all be below average");
  return *best;
}

int choose_layer(const EdgeColouring& ec, const std::vector<char>& alive,
                 const WeightContext& ctx, Vertex v, Colour c) {
  auto weights = weights_within(ec, alive, ctx);
  auto layering = bfs_layers(ec, c, v, ctx.ell() + 1, alive);
  for (int i = 1; i <= ctx.ell(); ++i) {
    WeightValue ball = weight_sum(weights, layering.ball(i), ctx);
    WeightValue next =
        i + 1 <= layering.computed_depth()
            ? weight_sum(weights, layering.layers[i + 1], ctx)
            : WeightValue::zero(ctx);
    if (compare(next, mul_threshold(ball)) != Ordering::Greater) return i;
  }
  throw std::logic_error(
      "no admissible layer; the telescoping product would exceed the whole "
      "graph's weight");
}

namespace {

// Classes of a proper colouring of the colour-c subgraph on S, as global
// vertex ids, or nullopt if chi classes do not suffice.
std::optional<ProperColouring> classes_on_ball(const EdgeColouring& ec,
                                               Colour c,
                                               const std::vector<Vertex>& ball,
                                               int chi, int solver_limit) {
  SimpleGraph g = ec.monochromatic_subgraph(c, ball);
  auto local = proper_colouring(g, chi, solver_limit);
  if (!local) return std::nullopt;
  ProperColouring global;
  for (const auto& cls : local->classes) {
    std::vector<int> mapped;
    mapped.reserve(cls.size());
    for (int idx : cls) mapped.push_back(ball[idx]);
    global.classes.push_back(std::move(mapped));
  }
  return global;
}

// Theorem-1 class structure: each layer j <= i gets its own proper
// (2*ell-1)-colouring, crossed with layer parity. Consecutive layers differ
// in parity and non-consecutive layers span no colour-c edge, so the
// product is proper with at most 4*ell-2 classes.
struct LayeredClasses {
  std::optional<ProperColouring> classes;  // set when every layer fits
  int failed_layer = -1;                   // else the first layer over cap
};

LayeredClasses classes_by_layer(const EdgeColouring& ec,
                                const BfsLayering& layering, int top,
                                int per_layer_cap, int solver_limit) {
  const std::size_t buckets =
      2 * static_cast<std::size_t>(per_layer_cap);
  std::vector<std::vector<int>> grid(buckets);
  grid[0].push_back(layering.root);
  for (int j = 1; j <= top; ++j) {
    auto layer_classes = classes_on_ball(ec, layering.colour,
                                         layering.layers[j], per_layer_cap,
                                         solver_limit);
    if (!layer_classes) return {std::nullopt, j};
    for (std::size_t m = 0; m < layer_classes->classes.size(); ++m) {
      auto& bucket = grid[(j % 2) * per_layer_cap + m];
      for (int u : layer_classes->classes[m]) bucket.push_back(u);
    }
  }
  ProperColouring out;
  for (auto& bucket : grid)
    if (!bucket.empty()) {
      std::sort(bucket.begin(), bucket.end());
      out.classes.push_back(std::move(bucket));
    }
  return {std::move(out), -1};
}

}  // namespace

DescentTrace descend(const EdgeColouring& ec, int ell, int chi,
                     DescentMode mode, const DescentLimits& limits) {
  const int n = ec.size();
  const int k = effective_k(ec);
  chi = forced_chi(mode, ell, chi);
  WeightContext ctx(k, ell, chi);

  DescentTrace trace{n, k, ell, chi, mode, {}, false, std::nullopt};
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  int alive_count = n;

  while (alive_count > 1) {
    Vertex v = 0;
    while (!alive[v]) ++v;
    Colour c = choose_colour(ec, alive, ctx, v);
    int i = choose_layer(ec, alive, ctx, v, c);

    auto layering = bfs_layers(ec, c, v, i + 1, alive);
    std::vector<Vertex> ball = layering.ball(i);
    std::vector<Vertex> next_layer =
        i + 1 <= layering.computed_depth() ? layering.layers[i + 1]
                                           : std::vector<Vertex>{};

    std::optional<ProperColouring> classes;
    if (mode == DescentMode::Theorem2) {
      auto split = parity_partition(ec, layering, i);
      if (auto* witness = std::get_if<WithinLayerEdge>(&split)) {
        trace.violation =
            Violation{Violation::Kind::WithinLayerEdge, v,          c, i,
                      witness->layer,                   witness->x, witness->y,
                      {},                               chi};
        return trace;
      }
      auto& parts = std::get<Bipartition>(split);
      classes = ProperColouring{{parts.even, parts.odd}};
    } else if (mode == DescentMode::Theorem1) {
      auto layered =
          classes_by_layer(ec, layering, std::min(i, layering.computed_depth()),
                           2 * ell - 1, limits.solver_limit);
      if (!layered.classes) {
        int j = layered.failed_layer;
        trace.violation = Violation{Violation::Kind::ChromaticThreshold,
                                    v,
                                    c,
                                    i,
                                    j,
                                    -1,
                                    -1,
                                    layering.layers[j],
                                    2 * ell - 1};
        return trace;
      }
      classes = std::move(layered.classes);
    } else {
      classes = classes_on_ball(ec, c, ball, chi, limits.solver_limit);
      if (!classes) {
        trace.violation = Violation{
            Violation::Kind::ChromaticThreshold, v, c, i, -1, -1, -1, ball,
            chi};
        return trace;
      }
    }

    auto weights = weights_within(ec, alive, ctx);
    WeightValue before = total_weight(weights, ctx);
    std::vector<Vertex> kept = max_weight_class(*classes, weights);
    std::sort(kept.begin(), kept.end());
    if (compare(weight_sum(weights, kept, ctx).scaled(mpq_class(chi)),
                weight_sum(weights, ball, ctx)) == Ordering::Less)
      throw std::logic_error("kept class lost the pigeonhole inequality");

    std::vector<Vertex> dropped = sorted_difference(ball, kept);
    if (dropped.empty() && next_layer.empty())
      throw std::logic_error(
          "empty deletion; the kept class swallowed a monochromatic edge");
    for (Vertex u : dropped) {
      alive[u] = 0;
      --alive_count;
    }
    for (Vertex u : next_layer) {
      alive[u] = 0;
      --alive_count;
    }

    WeightValue after = total_weight(weights_within(ec, alive, ctx), ctx);
    if (compare(after, before) == Ordering::Less)
      throw std::logic_error("total weight decreased across a deletion step");
    trace.steps.push_back(
        DescentStep{v, c, i, std::move(ball), std::move(next_layer),
                    std::move(kept), std::move(before), std::move(after)});
  }

  trace.completed = true;
  return trace;
}

namespace {

std::vector<char> alive_after(const DescentTrace& trace, int n) {
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (const auto& step : trace.steps) {
    for (Vertex u : sorted_difference(step.ball, step.kept)) alive[u] = 0;
    for (Vertex u : step.next_layer) alive[u] = 0;
  }
  return alive;
}

mpq_class pow_q(const mpq_class& base, int e) {
  mpq_class out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Bounded DFS for a colour-c cycle of exactly `length` vertices among the
// allowed set. Deterministic: ascending start vertex (the cycle minimum),
// ascending extension; each visited path node costs one budget unit.
class FixedLengthCycleSearch {
public:
  FixedLengthCycleSearch(const EdgeColouring& ec, Colour c,
                         const std::vector<char>& allowed, int length,
                         long budget)
      : ec_(ec), c_(c), allowed_(allowed), length_(length), budget_(budget) {}

  std::optional<std::vector<Vertex>> run() {
    const int n = ec_.size();
    path_.clear();
    on_path_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
      if (!allowed_[s]) continue;
      start_ = s;
      path_.push_back(s);
      on_path_[s] = 1;
      if (extend()) return path_;
      on_path_[s] = 0;
      path_.pop_back();
    }
    return std::nullopt;
  }

private:
  bool extend() {
    if (--budget_ < 0)
      throw BudgetError("cycle search exceeded its node budget");
    if (static_cast<int>(path_.size()) == length_)
      return ec_.colour(path_.back(), start_) == c_;
    Vertex tail = path_.back();
    for (Vertex u = start_ + 1; u < ec_.size(); ++u) {
      if (!allowed_[u] || on_path_[u]) continue;
      if (ec_.colour(tail, u) != c_) continue;
      path_.push_back(u);
      on_path_[u] = 1;
      if (extend()) return true;
      on_path_[u] = 0;
      path_.pop_back();
    }
    return false;
  }

  const EdgeColouring& ec_;
  Colour c_;
  const std::vector<char>& allowed_;
  int length_;
  long budget_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
};

}  // namespace

ExtractionResult extract_theorem2(const EdgeColouring& ec, const mpq_class& b,
                                  const DescentLimits& limits) {
  const int n = ec.size();
  const int k = effective_k(ec);
  if (b <= 2) throw InputError("extraction requires b > 2");
  if (mpq_class(n) <= pow_q(b, k))
    throw InputError("extraction requires n > b^k");

  // Smallest t >= 1 with (b/2)^t >= k; t = 0 already works only for k = 1.
  mpq_class half = b / 2;
  int ell = 0;
  mpq_class power(1);
  while (power < k) {
    power *= half;
    ++ell;
  }
  bool degenerate = ell == 0;
  if (degenerate) ell = 1;

  DescentTrace trace = descend(ec, ell, 2, DescentMode::Theorem2, limits);
  if (trace.completed)
    throw std::logic_error(
        "descent completed although the colouring exceeds the size bound");
  const Violation& viol = *trace.violation;
  if (viol.kind != Violation::Kind::WithinLayerEdge)
    throw std::logic_error("theorem-2 descent produced a foreign violation");

  auto alive = alive_after(trace, n);
  auto layering =
      bfs_layers(ec, viol.c, viol.v, viol.chosen_layer + 1, alive);
  OddCycleCertificate cert =
      extract_odd_cycle(ec, layering, viol.layer, viol.x, viol.y);
  return ExtractionResult{std::move(cert), ell, degenerate, std::move(trace)};
}

ExtractionResult extract_theorem1(const EdgeColouring& ec, int ell,
                                  const DescentLimits& limits) {
  const int n = ec.size();
  const int k = effective_k(ec);
  if (ell < 1) throw InputError("extraction requires ell >= 1");

  WeightContext unit(k, ell, 1);
  WeightValue bound = WeightValue::one(unit);
  for (int j = 0; j < k; ++j) bound = mul_root_k(bound);
  bound = bound.scaled(pow_q(mpq_class(4 * ell - 2), k));
  if (compare(WeightValue::integer(unit, n), bound) != Ordering::Greater)
    throw InputError("extraction requires n > (4*ell-2)^k * k^{k/ell}");

  DescentTrace trace =
      descend(ec, ell, 4 * ell - 2, DescentMode::Theorem1, limits);
  if (trace.completed)
    throw std::logic_error(
        "descent completed although the colouring exceeds the size bound");
  const Violation& viol = *trace.violation;
  if (viol.kind != Violation::Kind::ChromaticThreshold || viol.layer < 1)
    throw std::logic_error("theorem-1 descent produced a foreign violation");

  // A layer needing more than 4*ell-2 parity-crossed classes means more
  // than 2*ell-1 classes on its own, which forces a colour-c cycle of
  // length exactly 2*ell+1 somewhere among the surviving vertices. Search
  // near the witness first.
  auto alive = alive_after(trace, n);
  std::vector<char> near(static_cast<std::size_t>(n), 0);
  auto layering =
      bfs_layers(ec, viol.c, viol.v, viol.chosen_layer + 1, alive);
  for (Vertex u : layering.ball(layering.computed_depth())) near[u] = 1;

  const int target = 2 * ell + 1;
  std::optional<std::vector<Vertex>> cycle =
      FixedLengthCycleSearch(ec, viol.c, near, target, limits.search_budget)
          .run();
  if (!cycle)
    cycle = FixedLengthCycleSearch(ec, viol.c, alive, target,
                                   limits.search_budget)
                .run();
  if (!cycle)
    throw std::logic_error(
        "no odd cycle found although the chromatic threshold was crossed");
  return ExtractionResult{OddCycleCertificate{viol.c, std::move(*cycle)}, ell,
                          false, std::move(trace)};
}

namespace {

VerifyResult fail_step(std::size_t idx, const std::string& msg) {
  return VerifyResult::fail("step " + std::to_string(idx + 1) + ": " + msg);
}

bool sorted_unique(const std::vector<Vertex>& v) {
  return std::is_sorted(v.begin(), v.end()) &&
         std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

VerifyResult verify_trace(const DescentTrace& trace, const EdgeColouring& ec,
                          const DescentLimits& limits) {
  const int n = ec.size();
  if (trace.n != n)
    return VerifyResult::fail("header: vertex count does not match colouring");
  if (trace.k < 1 || ec.locality() > trace.k)
    return VerifyResult::fail("header: colouring is not k-local for trace k");
  if (trace.ell < 1) return VerifyResult::fail("header: ell must be >= 1");
  if (trace.chi < 1) return VerifyResult::fail("header: chi must be >= 1");
  if (trace.chi != forced_chi(trace.mode, trace.ell, trace.chi))
    return VerifyResult::fail("header: chi does not match the mode");
  if (trace.completed && trace.violation)
    return VerifyResult::fail("header: completed trace carries a violation");

  WeightContext ctx(trace.k, trace.ell, trace.chi);
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  auto weights = weights_within(ec, alive, ctx);
  WeightValue total = total_weight(weights, ctx);
  const WeightValue initial_total = total;

  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const DescentStep& step = trace.steps[s];
    if (step.v < 0 || step.v >= n || !alive[step.v])
      return fail_step(s, "pivot vertex is not alive");
    if (step.layer < 1 || step.layer > trace.ell)
      return fail_step(s, "layer index outside [1, ell]");
    if (!sorted_unique(step.ball) || !sorted_unique(step.next_layer) ||
        !sorted_unique(step.kept))
      return fail_step(s, "vertex lists must be sorted and duplicate-free");

    if (compare(step.weight_before, total) != Ordering::Equal)
      return fail_step(s, "recorded starting weight is wrong");

    BfsLayering layering;
    try {
      layering = bfs_layers(ec, step.c, step.v, step.layer + 1, alive);
    } catch (const InputError& e) {
      return fail_step(s, e.what());
    }
    if (layering.ball(step.layer) != step.ball)
      return fail_step(s, "recorded ball differs from the layering");
    std::vector<Vertex> next =
        step.layer + 1 <= layering.computed_depth()
            ? layering.layers[step.layer + 1]
            : std::vector<Vertex>{};
    if (next != step.next_layer)
      return fail_step(s, "recorded next layer differs from the layering");

    if (layering.computed_depth() < 1)
      return fail_step(s, "pivot has no neighbour in its colour");
    WeightValue nbr_weight = weight_sum(weights, layering.layers[1], ctx);
    WeightValue rest = total - weights[step.v];
    if (compare(nbr_weight.scaled(mpq_class(trace.k)), rest) == Ordering::Less)
      return fail_step(s, "colour choice misses the pigeonhole inequality");

    WeightValue ball_weight = weight_sum(weights, step.ball, ctx);
    if (compare(weight_sum(weights, next, ctx), mul_threshold(ball_weight)) ==
        Ordering::Greater)
      return fail_step(s, "next layer is too heavy for the chosen layer");

    if (step.kept.empty()) return fail_step(s, "kept class is empty");
    if (!std::includes(step.ball.begin(), step.ball.end(), step.kept.begin(),
                       step.kept.end()))
      return fail_step(s, "kept class is not contained in the ball");
    for (std::size_t a = 0; a < step.kept.size(); ++a)
      for (std::size_t b = a + 1; b < step.kept.size(); ++b)
        if (ec.colour(step.kept[a], step.kept[b]) == step.c)
          return fail_step(s, "kept class spans an edge of the step colour");
    if (compare(weight_sum(weights, step.kept, ctx)
                    .scaled(mpq_class(trace.chi)),
                ball_weight) == Ordering::Less)
      return fail_step(s, "kept class misses the pigeonhole inequality");

    std::vector<Vertex> dropped = sorted_difference(step.ball, step.kept);
    if (dropped.empty() && step.next_layer.empty())
      return fail_step(s, "deletion is empty");
    for (Vertex u : dropped) alive[u] = 0;
    for (Vertex u : step.next_layer) alive[u] = 0;

    weights = weights_within(ec, alive, ctx);
    total = total_weight(weights, ctx);
    if (compare(step.weight_after, total) != Ordering::Equal)
      return fail_step(s, "recorded finishing weight is wrong");
    if (compare(step.weight_after, step.weight_before) == Ordering::Less)
      return fail_step(s, "total weight decreased");
  }

  int alive_count = 0;
  for (char a : alive) alive_count += a;

  if (trace.completed) {
    if (alive_count > 1)
      return VerifyResult::fail("completed although several vertices remain");
    if (compare(total, WeightValue::one(ctx)) == Ordering::Greater)
      return VerifyResult::fail("final weight exceeds one");
    WeightValue floor =
        vertex_weight(ctx, trace.k).scaled(mpq_class(trace.n));
    if (compare(floor, initial_total) == Ordering::Greater)
      return VerifyResult::fail("initial weight undercuts the n*alpha^-k floor");
    WeightValue bound = WeightValue::one(ctx);
    for (int j = 0; j < trace.k; ++j) bound = mul_root_k(bound);
    bound = bound.scaled(pow_q(mpq_class(trace.chi), trace.k));
    if (compare(WeightValue::integer(ctx, trace.n), bound) == Ordering::Greater)
      return VerifyResult::fail("size bound chi^k * k^{k/ell} is violated");
    return VerifyResult::ok();
  }

  if (!trace.violation)
    return VerifyResult::fail("trace ends without completing or violating");
  const Violation& viol = *trace.violation;
  if (viol.v < 0 || viol.v >= n || !alive[viol.v])
    return VerifyResult::fail("violation: pivot vertex is not alive");
  if (viol.chosen_layer < 1 || viol.chosen_layer > trace.ell)
    return VerifyResult::fail("violation: layer index outside [1, ell]");

  BfsLayering layering;
  try {
    layering = bfs_layers(ec, viol.c, viol.v, viol.chosen_layer + 1, alive);
  } catch (const InputError& e) {
    return VerifyResult::fail(std::string("violation: ") + e.what());
  }

  if (viol.kind == Violation::Kind::WithinLayerEdge) {
    if (trace.mode != DescentMode::Theorem2)
      return VerifyResult::fail("violation: witness kind foreign to the mode");
    if (viol.layer < 1 || viol.layer > viol.chosen_layer)
      return VerifyResult::fail("violation: witness layer outside [1, i]");
    if (viol.x < 0 || viol.x >= n || viol.y < 0 || viol.y >= n ||
        viol.x == viol.y)
      return VerifyResult::fail("violation: witness edge is malformed");
    if (layering.depth[viol.x] != viol.layer ||
        layering.depth[viol.y] != viol.layer)
      return VerifyResult::fail("violation: witness edge is not within the layer");
    if (ec.colour(viol.x, viol.y) != viol.c)
      return VerifyResult::fail("violation: witness edge has the wrong colour");
    return VerifyResult::ok();
  }

  if (trace.mode == DescentMode::Theorem2)
    return VerifyResult::fail("violation: witness kind foreign to the mode");
  std::vector<Vertex> expected;
  int cap = 0;
  if (viol.layer == -1) {
    if (trace.mode != DescentMode::Generic)
      return VerifyResult::fail("violation: whole-ball witness needs generic mode");
    expected = layering.ball(viol.chosen_layer);
    cap = trace.chi;
  } else {
    if (trace.mode != DescentMode::Theorem1)
      return VerifyResult::fail("violation: per-layer witness needs t1 mode");
    if (viol.layer < 1 || viol.layer > viol.chosen_layer)
      return VerifyResult::fail("violation: witness layer outside [1, i]");
    expected = viol.layer <= layering.computed_depth()
                   ? layering.layers[viol.layer]
                   : std::vector<Vertex>{};
    cap = 2 * trace.ell - 1;
  }
  if (viol.threshold != cap)
    return VerifyResult::fail("violation: wrong chromatic threshold");
  std::vector<Vertex> recorded = viol.vertex_set;
  std::sort(recorded.begin(), recorded.end());
  if (recorded != expected)
    return VerifyResult::fail("violation: recorded vertex set is wrong");
  SimpleGraph g = ec.monochromatic_subgraph(viol.c, expected);
  ChromaticResult chrom;
  try {
    chrom = chromatic_number(g, cap, limits.solver_limit);
  } catch (const SolverLimitError& e) {
    return VerifyResult::fail(std::string("violation: ") + e.what());
  }
  if (!chrom.exceeds_cap)
    return VerifyResult::fail(
        "violation: the vertex set is colourable within the threshold");
  return VerifyResult::ok();
}

namespace {

std::string render_list(const std::vector<Vertex>& list) {
  if (list.empty()) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out << ",";
    out << list[i];
  }
  return out.str();
}

int strict_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw InputError("trace: bad integer `" + tok + "` for " + what);
  }
}

std::vector<Vertex> parse_list(const std::string& text) {
  if (text == "-") return {};
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(strict_int(tok, "a vertex list"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Next token must look like `key=first`; returns `first`.
std::string expect_key(std::istringstream& in, const std::string& key) {
  std::string tok;
  if (!(in >> tok) || tok.rfind(key + "=", 0) != 0)
    throw InputError("trace: expected `" + key + "=`");
  return tok.substr(key.size() + 1);
}

// Reads `key=poly <q> <coeffs>` whose opening token was already consumed.
WeightValue read_poly(std::istringstream& in, const std::string& opening,
                      const WeightContext& ctx) {
  if (opening != "poly") throw InputError("trace: expected a poly rendering");
  int q = 0;
  if (!(in >> q) || q < 1) throw InputError("trace: bad poly basis size");
  std::ostringstream text;
  text << "poly " << q;
  for (int r = 0; r < q; ++r) {
    std::string tok;
    if (!(in >> tok)) throw InputError("trace: truncated poly coefficients");
    text << " " << tok;
  }
  return parse_weight(ctx, text.str());
}

int parse_int_field(const std::string& text, const std::string& key) {
  return strict_int(text, "`" + key + "`");
}

}  // namespace

std::string save_trace(const DescentTrace& trace) {
  std::ostringstream out;
  out << "trace " << trace.n << " " << trace.k << " " << trace.ell << " "
      << trace.chi << " " << mode_name(trace.mode) << "\n";
  for (const auto& step : trace.steps) {
    out << "step " << step.v << " " << step.c << " " << step.layer
        << " S=" << render_list(step.ball) << " T=" << render_list(step.next_layer)
        << " Sp=" << render_list(step.kept)
        << " w_before=" << render(step.weight_before)
        << " w_after=" << render(step.weight_after) << "\n";
  }
  if (trace.completed) {
    out << "outcome completed\n";
  } else if (trace.violation) {
    const Violation& v = *trace.violation;
    if (v.kind == Violation::Kind::WithinLayerEdge) {
      out << "outcome violation within-layer-edge v=" << v.v << " c=" << v.c
          << " i=" << v.chosen_layer << " j=" << v.layer << " x=" << v.x
          << " y=" << v.y << "\n";
    } else {
      out << "outcome violation chromatic-threshold v=" << v.v << " c=" << v.c
          << " i=" << v.chosen_layer << " j=" << v.layer
          << " set=" << render_list(v.vertex_set) << " cap=" << v.threshold
          << "\n";
    }
  } else {
    throw InputError("trace has no outcome to save");
  }
  return out.str();
}

DescentTrace load_trace(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  if (!std::getline(lines, line))
    throw InputError("trace: missing header line");
  std::istringstream header(line);
  std::string magic, mode_token;
  int n = 0, k = 0, ell = 0, chi = 0;
  if (!(header >> magic >> n >> k >> ell >> chi >> mode_token) ||
      magic != "trace")
    throw InputError("trace: expected `trace <n> <k> <l> <chi> <mode>`");
  std::string rest;
  if (header >> rest) throw InputError("trace: trailing header data");
  if (n < 1 || k < 1 || ell < 1 || chi < 1)
    throw InputError("trace: header parameters must be positive");
  DescentMode mode = mode_from_name(mode_token);
  WeightContext ctx(k, ell, chi);

  DescentTrace trace{n, k, ell, chi, mode, {}, false, std::nullopt};
  bool ended = false;
  while (std::getline(lines, line)) {
    if (line.empty()) {
      std::string tail;
      while (std::getline(lines, tail))
        if (!tail.empty()) throw InputError("trace: blank line inside trace");
      break;
    }
    if (ended) throw InputError("trace: data after the outcome line");
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "step") {
      int v = 0, c = 0, i = 0;
      if (!(in >> v >> c >> i)) throw InputError("trace: bad step header");
      std::vector<Vertex> ball = parse_list(expect_key(in, "S"));
      std::vector<Vertex> next = parse_list(expect_key(in, "T"));
      std::vector<Vertex> kept = parse_list(expect_key(in, "Sp"));
      WeightValue before = read_poly(in, expect_key(in, "w_before"), ctx);
      WeightValue after = read_poly(in, expect_key(in, "w_after"), ctx);
      if (in >> rest) throw InputError("trace: trailing step data");
      trace.steps.push_back(DescentStep{v, c, i, std::move(ball),
                                        std::move(next), std::move(kept),
                                        std::move(before), std::move(after)});
    } else if (tag == "outcome") {
      std::string what;
      if (!(in >> what)) throw InputError("trace: bad outcome line");
      if (what == "completed") {
        trace.completed = true;
      } else if (what == "violation") {
        std::string kind;
        if (!(in >> kind)) throw InputError("trace: missing violation kind");
        Violation viol;
        viol.v = parse_int_field(expect_key(in, "v"), "v");
        viol.c = parse_int_field(expect_key(in, "c"), "c");
        viol.chosen_layer = parse_int_field(expect_key(in, "i"), "i");
        viol.layer = parse_int_field(expect_key(in, "j"), "j");
        if (kind == "within-layer-edge") {
          viol.kind = Violation::Kind::WithinLayerEdge;
          viol.x = parse_int_field(expect_key(in, "x"), "x");
          viol.y = parse_int_field(expect_key(in, "y"), "y");
          viol.threshold = chi;
        } else if (kind == "chromatic-threshold") {
          viol.kind = Violation::Kind::ChromaticThreshold;
          viol.vertex_set = parse_list(expect_key(in, "set"));
          viol.threshold = parse_int_field(expect_key(in, "cap"), "cap");
        } else {
          throw InputError("trace: unknown violation kind `" + kind + "`");
        }
        trace.violation = std::move(viol);
      } else {
        throw InputError("trace: unknown outcome `" + what + "`");
      }
      if (in >> rest) throw InputError("trace: trailing outcome data");
      ended = true;
    } else {
      throw InputError("trace: unknown line tag `" + tag + "`");
    }
  }
  if (!ended) throw InputError("trace: missing outcome line");
  return trace;
}

}  // namespace cyclecert
