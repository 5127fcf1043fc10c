#include <doctest.h>

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyclecert/descent.hpp"
#include "cyclecert/oracle.hpp"

using namespace cyclecert;

namespace {

WeightValue total_weight(const std::vector<WeightValue>& w,
                         const WeightContext& ctx) {
  WeightValue sum = WeightValue::zero(ctx);
  for (const auto& x : w) sum = sum + x;
  return sum;
}

Colour reference_colour_choice(const EdgeColouring& ec,
                               const std::vector<char>& alive,
                               const WeightContext& ctx, Vertex v) {
  std::vector<WeightValue> w = weights_within(ec, alive, ctx);
  std::optional<Colour> best;
  std::optional<WeightValue> best_sum;
  for (Colour c : ec.palette()) {
    WeightValue sum = WeightValue::zero(ctx);
    bool incident = false;
    for (Vertex u : ec.colour_neighbours(v, c)) {
      if (!alive[u]) continue;
      incident = true;
      sum = sum + w[u];
    }
    if (!incident) continue;
    if (!best || compare(sum, *best_sum) == Ordering::Greater) {
      best = c;
      best_sum = sum;
    }
  }
  REQUIRE(best.has_value());
  return *best;
}

}  // namespace

TEST_CASE("weights within an alive mask") {
  EdgeColouring k3 = EdgeColouring::complete(3, 1);
  WeightContext ctx(1, 1, 3);
  std::vector<WeightValue> w = weights_within(k3, {1, 1, 1}, ctx);
  for (int v = 0; v < 3; ++v)
    CHECK(compare(w[v], WeightValue::one(ctx).scaled(mpq_class(1, 3))) ==
          Ordering::Equal);
  CHECK(compare(total_weight(w, ctx), WeightValue::one(ctx)) ==
        Ordering::Equal);

  std::vector<WeightValue> masked = weights_within(k3, {1, 0, 1}, ctx);
  CHECK(masked[1].is_zero());
  CHECK(compare(masked[0], WeightValue::one(ctx).scaled(mpq_class(1, 3))) ==
        Ordering::Equal);

  std::vector<WeightValue> lone = weights_within(k3, {1, 0, 0}, ctx);
  CHECK(compare(lone[0], WeightValue::one(ctx)) == Ordering::Equal);
}

TEST_CASE("colour choice maximizes neighbourhood weight") {
  EdgeColouring mono = EdgeColouring::complete(4, 1);
  std::vector<char> alive(4, 1);
  WeightContext ctx(1, 1, 2);
  CHECK(choose_colour(mono, alive, ctx, 0) == 1);

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    int n = 3 + static_cast<int>(seed % 8);
    EdgeColouring ec = EdgeColouring::random(n, 1 + seed % 3, 300 + seed);
    int k = ec.locality();
    if (k == 0) continue;
    WeightContext c(k, 2, 3);
    std::vector<char> all(static_cast<std::size_t>(n), 1);
    for (Vertex v = 0; v < n; ++v)
      CHECK(choose_colour(ec, all, c, v) ==
            reference_colour_choice(ec, all, c, v));
  }
}

TEST_CASE("layer choice takes the first satisfied threshold") {
  EdgeColouring mono = EdgeColouring::complete(5, 1);
  std::vector<char> alive(5, 1);
  WeightContext ctx(1, 1, 2);
  CHECK(choose_layer(mono, alive, ctx, 0, 1) == 1);

  WeightContext deep(1, 3, 2);
  CHECK(choose_layer(mono, alive, deep, 0, 1) == 1);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 4 + static_cast<int>(seed % 8);
    EdgeColouring ec = EdgeColouring::random(n, 2, 7000 + seed);
    int k = ec.locality();
    if (k < 2) continue;
    WeightContext c(k, 2, 3);
    std::vector<char> all(static_cast<std::size_t>(n), 1);
    std::vector<WeightValue> w = weights_within(ec, all, c);
    for (Vertex v = 0; v < n; ++v) {
      Colour col = choose_colour(ec, all, c, v);
      int i = choose_layer(ec, all, c, v, col);
      BfsLayering lay = bfs_layers(ec, col, v, i + 1, all);
      auto sum_of = [&](const std::vector<Vertex>& vs) {
        WeightValue s = WeightValue::zero(c);
        for (Vertex u : vs) s = s + w[u];
        return s;
      };
      WeightValue ball = sum_of(lay.ball(i));
      WeightValue next = sum_of(
          i + 1 <= lay.computed_depth() ? lay.layers[i + 1]
                                        : std::vector<Vertex>{});
      CHECK(compare(next, mul_threshold(ball)) != Ordering::Greater);
      for (int j = 1; j < i; ++j) {
        BfsLayering pre = bfs_layers(ec, col, v, j + 1, all);
        WeightValue pb = sum_of(pre.ball(j));
        WeightValue pn = sum_of(
            j + 1 <= pre.computed_depth() ? pre.layers[j + 1]
                                          : std::vector<Vertex>{});
        CHECK(compare(pn, mul_threshold(pb)) == Ordering::Greater);
      }
    }
  }
}

TEST_CASE("descent on a single vertex") {
  EdgeColouring k1 = EdgeColouring::complete(1, 1);
  DescentTrace t = descend(k1, 1, 1, DescentMode::Generic);
  CHECK(t.completed);
  CHECK(t.steps.empty());
  CHECK(t.n == 1);
  CHECK(verify_trace(t, k1).accepted);
}

TEST_CASE("descent on a monochromatic edge, by hand") {
  EdgeColouring k2 = EdgeColouring::complete(2, 1);
  DescentTrace t = descend(k2, 1, 2, DescentMode::Generic);
  REQUIRE(t.completed);
  REQUIRE(t.steps.size() == 1);
  const DescentStep& s = t.steps[0];
  CHECK(s.v == 0);
  CHECK(s.c == 1);
  CHECK(s.layer == 1);
  CHECK(s.ball == std::vector<Vertex>{0, 1});
  CHECK(s.next_layer.empty());
  CHECK(s.kept == std::vector<Vertex>{0});
  WeightContext ctx(1, 1, 2);
  CHECK(compare(s.weight_before, WeightValue::one(ctx)) == Ordering::Equal);
  CHECK(compare(s.weight_after, WeightValue::one(ctx)) == Ordering::Equal);
  CHECK(verify_trace(t, k2).accepted);
}

TEST_CASE("theorem-2 mode stops at a within-layer edge") {
  EdgeColouring k3 = EdgeColouring::complete(3, 1);
  DescentTrace t = descend(k3, 1, 0, DescentMode::Theorem2);
  CHECK_FALSE(t.completed);
  CHECK(t.chi == 2);
  CHECK(t.steps.empty());
  REQUIRE(t.violation.has_value());
  CHECK(t.violation->kind == Violation::Kind::WithinLayerEdge);
  CHECK(t.violation->v == 0);
  CHECK(t.violation->c == 1);
  CHECK(t.violation->chosen_layer == 1);
  CHECK(t.violation->layer == 1);
  CHECK(t.violation->x == 1);
  CHECK(t.violation->y == 2);
  CHECK(verify_trace(t, k3).accepted);
}

TEST_CASE("theorem-1 mode stops at a layer needing too many colours") {
  EdgeColouring k4 = EdgeColouring::complete(4, 1);
  DescentTrace t = descend(k4, 1, 0, DescentMode::Theorem1);
  CHECK_FALSE(t.completed);
  CHECK(t.chi == 2);
  REQUIRE(t.violation.has_value());
  CHECK(t.violation->kind == Violation::Kind::ChromaticThreshold);
  CHECK(t.violation->layer == 1);
  CHECK(t.violation->vertex_set == std::vector<Vertex>{1, 2, 3});
  CHECK(t.violation->threshold == 1);
  CHECK(verify_trace(t, k4).accepted);
}

TEST_CASE("generic mode violation records the whole ball") {
  EdgeColouring k4 = EdgeColouring::complete(4, 1);
  DescentTrace t = descend(k4, 1, 2, DescentMode::Generic);
  CHECK_FALSE(t.completed);
  REQUIRE(t.violation.has_value());
  CHECK(t.violation->kind == Violation::Kind::ChromaticThreshold);
  CHECK(t.violation->layer == -1);
  CHECK(t.violation->vertex_set == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(t.violation->threshold == 2);
  CHECK(verify_trace(t, k4).accepted);

  DescentTrace done = descend(k4, 1, 4, DescentMode::Generic);
  CHECK(done.completed);
  CHECK(verify_trace(done, k4).accepted);
}

TEST_CASE("verifier rejects tampered traces") {
  EdgeColouring d = EdgeColouring::doubling(1, 2);
  DescentTrace t = descend(d, 1, 0, DescentMode::Theorem2);
  REQUIRE(t.completed);
  REQUIRE(t.steps.size() >= 1);
  REQUIRE(t.steps[0].kept.size() == 2);
  CHECK(verify_trace(t, d).accepted);

  DescentTrace shrunk = t;
  shrunk.steps[0].kept.pop_back();
  CHECK_FALSE(verify_trace(shrunk, d).accepted);

  DescentTrace empty_kept = t;
  empty_kept.steps[0].kept.clear();
  CHECK_FALSE(verify_trace(empty_kept, d).accepted);

  DescentTrace fat_ball = t;
  fat_ball.steps[0].ball.push_back(d.size() - 1);
  CHECK_FALSE(verify_trace(fat_ball, d).accepted);

  DescentTrace heavier = t;
  heavier.steps[0].weight_after = heavier.steps[0].weight_after.scaled(2);
  CHECK_FALSE(verify_trace(heavier, d).accepted);

  EdgeColouring recoloured = d;
  recoloured.set_colour(0, 1, 2);
  CHECK_FALSE(verify_trace(t, recoloured).accepted);

  EdgeColouring wrong_n = EdgeColouring::complete(5, 1);
  CHECK_FALSE(verify_trace(t, wrong_n).accepted);
}

TEST_CASE("trace text round trip") {
  EdgeColouring d = EdgeColouring::doubling(1, 2);
  DescentTrace t = descend(d, 1, 0, DescentMode::Theorem2);
  std::string text = save_trace(t);
  DescentTrace back = load_trace(text);
  CHECK(save_trace(back) == text);
  CHECK(verify_trace(back, d).accepted);

  EdgeColouring k3 = EdgeColouring::complete(3, 1);
  DescentTrace viol = descend(k3, 1, 0, DescentMode::Theorem2);
  std::string vtext = save_trace(viol);
  DescentTrace vback = load_trace(vtext);
  CHECK(save_trace(vback) == vtext);
  CHECK(verify_trace(vback, k3).accepted);

  EdgeColouring k4 = EdgeColouring::complete(4, 1);
  DescentTrace thresh = descend(k4, 1, 2, DescentMode::Generic);
  std::string ttext = save_trace(thresh);
  CHECK(save_trace(load_trace(ttext)) == ttext);
  CHECK(verify_trace(load_trace(ttext), k4).accepted);

  CHECK_THROWS_AS(load_trace(""), InputError);
  CHECK_THROWS_AS(load_trace("trace 2 1 1 2\n"), InputError);
  CHECK_THROWS_AS(load_trace("trace 2 1 1 2 generic\n"), InputError);
  CHECK_THROWS_AS(load_trace(text + "junk\n"), InputError);
  std::string no_outcome = text.substr(0, text.rfind("outcome"));
  CHECK_THROWS_AS(load_trace(no_outcome), InputError);
}

TEST_CASE("descent is deterministic") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    int n = 4 + static_cast<int>(seed % 7);
    EdgeColouring ec = EdgeColouring::random(n, 1 + seed % 3, 400 + seed);
    if (ec.locality() == 0) continue;
    DescentTrace a = descend(ec, 2, n, DescentMode::Generic);
    DescentTrace b = descend(ec, 2, n, DescentMode::Generic);
    CHECK(save_trace(a) == save_trace(b));
    CHECK(a.completed);
    CHECK(verify_trace(a, ec).accepted);
  }
}

TEST_CASE("theorem-2 extraction on small inputs") {
  EdgeColouring k3 = EdgeColouring::complete(3, 1);
  ExtractionResult r = extract_theorem2(k3, mpq_class(5, 2));
  CHECK(r.degenerate);
  CHECK(r.ell == 1);
  CHECK(r.certificate.length() == 3);
  CHECK(verify_certificate(k3, r.certificate).accepted);
  CHECK(verify_trace(r.trace, k3).accepted);

  CHECK_THROWS_AS(extract_theorem2(k3, mpq_class(2)), InputError);
  CHECK_THROWS_AS(extract_theorem2(k3, mpq_class(3, 2)), InputError);
  EdgeColouring k2 = EdgeColouring::complete(2, 1);
  CHECK_THROWS_AS(extract_theorem2(k2, mpq_class(5, 2)), InputError);
}

TEST_CASE("theorem-1 extraction on small inputs") {
  EdgeColouring k5 = EdgeColouring::complete(5, 1);
  ExtractionResult r = extract_theorem1(k5, 1);
  CHECK(r.certificate.length() == 3);
  CHECK(verify_certificate(k5, r.certificate).accepted);

  EdgeColouring k2 = EdgeColouring::complete(2, 1);
  CHECK_THROWS_AS(extract_theorem1(k2, 1), InputError);

  DescentLimits tight;
  tight.search_budget = 1;
  CHECK_THROWS_AS(extract_theorem1(k5, 1, tight), BudgetError);
}
