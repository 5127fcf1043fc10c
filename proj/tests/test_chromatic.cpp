#include <doctest.h>

#include <random>
#include <vector>

#include "cyclecert/chromatic.hpp"
#include "cyclecert/graph.hpp"
#include "cyclecert/weights.hpp"

using namespace cyclecert;

namespace {

bool naive_feasible(const SimpleGraph& g, std::vector<int>& col, int pos,
                    int t) {
  if (pos == g.size()) return true;
  for (int c = 0; c < t; ++c) {
    bool ok = true;
    for (int u = 0; u < pos; ++u) {
      if (col[u] == c && g.adjacent(u, pos)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    col[pos] = c;
    if (naive_feasible(g, col, pos + 1, t)) return true;
  }
  return false;
}

int naive_chromatic(const SimpleGraph& g) {
  if (g.size() == 0) return 0;
  for (int t = 1;; ++t) {
    std::vector<int> col(g.size(), -1);
    if (naive_feasible(g, col, 0, t)) return t;
  }
}

SimpleGraph random_graph(int n, std::uint64_t seed, int density_pct) {
  std::mt19937_64 rng(seed);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng() % 100) < density_pct) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("chromatic numbers of named graphs") {
  CHECK(chromatic_number(SimpleGraph(0), 5).value == 0);
  CHECK(chromatic_number(SimpleGraph(3), 5).value == 1);
  CHECK(chromatic_number(SimpleGraph::complete(3), 5).value == 3);
  CHECK(chromatic_number(SimpleGraph::cycle(5), 5).value == 3);
  CHECK(chromatic_number(SimpleGraph::cycle(6), 5).value == 2);
  CHECK(chromatic_number(SimpleGraph::petersen(), 5).value == 3);
}

TEST_CASE("cap verdicts") {
  ChromaticResult r = chromatic_number(SimpleGraph::complete(4), 3);
  CHECK(r.exceeds_cap);
  ChromaticResult ok = chromatic_number(SimpleGraph::complete(4), 4);
  CHECK_FALSE(ok.exceeds_cap);
  CHECK(ok.value == 4);
  CHECK(chromatic_number(SimpleGraph::cycle(7), 2).exceeds_cap);
}

TEST_CASE("solver vertex limit") {
  CHECK_THROWS_AS(chromatic_number(SimpleGraph::cycle(5), 3, 4),
                  SolverLimitError);
  CHECK_THROWS_AS(proper_colouring(SimpleGraph::cycle(5), 3, 4),
                  SolverLimitError);
}

TEST_CASE("proper colourings meet their contract") {
  SimpleGraph c7 = SimpleGraph::cycle(7);
  auto pc = proper_colouring(c7, 3);
  REQUIRE(pc.has_value());
  CHECK(pc->width() == 3);
  for (const auto& cls : pc->classes) CHECK_FALSE(cls.empty());
  CHECK(is_proper_colouring(c7, *pc));

  CHECK_FALSE(proper_colouring(SimpleGraph::cycle(5), 2).has_value());
  CHECK_FALSE(proper_colouring(SimpleGraph::complete(4), 3).has_value());

  auto loose = proper_colouring(SimpleGraph::complete(3), 5);
  REQUIRE(loose.has_value());
  CHECK(loose->width() == 3);
  CHECK(is_proper_colouring(SimpleGraph::complete(3), *loose));
}

TEST_CASE("colouring validator rejects broken partitions") {
  SimpleGraph k3 = SimpleGraph::complete(3);
  CHECK_FALSE(is_proper_colouring(k3, ProperColouring{{{0, 1}, {2}}}));
  CHECK_FALSE(is_proper_colouring(k3, ProperColouring{{{0}, {1}}}));
  CHECK_FALSE(is_proper_colouring(k3, ProperColouring{{{0}, {1}, {2}, {}}}));
  CHECK_FALSE(is_proper_colouring(k3, ProperColouring{{{0}, {1, 1}, {2}}}));
  CHECK(is_proper_colouring(k3, ProperColouring{{{0}, {1}, {2}}}));
}

TEST_CASE("exhaustive agreement on all four-vertex graphs") {
  for (int mask = 0; mask < 64; ++mask) {
    SimpleGraph g(4);
    int bit = 0;
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) {
        if (mask & (1 << bit)) g.add_edge(u, v);
        ++bit;
      }
    }
    int expect = naive_chromatic(g);
    ChromaticResult r = chromatic_number(g, 4);
    CHECK_FALSE(r.exceeds_cap);
    CHECK(r.value == expect);
    auto pc = proper_colouring(g, expect);
    REQUIRE(pc.has_value());
    CHECK(is_proper_colouring(g, *pc));
    CHECK(pc->width() <= expect);
    if (expect > 1) CHECK_FALSE(proper_colouring(g, expect - 1).has_value());
  }
}

TEST_CASE("randomized agreement with the naive solver") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 5 + static_cast<int>(seed % 4);
    SimpleGraph g = random_graph(n, 1000 + seed, 20 + 10 * (seed % 7));
    int expect = naive_chromatic(g);
    ChromaticResult r = chromatic_number(g, n);
    CHECK_FALSE(r.exceeds_cap);
    CHECK(r.value == expect);
    CHECK((expect >= 3) == !is_bipartite(g));
  }
}

TEST_CASE("max weight class selection") {
  WeightContext ctx(2, 2, 1);
  WeightValue half = WeightValue::one(ctx).scaled(mpq_class(1, 2));
  WeightValue beta = vertex_weight(ctx, 1);  // 2^{-1/2} ~ 0.707

  ProperColouring pc{{{0, 1}, {2}}};
  std::vector<WeightValue> w = {half, half, beta};
  CHECK(max_weight_class(pc, w) == std::vector<int>{0, 1});

  ProperColouring tie{{{0}, {1}}};
  std::vector<WeightValue> eq = {half, half};
  CHECK(max_weight_class(tie, eq) == std::vector<int>{0});

  ProperColouring single{{{2}, {0, 1}}};
  std::vector<WeightValue> w2 = {half.scaled(mpq_class(1, 10)),
                                 half.scaled(mpq_class(1, 10)), beta};
  CHECK(max_weight_class(single, w2) == std::vector<int>{2});

  CHECK_THROWS_AS(max_weight_class(ProperColouring{{}}, w), InputError);
}

TEST_CASE("pigeonhole: width times the best class covers the total") {
  WeightContext ctx(3, 2, 2);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    std::vector<WeightValue> w;
    WeightValue total = WeightValue::zero(ctx);
    for (int v = 0; v < n; ++v) {
      w.push_back(vertex_weight(ctx, static_cast<int>(rng() % 4)));
      total = total + w.back();
    }
    int width = 1 + static_cast<int>(rng() % 3);
    ProperColouring pc;
    pc.classes.assign(width, {});
    for (int v = 0; v < n; ++v)
      pc.classes[static_cast<std::size_t>(rng() % width)].push_back(v);
    bool empty = false;
    for (const auto& cls : pc.classes) empty = empty || cls.empty();
    if (empty) continue;
    std::vector<int> best = max_weight_class(pc, w);
    WeightValue best_total = WeightValue::zero(ctx);
    for (int v : best) best_total = best_total + w[v];
    CHECK(compare(best_total.scaled(width), total) != Ordering::Less);
  }
}
