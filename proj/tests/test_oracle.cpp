#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "cyclecert/descent.hpp"
#include "cyclecert/oracle.hpp"

using namespace cyclecert;

namespace {

EdgeColouring embed_graph(const SimpleGraph& g, int background) {
  EdgeColouring ec = EdgeColouring::complete(g.size(), background);
  for (auto [u, v] : g.edges()) ec.set_colour(u, v, 1);
  return ec;
}

std::optional<int> naive_shortest_odd(const EdgeColouring& ec, int max_len) {
  std::optional<int> best;
  for (int len = 3; len <= max_len; len += 2) {
    for (Colour c : ec.palette()) {
      SimpleGraph sub = ec.monochromatic_subgraph(c, ec.all_vertices());
      if (has_cycle_of_length(sub, len).has_value()) {
        best = len;
        break;
      }
    }
    if (best) break;
  }
  return best;
}

}  // namespace

TEST_CASE("certificate verification") {
  EdgeColouring k3 = EdgeColouring::complete(3, 1);
  CHECK(verify_certificate(k3, {1, {0, 1, 2}}).accepted);
  CHECK_FALSE(verify_certificate(k3, {2, {0, 1, 2}}).accepted);
  CHECK_FALSE(verify_certificate(k3, {1, {0, 1}}).accepted);
  CHECK_FALSE(verify_certificate(k3, {1, {0, 1, 1}}).accepted);
  CHECK_FALSE(verify_certificate(k3, {1, {0, 1, 5}}).accepted);
  CHECK_FALSE(verify_certificate(k3, {1, {0}}).accepted);

  EdgeColouring mixed = EdgeColouring::complete(5, 1);
  mixed.set_colour(0, 1, 2);
  CHECK_FALSE(verify_certificate(mixed, {1, {0, 1, 2}}).accepted);
  CHECK(verify_certificate(mixed, {1, {0, 2, 1, 3, 4}}).accepted);
}

TEST_CASE("shortest monochromatic odd cycles") {
  EdgeColouring d = EdgeColouring::doubling(1, 2);
  CHECK_FALSE(find_mono_odd_cycle(d, 3).has_value());

  EdgeColouring k3 = EdgeColouring::complete(3, 1);
  auto tri = find_mono_odd_cycle(k3, 3);
  REQUIRE(tri.has_value());
  CHECK(tri->length() == 3);
  CHECK(verify_certificate(k3, *tri).accepted);

  EdgeColouring c5 = EdgeColouring::complete(5, 2);
  for (int i = 0; i < 5; ++i) c5.set_colour(i, (i + 1) % 5, 1);
  // colour 2 spans the pentagram, another five-cycle
  CHECK_FALSE(find_mono_odd_cycle(c5, 3).has_value());
  auto pent = find_mono_odd_cycle(c5, 5);
  REQUIRE(pent.has_value());
  CHECK(pent->length() == 5);
  CHECK(pent->colour == 1);
  CHECK(verify_certificate(c5, *pent).accepted);

  // Petersen in colour 1: its own odd girth is 5, but the complement
  // (colour 2) has triangles, so the overall shortest is 3 in colour 2.
  EdgeColouring pet = embed_graph(SimpleGraph::petersen(), 2);
  OracleBudget roomy;
  roomy.max_vertices = 14;
  auto best = find_mono_odd_cycle(pet, 5, roomy);
  REQUIRE(best.has_value());
  CHECK(best->colour == 2);
  CHECK(best->length() == 3);
  CHECK(verify_certificate(pet, *best).accepted);
}

TEST_CASE("oracle budget is a hard stop") {
  EdgeColouring big = EdgeColouring::complete(15, 1);
  CHECK_THROWS_AS(find_mono_odd_cycle(big, 3), BudgetError);
  OracleBudget wide;
  wide.max_vertices = 15;
  CHECK(find_mono_odd_cycle(big, 3, wide).has_value());

  SimpleGraph k15 = SimpleGraph::complete(15);
  CHECK_THROWS_AS(has_cycle_of_length(k15, 5), BudgetError);
  OracleBudget starved;
  starved.max_vertices = 15;
  starved.max_nodes = 2;
  CHECK_THROWS_AS(has_cycle_of_length(k15, 5, starved), BudgetError);
}

TEST_CASE("fixed-length cycle search") {
  SimpleGraph c5 = SimpleGraph::cycle(5);
  auto hit = has_cycle_of_length(c5, 5);
  REQUIRE(hit.has_value());
  CHECK(hit->size() == 5);
  CHECK_FALSE(has_cycle_of_length(c5, 3).has_value());
  CHECK_FALSE(has_cycle_of_length(c5, 4).has_value());

  SimpleGraph pet = SimpleGraph::petersen();
  CHECK(has_cycle_of_length(pet, 5).has_value());
  CHECK(has_cycle_of_length(pet, 6).has_value());
  CHECK_FALSE(has_cycle_of_length(pet, 3).has_value());
  CHECK_FALSE(has_cycle_of_length(pet, 4).has_value());
  CHECK_THROWS_AS(has_cycle_of_length(pet, 2), InputError);

  SimpleGraph k4 = SimpleGraph::complete(4);
  auto sq = has_cycle_of_length(k4, 4);
  REQUIRE(sq.has_value());
  // returned sequence really is a cycle of distinct adjacent vertices
  for (std::size_t i = 0; i < sq->size(); ++i) {
    CHECK(k4.adjacent((*sq)[i], (*sq)[(i + 1) % sq->size()]));
    for (std::size_t j = i + 1; j < sq->size(); ++j)
      CHECK((*sq)[i] != (*sq)[j]);
  }
}

TEST_CASE("oracle shortest agrees with naive enumeration") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 4 + static_cast<int>(seed % 7);
    EdgeColouring ec = EdgeColouring::random(n, 1 + seed % 3, 600 + seed);
    auto fast = find_mono_odd_cycle(ec, 9);
    auto slow = naive_shortest_odd(ec, 9);
    CHECK(fast.has_value() == slow.has_value());
    if (fast && slow) {
      CHECK(fast->length() == *slow);
      CHECK(verify_certificate(ec, *fast).accepted);
    }
  }
}

TEST_CASE("oracle shortest never exceeds the engine certificate") {
  int runs = 0;
  for (std::uint64_t seed = 0; seed < 40 && runs < 12; ++seed) {
    EdgeColouring ec = EdgeColouring::random(10, 2, 1700 + seed);
    if (ec.locality() != 2) continue;
    ++runs;
    ExtractionResult r = extract_theorem2(ec, mpq_class(3));
    CHECK(verify_certificate(ec, r.certificate).accepted);
    auto shortest = find_mono_odd_cycle(ec, r.certificate.length());
    REQUIRE(shortest.has_value());
    CHECK(shortest->length() <= r.certificate.length());
  }
  CHECK(runs == 12);
}

TEST_CASE("efrs acceptance on cycle-free structure") {
  EfrsReport bip = efrs_check(SimpleGraph::cycle(6), 2);
  CHECK(bip.verdict == EfrsReport::Verdict::Accept);

  EfrsReport heptagon = efrs_check(SimpleGraph::cycle(7), 2);
  CHECK(heptagon.verdict == EfrsReport::Verdict::Accept);

  EfrsReport pent = efrs_check(SimpleGraph::petersen(), 2);
  REQUIRE(pent.verdict == EfrsReport::Verdict::PreconditionFailed);
  CHECK(pent.found_cycle.size() == 5);

  EfrsReport tri = efrs_check(SimpleGraph::cycle(5), 1);
  CHECK(tri.verdict == EfrsReport::Verdict::Accept);

  EfrsReport k3 = efrs_check(SimpleGraph::complete(3), 1);
  CHECK(k3.verdict == EfrsReport::Verdict::PreconditionFailed);

  CHECK_THROWS_AS(efrs_check(SimpleGraph::cycle(5), 0), InputError);
}
