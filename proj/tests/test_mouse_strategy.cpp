#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "catmouse/capture_number.hpp"
#include "catmouse/mouse_strategy.hpp"
#include "catmouse/prufer.hpp"
#include "catmouse/solver.hpp"
#include "oracles.hpp"

using namespace catmouse;
using namespace catmouse::tstar;

namespace {

Tree spider(std::initializer_list<std::size_t> legs) {
  std::vector<std::size_t> v(legs);
  return make_spider(v);
}

std::vector<VertexId> random_sequence(std::size_t n, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<VertexId> seq(length);
  for (auto& c : seq) c = pick(rng);
  return seq;
}

}  // namespace

TEST_CASE("beats checks adjacency, avoidance and length") {
  const auto p4 = make_path(4);
  const std::vector<VertexId> cat{1, 2, 1, 2};
  CHECK(beats(p4, cat, std::vector<VertexId>{2, 1, 2, 1}));
  CHECK_FALSE(beats(p4, cat, std::vector<VertexId>{2, 1, 2}));
  CHECK_FALSE(beats(p4, cat, std::vector<VertexId>{2, 3, 2, 2}));  // stays put
  CHECK_FALSE(beats(p4, cat, std::vector<VertexId>{0, 2, 3, 2}));  // 0-2 not an edge
  CHECK_FALSE(beats(p4, cat, std::vector<VertexId>{1, 0, 1, 0}));  // caught at time 1
}

TEST_CASE("beat examples") {
  CHECK_FALSE(beat(make_star(3), std::vector<VertexId>{0, 0}).has_value());
  CHECK_FALSE(beat(make_path(4), std::vector<VertexId>{1, 2, 2, 1}).has_value());

  const std::vector<VertexId> alternating{1, 2, 1, 2};
  const auto escape = beat(make_path(4), alternating);
  REQUIRE(escape);
  CHECK(beats(make_path(4), alternating, *escape));
  CHECK(oracle::escape_exists(make_path(4), alternating));

  CHECK_THROWS_AS(beat(make_path(4), std::vector<VertexId>{}), Error);
  CHECK_THROWS_AS(beat(make_path(4), std::vector<VertexId>{7}), Error);
}

TEST_CASE("beat reconstructs from the smallest survivor backwards") {
  // Survivors per time on the path 0-1-2-3: {0,2,3}, {1,3}, {0,2}, {1,3}.
  const auto escape = beat(make_path(4), std::vector<VertexId>{1, 2, 1, 2});
  REQUIRE(escape);
  CHECK(*escape == MouseSequence{0, 1, 0, 1});
}

TEST_CASE("canonical T*") {
  const auto t = canonical_tstar();
  CHECK(t.size() == 10);
  CHECK(t.degree(kHub) == 3);
  for (std::size_t arm = 0; arm < 3; ++arm) {
    CHECK(t.adjacent(outer(arm), middle(arm)));
    CHECK(t.adjacent(middle(arm), inner(arm)));
    CHECK(t.adjacent(inner(arm), kHub));
  }
}

TEST_CASE("tstar_mouse examples") {
  CHECK(tstar_mouse(std::vector<VertexId>{kHub, kHub, kHub}) == MouseSequence{middle(0), outer(0), middle(0)});
  CHECK(tstar_mouse(std::vector<VertexId>{kHub, outer(0), kHub}) == MouseSequence{middle(0), inner(0), middle(0)});
  CHECK(tstar_mouse(std::vector<VertexId>{outer(0)}) == MouseSequence{kHub});
  // Arm 0 is blocked on the way down, arm 1 on the way back.
  const std::vector<VertexId> blocked{outer(2), inner(0), kHub, inner(1), outer(2)};
  const auto m = tstar_mouse(blocked);
  CHECK(m == MouseSequence{kHub, inner(2), middle(2), inner(2), kHub});
  CHECK(beats(canonical_tstar(), blocked, m));

  CHECK_THROWS_AS(tstar_mouse(std::vector<VertexId>{10}), Error);
  CHECK_THROWS_AS(tstar_mouse(std::vector<VertexId>{}), Error);
}

TEST_CASE("tstar_mouse beats random sequences") {
  const auto t = canonical_tstar();
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 2000; ++round) {
    const auto len = 1 + rng() % 40;
    auto seq = random_sequence(10, len, rng);
    // Bias towards the hub to exercise long runs.
    for (auto& c : seq)
      if (rng() % 3 == 0) c = kHub;
    CHECK(beats(t, seq, tstar_mouse(seq)));
  }
}

TEST_CASE("undervisited_mouse examples") {
  const auto p6 = make_path(6);
  CHECK(undervisited_mouse(p6, 2, std::vector<VertexId>{0, 1, 0, 1}) == MouseSequence{2, 3, 2, 3});
  CHECK(undervisited_mouse(p6, 2, std::vector<VertexId>{2, 1, 3}) == MouseSequence{1, 2, 1});
  CHECK(undervisited_mouse(spider({2, 2, 2}), 0, std::vector<VertexId>{0, 0, 0}) == MouseSequence{1, 2, 1});
}

TEST_CASE("undervisited_mouse preconditions") {
  const auto p6 = make_path(6);
  CHECK_THROWS_AS(undervisited_mouse(p6, 2, std::vector<VertexId>{2, 1, 2}), Error);  // a(v) = 2 reached
  CHECK_THROWS_AS(undervisited_mouse(p6, 0, std::vector<VertexId>{1}), Error);        // leaf
  CHECK_THROWS_AS(undervisited_mouse(make_path(2), 0, std::vector<VertexId>{1}), Error);
  CHECK_THROWS_AS(undervisited_mouse(p6, 2, std::vector<VertexId>{}), Error);
}

TEST_CASE("undervisited_mouse beats every undervisiting sequence on random trees") {
  std::mt19937_64 rng(99);
  std::size_t big_cases = 0;
  for (int round = 0; round < 5000; ++round) {
    const auto t = random_tree(3 + rng() % 10, rng);
    const auto internal = internal_vertices(t);
    const VertexId v = internal[rng() % internal.size()];
    const auto budget = a_value(t, v) - 1;
    auto seq = random_sequence(t.size(), 1 + rng() % 24, rng);
    for (auto& c : seq)
      if (rng() % 3 == 0) c = v;
    std::size_t used = 0;
    for (auto& c : seq) {
      if (c != v) continue;
      if (used < budget) ++used;
      else c = t.neighbours(v)[0];
    }
    big_cases += a_value(t, v) > 2;
    const auto m = undervisited_mouse(t, v, seq);
    CHECK(beats(t, seq, m));
    CHECK(beat(t, seq).has_value());
  }
  CHECK(big_cases > 100);
}

TEST_CASE("beat agrees with walk enumeration on small graphs") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& g : oracle::connected_graphs(n)) {
      for (std::size_t len = 1; len <= 4; ++len) {
        oracle::for_each_sequence(n, len, [&](const std::vector<VertexId>& seq) {
          const auto escape = beat(g, seq);
          CHECK(escape.has_value() == oracle::escape_exists(g, seq));
          if (escape) CHECK(beats(g, seq, *escape));
        });
      }
    }
  }
}

TEST_CASE("escapes on a subgraph survive in a supergraph") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 500; ++round) {
    const auto h = random_tree(3 + rng() % 6, rng);
    auto g_tree = random_supertree(h, 1 + rng() % 4, rng);
    auto edges = g_tree.edges();
    // Add a chord when possible.
    const auto a = static_cast<VertexId>(rng() % g_tree.size());
    const auto b = static_cast<VertexId>(rng() % g_tree.size());
    if (a != b && !g_tree.adjacent(a, b)) edges.emplace_back(a, b);
    const auto g = Graph::from_edges(g_tree.size(), edges);

    const auto seq = random_sequence(g.size(), 1 + rng() % 10, rng);
    std::vector<VertexId> on_h(seq);
    for (auto& c : on_h) c %= static_cast<VertexId>(h.size());
    if (beat(h, on_h)) CHECK(beat(g, on_h).has_value());
  }
}
