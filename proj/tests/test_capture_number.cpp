#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catmouse/capture_number.hpp"
#include "catmouse/classification.hpp"
#include "catmouse/mouse_strategy.hpp"
#include "catmouse/prufer.hpp"
#include "catmouse/solver.hpp"

using namespace catmouse;

namespace {

Tree spider(std::initializer_list<std::size_t> legs) {
  std::vector<std::size_t> v(legs);
  return make_spider(v);
}

// Case analysis of a(v) written out independently of the library.
std::size_t a_by_cases(const Tree& t, VertexId v) {
  std::size_t dint = 0;
  for (VertexId w : t.neighbours(v)) dint += t.degree(w) > 1;
  if (dint >= 2) return 2 * dint - 2;
  return t.degree(v) >= 2 ? 2 : 0;
}

}  // namespace

TEST_CASE("a_value cases") {
  // legs 2,2,2: hub 0, legs 1-2, 3-4, 5-6
  const auto s222 = spider({2, 2, 2});
  CHECK(a_value(s222, 0) == 4);
  CHECK(a_value(s222, 1) == 2);
  CHECK(a_value(s222, 2) == 0);

  const auto p6 = make_path(6);
  CHECK(a_value(p6, 1) == 2);
  CHECK(a_value(p6, 2) == 2);
  CHECK(a_value(p6, 0) == 0);

  CHECK(a_value(canonical_tstar(), tstar::kHub) == 4);
  CHECK_THROWS_AS(a_value(make_path(2), 0), Error);
}

TEST_CASE("a_total") {
  CHECK(a_total(make_star(3)) == 2);
  CHECK(a_total(make_star(7)) == 2);
  CHECK(a_total(make_path(6)) == 8);
  CHECK(a_total(spider({2, 2, 2})) == 10);
  CHECK(a_total(spider({2, 2, 1})) == 6);

  const auto table = a_values(make_path(6));
  CHECK(table.per_vertex == std::vector<std::size_t>{0, 2, 2, 2, 2, 0});
  CHECK(table.total == 8);
}

TEST_CASE("a-value table invariants over all trees on 7 vertices") {
  for_each_labelled_tree(7, [](const Tree& t) {
    const auto table = a_values(t);
    for (VertexId v = 0; v < t.size(); ++v) {
      CHECK(table.per_vertex[v] == a_by_cases(t, v));
      CHECK(table.per_vertex[v] % 2 == 0);
      CHECK((table.per_vertex[v] == 0) == (t.degree(v) == 1));
    }
    CHECK(table.total % 2 == 0);
    CHECK(table.total >= 2);
    return true;
  });
}

TEST_CASE("prune examples") {
  const auto k13 = prune(make_star(3));
  CHECK(serialize_graph(k13) == "0 2\n0 3\n");

  const auto p6 = make_path(6);
  CHECK(prune(p6) == p6);

  // legs 1,1,2: hub 0 with leaves 1, 2 and the leg 3-4.
  const auto s112 = spider({1, 1, 2});
  const auto pruned = prune(s112);
  CHECK(pruned.size() == 4);
  CHECK(serialize_graph(pruned) == "0 2\n0 3\n3 4\n");
  CHECK(twigs(s112).size() == 2);
  CHECK(leaves(s112).size() == 3);
  CHECK(pruned.size() == s112.size() + 2 - 3);

  // Smallest eligible leaf goes first.
  const auto k14 = prune(make_star(4));
  CHECK(serialize_graph(k14) == "0 3\n0 4\n");
}

TEST_CASE("prune invariants over all trees on 7 vertices") {
  for_each_labelled_tree(7, [](const Tree& t) {
    const auto pruned = prune(t);
    CHECK(prune(pruned) == pruned);
    for (VertexId v : internal_vertices(t)) {
      const auto id = pruned.find_label(t.label(v));
      REQUIRE(id);
      CHECK(pruned.degree(*id) >= 2);
    }
    // No leaf of the result hangs off a vertex of degree >= 3.
    for (VertexId v : leaves(pruned)) CHECK(pruned.degree(pruned.neighbours(v)[0]) <= 2);
    if (!is_star(t)) {
      CHECK(pruned.size() == t.size() + twigs(t).size() - leaves(t).size());
      if (!contains_tstar(t)) {
        CHECK(a_total(pruned) == 2 * pruned.size() - 4);
        CHECK(a_total(pruned) == a_total(t));
      }
    }
    return true;
  });
}

TEST_CASE("capture_time_formula") {
  CHECK(capture_time_formula(make_path(4)) == CaptureTime::finite(4));
  CHECK(capture_time_formula(canonical_tstar()) == CaptureTime::infinite());
  CHECK(capture_time_formula(make_path(6)) == CaptureTime::finite(8));
  CHECK(to_capture_time(min_capture_time(make_path(6))) == CaptureTime::finite(8));
  CHECK(capture_time_formula(make_path(2)) == CaptureTime::finite(2));
  CHECK(capture_time_formula(make_star(5)) == CaptureTime::finite(2));
  CHECK(capture_time_formula(make_path(3)) == CaptureTime::finite(2));
  CHECK(capture_time_formula(spider({2, 2, 2})) == CaptureTime::finite(10));

  try {
    capture_time_formula(make_path(1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Infeasible);
  }
  CHECK(CaptureTime::infinite().to_string() == "infinite");
  CHECK(CaptureTime::finite(6).to_string() == "6");
}

TEST_CASE("formula equals A(T) on T*-free non-stars") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for_each_labelled_tree(n, [](const Tree& t) {
      if (contains_tstar(t)) return true;
      const auto m = capture_time_formula(t);
      REQUIRE(m.is_finite());
      CHECK(m.steps() == (is_star(t) ? 2 : a_total(t)));
      CHECK(m.steps() % 2 == 0);
      return true;
    });
  }
}
