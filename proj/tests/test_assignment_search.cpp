#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "ulcf/assignment_search.hpp"
#include "ulcf/chromatic.hpp"
#include "ulcf/error.hpp"

using namespace ulcf;

namespace {

// Pattern counts for n = 1..5, k = 1..4, from a separate memoized recursion
// over the same cell constraints.
constexpr std::uint64_t kPatternCounts[5][4] = {
    {1, 1, 1, 1},
    {2, 3, 4, 5},
    {5, 16, 39, 81},
    {15, 139, 862, 4079},
    {52, 1750, 35775, 507549},
};

VertexSet image_of(VertexSet s, const Permutation& pi) {
  VertexSet out = 0;
  for (int v = 0; v < pi.size(); ++v) {
    if (contains(s, v)) out |= singleton(pi(v));
  }
  return out;
}

}  // namespace

TEST_CASE("pattern counts") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 4; ++k) {
      if (n == 5 && k == 4) continue;  // covered by the acceptance run
      std::uint64_t count = 0;
      for_each_pattern(n, k, nullptr, [&](const IntersectionPattern&) { ++count; });
      CHECK(count == kPatternCounts[n - 1][k - 1]);
      CHECK(estimated_pattern_count(n, k) >= static_cast<double>(count));
    }
  }
}

TEST_CASE("every pattern gives each vertex exactly k colors") {
  for (const auto& p : enumerate_patterns(4, 3)) {
    for (int v = 0; v < 4; ++v) {
      int total = 0;
      for (VertexSet s = 1; s < 16; ++s) {
        if (contains(s, v)) total += p.at(s);
      }
      CHECK(total == 3);
    }
  }
}

TEST_CASE("patterns are produced in lexicographic order without repeats") {
  const auto patterns = enumerate_patterns(3, 3);
  for (std::size_t i = 1; i < patterns.size(); ++i) {
    CHECK(patterns[i - 1].cells < patterns[i].cells);
  }
}

TEST_CASE("materialize and pattern_of are inverse") {
  for (const auto& p : enumerate_patterns(3, 3)) {
    const auto lists = materialize(p);
    CHECK(lists.uniform_size() == 3);
    CHECK(pattern_of(lists) == p);
  }
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<int>> raw(4);
    for (auto& l : raw) {
      std::vector<int> pool(9);
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      l.assign(pool.begin(), pool.begin() + 3);
    }
    const ListAssignment lists(raw);
    const Graph g = support::random_graph(4, 0.5, rng);
    // Counting depends only on the pattern.
    CHECK(count_list_colorings(g, materialize(pattern_of(lists))) ==
          count_list_colorings(g, lists));
  }
}

TEST_CASE("materialize fills larger cells first") {
  IntersectionPattern p{2, 2, {1, 1, 1}};
  CHECK(materialize(p) == ListAssignment({{0, 1}, {0, 2}}));
  CHECK(p.to_json().dump() == R"({"cells":{"01":1,"10":1,"11":1},"k":2,"n":2})");
}

TEST_CASE("symmetry reduction keeps one pattern per orbit") {
  for (const Graph& g : {support::cycle(4), Graph(4), support::paw(), support::path(4)}) {
    const AutGroup aut = automorphism_group(g);
    for (int k = 1; k <= 3; ++k) {
      std::set<std::vector<int>> orbit_minima;
      for (const auto& p : enumerate_patterns(4, k)) {
        std::vector<int> best = p.cells;
        for (const auto& pi : aut.elements) {
          std::vector<int> moved(p.cells.size());
          for (VertexSet s = 1; s <= p.cells.size(); ++s) moved[s - 1] = p.at(image_of(s, pi));
          best = std::min(best, moved);
        }
        orbit_minima.insert(best);
      }
      const auto reduced = enumerate_patterns(4, k, &aut);
      CHECK(reduced.size() == orbit_minima.size());
      for (const auto& p : reduced) CHECK(orbit_minima.count(p.cells) == 1);
    }
  }
}

TEST_CASE("list color functions match raw-assignment minimization") {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 3; ++n) {
    const int slots = n * (n - 1) / 2;
    for (int bits = 0; bits < (1 << slots); ++bits) {
      std::vector<Edge> edges;
      int slot = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++slot) {
          if ((bits >> slot) & 1) edges.emplace_back(u, v);
        }
      }
      graphs.push_back(Graph::from_edges(n, edges));
    }
  }
  for (const auto& g : graphs) {
    for (int k = 1; k <= (g.order() <= 2 ? 3 : 2); ++k) {
      const auto m = support::to_matrix(g);
      CHECK(list_color_function(g, k).value == oracle::list_function(m, k, false));
      CHECK(unlabeled_list_color_function(g, k).value == oracle::list_function(m, k, true));
    }
  }
}

TEST_CASE("list color function frozen values") {
  const Graph p4 = support::path(4);
  const Graph c4 = support::cycle(4);
  CHECK(list_color_function(p4, 2).value == 2);
  CHECK(unlabeled_list_color_function(p4, 2).value == 1);
  CHECK(list_color_function(c4, 2).value == 2);
  CHECK(unlabeled_list_color_function(c4, 2).value == 1);
  CHECK(unlabeled_list_color_function(Graph(3), 2).value == 4);
  CHECK(unlabeled_list_color_function(Graph(3), 3).value == 10);
  CHECK(list_color_function(support::complete(3), 3).value == 6);
  CHECK(unlabeled_list_color_function(support::complete(2), 2).value == 1);
  for (int k = 1; k <= 3; ++k) {
    CHECK(unlabeled_list_color_function(Graph(2), k).value ==
          static_cast<std::uint64_t>(k * (k + 1) / 2));
  }
  const Graph k1_p3 = disjoint_union(Graph(1), support::path(3));
  CHECK(unlabeled_list_color_function(k1_p3, 2).value == 4);
  const Graph k1_k2 = disjoint_union(Graph(1), support::complete(2));
  CHECK(unlabeled_list_color_function(k1_k2, 2).value == 2);
  CHECK(unlabeled_list_color_function(support::paw(), 2).value == 0);
}

TEST_CASE("witnesses attain the minimum and worker count does not matter") {
  const Graph g = support::paw();
  for (int k = 2; k <= 3; ++k) {
    const auto serial = list_color_function(g, k, {1, 16});
    const auto parallel = list_color_function(g, k, {3, 16});
    CHECK(serial.value == parallel.value);
    CHECK(serial.witnesses == parallel.witnesses);
    CHECK(serial.exhausted);
    CHECK_FALSE(serial.witnesses.empty());
    for (const auto& w : serial.witnesses) {
      CHECK(count_list_colorings(g, materialize(w)) == serial.value);
    }
    const auto unlabeled = unlabeled_list_color_function(g, k, {1, 16});
    CHECK(unlabeled.to_json().dump() == unlabeled_list_color_function(g, k, {4, 16}).to_json().dump());
  }
}

TEST_CASE("searches never exceed the chromatic polynomial") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = support::random_graph(4, 0.5, rng);
    for (int k = 1; k <= 3; ++k) {
      const Rational p = chromatic_polynomial(g).evaluate(static_cast<long>(k));
      const Rational pu = unlabeled_chromatic_polynomial(g).evaluate(static_cast<long>(k));
      CHECK(Rational(static_cast<unsigned long>(list_color_function(g, k).value)) <= p);
      CHECK(Rational(static_cast<unsigned long>(unlabeled_list_color_function(g, k).value)) <= pu);
    }
  }
}

TEST_CASE("search guards refuse oversized instances") {
  CHECK_THROWS_AS(list_color_function(Graph(6), 2), LimitExceeded);
  CHECK_THROWS_AS(list_color_function(Graph(3), 5), LimitExceeded);
  CHECK_THROWS_AS(enumerate_patterns(6, 1), LimitExceeded);
  try {
    enumerate_patterns(5, 5);
    FAIL("expected refusal");
  } catch (const LimitExceeded& e) {
    CHECK(std::string(e.what()).find("patterns") != std::string::npos);
  }
}

TEST_CASE("threshold table") {
  const auto table = threshold_search(Graph(2), 4);
  REQUIRE(table.rows.size() == 4);
  CHECK(table.equal_from == 1);
  CHECK(table.rows[3].list_value == 10u);
  CHECK(table.to_json()["label"] == kEmpiricalLabel);

  const auto refused = threshold_search(Graph(3), 5);
  CHECK_FALSE(refused.rows[4].list_value.has_value());
  CHECK_FALSE(refused.rows[4].error.empty());
}
