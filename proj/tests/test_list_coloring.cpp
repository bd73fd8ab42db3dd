#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "ulcf/disjoint_set.hpp"
#include "ulcf/error.hpp"
#include "ulcf/list_coloring.hpp"
#include "ulcf/symmetry.hpp"

using namespace ulcf;

namespace {

ListAssignment random_lists(int n, int k, int universe, std::mt19937_64& rng) {
  std::vector<std::vector<int>> lists(n);
  for (auto& l : lists) {
    std::vector<int> pool(universe);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    l.assign(pool.begin(), pool.begin() + k);
  }
  return ListAssignment(lists);
}

// P3 with lists {1,2}, {1,2}, {2,3}.
const ListAssignment kP3Lists({{1, 2}, {1, 2}, {2, 3}});

}  // namespace

TEST_CASE("disjoint set merges and counts") {
  DisjointSet dsu(5);
  CHECK(dsu.set_count() == 5);
  CHECK(dsu.unite(0, 1));
  CHECK_FALSE(dsu.unite(1, 0));
  CHECK(dsu.unite(3, 4));
  CHECK(dsu.unite(1, 4));
  CHECK(dsu.set_count() == 2);
  CHECK(dsu.find(0) == dsu.find(3));
  CHECK(dsu.find(2) != dsu.find(0));
}

TEST_CASE("list assignment construction and formats") {
  const ListAssignment l({{2, 1, 2}, {0}});
  CHECK(l.vertex_count() == 2);
  CHECK(l[0].size() == 2);
  CHECK(l.has(0, 1));
  CHECK_FALSE(l.has(1, 1));
  CHECK_FALSE(l.uniform_size().has_value());
  CHECK(ListAssignment::constant(3, 2).uniform_size() == 2);
  CHECK(ListAssignment::constant(3, 2).color_count() == 2);
  CHECK_THROWS_AS(ListAssignment(std::vector<std::vector<int>>{{256}}), InvalidArgument);
  CHECK_THROWS_AS(ListAssignment(std::vector<std::vector<int>>{{-1}}), InvalidArgument);

  const auto parsed = ListAssignment::parse("1:2,3;0:1,2");
  CHECK(parsed == ListAssignment({{1, 2}, {2, 3}}));
  CHECK(ListAssignment::parse(parsed.to_string()) == parsed);
  CHECK(ListAssignment::from_json(parsed.to_json()) == parsed);
  CHECK(parsed.to_json().dump() == R"({"lists":[[1,2],[2,3]]})");
  CHECK_THROWS_AS(ListAssignment::parse("0:1;0:2"), ParseError);
  CHECK_THROWS_AS(ListAssignment::parse("0:1;2:2"), ParseError);
  CHECK_THROWS_AS(ListAssignment::parse("0:x"), ParseError);
}

TEST_CASE("permuting and relabeling lists") {
  const auto pi = Permutation::from_images({1, 2, 0});
  const auto moved = kP3Lists.permuted(pi);
  for (int v = 0; v < 3; ++v) CHECK(std::ranges::equal(moved[v], kP3Lists[pi(v)]));
  const std::vector<int> relabel{0, 5, 6, 7};
  CHECK(kP3Lists.relabeled(relabel) == ListAssignment({{5, 6}, {5, 6}, {6, 7}}));
  const std::vector<int> clash{0, 1, 1, 2};
  CHECK_THROWS_AS(kP3Lists.relabeled(clash), InvalidArgument);
}

TEST_CASE("list coloring counts match the odometer") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 3);
    const Graph g = support::random_graph(n, 0.5, rng);
    const auto lists = random_lists(n, k, k + 2, rng);
    const auto expected = oracle::list_colorings(support::to_matrix(g), support::to_assignment(lists));
    CHECK(count_list_colorings(g, lists) == expected.size());
    const auto enumerated = enumerate_list_colorings(g, lists);
    REQUIRE(enumerated.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(std::equal(enumerated[i].begin(), enumerated[i].end(), expected[i].begin()));
    }
  }
}

TEST_CASE("capped counting stops just past the cap") {
  const auto lists = ListAssignment::constant(6, 3);
  CHECK(count_list_colorings(Graph(6), lists) == 729);
  CHECK(count_list_colorings_capped(Graph(6), lists, 100) == 101);
  CHECK(count_list_colorings_capped(Graph(6), lists, 1000) == 729);
  CHECK_THROWS_AS(count_list_colorings(Graph(2), ListAssignment({{0}, {}})), InvalidArgument);
  CHECK_THROWS_AS(count_list_colorings(Graph(3), ListAssignment({{0}, {1}})), InvalidArgument);
}

TEST_CASE("fixed colorings by quotient equal direct filtering") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Graph g = support::random_graph(n, 0.35, rng);
    const auto lists = random_lists(n, 2 + static_cast<int>(rng() % 2), 4, rng);
    for (const auto& pi : automorphism_group(g).elements) {
      std::uint64_t direct = 0;
      for (const auto& f : enumerate_list_colorings(g, lists)) direct += compose(f, pi) == f;
      CHECK(fixed_list_coloring_count(g, pi, lists) == direct);
    }
  }
}

TEST_CASE("quotient list assignment intersects along cycles") {
  const Graph g(3);
  const auto pi = Permutation::from_images({2, 1, 0});
  const auto [q, lists] = quotient_list_assignment(g, pi, ListAssignment({{0, 1}, {2}, {1, 3}}));
  CHECK(q.order() == 2);
  CHECK(lists == ListAssignment({{1}, {2}}));
  CHECK_THROWS_AS(quotient_list_assignment(support::complete(2), Permutation::from_images({1, 0}),
                                           ListAssignment::constant(2, 2)),
                  PreconditionError);
  // An adjacent pair on a cycle forces zero fixed colorings.
  CHECK(fixed_list_coloring_count(support::complete(2), Permutation::from_images({1, 0}),
                                  ListAssignment::constant(2, 3)) == 0);
}

TEST_CASE("equivalence classes agree with orbit search") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Graph g = support::random_graph(n, 0.35, rng);
    const auto lists = random_lists(n, 1 + static_cast<int>(rng() % 3), 4, rng);
    const AutGroup aut = automorphism_group(g);
    const auto expected = oracle::orbit_count(support::to_matrix(g), support::to_assignment(lists));
    CHECK(unlabeled_list_coloring_count(g, aut, lists) == expected);
    const auto classes = equivalence_classes(g, aut, lists);
    CHECK(classes.class_count == expected);
    CHECK(std::is_sorted(classes.colorings.begin(), classes.colorings.end()));
    CHECK(burnside_lower_bound(g, aut, lists) <= Rational(static_cast<unsigned long>(expected)));
  }
}

TEST_CASE("unlabeled list counts: worked examples") {
  const Graph p3 = support::path(3);
  const AutGroup aut = automorphism_group(p3);
  CHECK(count_list_colorings(p3, kP3Lists) == 3);
  CHECK(unlabeled_list_coloring_count(p3, aut, kP3Lists) == 3);
  CHECK(burnside_lower_bound(p3, aut, kP3Lists) == 2);
  CHECK(fixed_list_coloring_count(p3, Permutation::from_images({2, 1, 0}), kP3Lists) == 1);

  const Graph pair(2);
  const ListAssignment disjoint({{0}, {1}});
  CHECK(unlabeled_list_coloring_count(pair, automorphism_group(pair), disjoint) == 1);
  CHECK(burnside_lower_bound(pair, automorphism_group(pair), disjoint) == Rational(1, 2));

  // Constant lists give Burnside equality.
  const auto constant = ListAssignment::constant(4, 3);
  const Graph c4 = support::cycle(4);
  CHECK(Rational(static_cast<unsigned long>(
            unlabeled_list_coloring_count(c4, automorphism_group(c4), constant))) ==
        burnside_lower_bound(c4, automorphism_group(c4), constant));
}

TEST_CASE("compose applies the permutation on the right") {
  const Coloring f{7, 8, 9};
  const auto pi = Permutation::from_images({1, 2, 0});
  CHECK(compose(f, pi) == Coloring{8, 9, 7});
}
