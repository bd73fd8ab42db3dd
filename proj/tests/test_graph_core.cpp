#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "ulcf/error.hpp"
#include "ulcf/graph.hpp"

using namespace ulcf;

TEST_CASE("graph construction rejects loops and out-of-range endpoints") {
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(17), LimitExceeded);
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("graph6 encodes and decodes against an independent decoder") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 17);
    const Graph g = support::random_graph(n, 0.5, rng);
    const std::string text = to_graph6(g);
    CHECK(oracle::decode_graph6(text) == support::to_matrix(g));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 spot encodings") {
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(support::path(3)) == "Bg");
  CHECK(to_graph6(support::complete(4)) == "C~");
  CHECK(parse_graph6(">>graph6<<C~\n") == support::complete(4));
  CHECK(parse_graph6("C~\r\n") == support::complete(4));
}

TEST_CASE("graph6 parse errors carry a byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("~?"), ParseError);  // long form
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);  // trailing garbage
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);    // truncated
  CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);
  // n = 2 uses one of six bits; the padding must be zero.
  CHECK_THROWS_AS(parse_graph6("A@"), ParseError);
  try {
    parse_graph6("C~~");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("edge lists round-trip") {
  const Graph g = parse_edge_list("3: 0-1, 1-2");
  CHECK(g == support::path(3));
  CHECK(to_edge_list(g) == "3: 0-1, 1-2");
  CHECK(parse_edge_list("2:") == Graph(2));
  CHECK(to_edge_list(Graph(2)) == "2:");
  CHECK_THROWS_AS(parse_edge_list("3 0-1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3: 0-3"), InvalidArgument);
  CHECK_THROWS_AS(parse_edge_list("3: 0-1,"), ParseError);
}

TEST_CASE("permutations keep canonical cycles") {
  const auto pi = Permutation::from_images({2, 1, 0, 4, 3});
  CHECK(pi.to_string() == "(0 2)(1)(3 4)");
  CHECK(pi.cycle_count() == 3);
  CHECK(cycle_decomposition(pi) == std::vector<std::vector<int>>{{0, 2}, {1}, {3, 4}});
  CHECK(Permutation::from_cycles(5, {{3, 4}, {2, 0}}) == pi);
  CHECK_THROWS_AS(Permutation::from_images({0, 0}), InvalidArgument);
  CHECK(Permutation::identity(4).is_identity());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = support::random_permutation(7, rng);
    const auto b = support::random_permutation(7, rng);
    CHECK(a.compose(a.inverse()).is_identity());
    for (int v = 0; v < 7; ++v) CHECK(a.compose(b)(v) == a(b(v)));
    int covered = 0;
    for (const auto& c : a.cycles()) {
      CHECK(c.front() == *std::min_element(c.begin(), c.end()));
      covered += static_cast<int>(c.size());
    }
    CHECK(covered == 7);
  }
}

TEST_CASE("deletion and contraction") {
  const Graph c4 = support::cycle(4);
  CHECK(c4.without_edge(0, 1).size() == 3);
  const Graph merged = c4.contract(0, 1);
  CHECK(merged.order() == 3);
  CHECK(merged == support::complete(3));
  const Graph tri_from_paw = support::paw().induced(0b0111);
  CHECK(tri_from_paw == support::complete(3));
}

TEST_CASE("quotient by an automorphism") {
  const Graph c4 = support::cycle(4);
  const auto half_turn = Permutation::from_images({2, 3, 0, 1});
  CHECK(is_automorphism(c4, half_turn));
  CHECK(cycles_all_independent(c4, half_turn));
  CHECK(quotient(c4, half_turn) == support::complete(2));

  const auto rotation = Permutation::from_images({1, 2, 3, 0});
  CHECK_FALSE(cycles_all_independent(c4, rotation));
  CHECK(quotient(c4, rotation).order() == 1);

  const auto not_auto = Permutation::from_images({1, 0, 2, 3});
  CHECK_THROWS_AS(quotient(c4, not_auto), PreconditionError);
}

TEST_CASE("apply_permutation is a graph isomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = support::random_graph(6, 0.4, rng);
    const auto pi = support::random_permutation(6, rng);
    const Graph h = apply_permutation(g, pi);
    for (int u = 0; u < 6; ++u) {
      for (int v = 0; v < 6; ++v) CHECK(g.adjacent(u, v) == h.adjacent(pi(u), pi(v)));
    }
  }
  CHECK_THROWS_AS(apply_permutation(Graph(3), Permutation::identity(4)), InvalidArgument);
}

TEST_CASE("structural predicates") {
  CHECK(is_point_determining(support::path(4)));
  CHECK_FALSE(is_point_determining(support::path(3)));
  CHECK_FALSE(is_point_determining(Graph(2)));
  CHECK(is_point_determining(Graph(1)));

  CHECK(is_connected(support::path(5)));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK_THROWS_AS(is_connected(Graph(0)), InvalidArgument);

  CHECK_FALSE(is_chordal(support::cycle(4)));
  CHECK_FALSE(is_chordal(support::cycle(5)));
  CHECK(is_chordal(support::paw()));
  CHECK(is_chordal(support::complete(5)));
  const Graph diamond = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(is_chordal(diamond));

  CHECK(has_triangle(support::paw()));
  CHECK_FALSE(has_triangle(support::cycle(4)));
}

TEST_CASE("unions and cones") {
  const Graph u = disjoint_union(support::complete(2), support::path(3));
  CHECK(u.order() == 5);
  CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(disjoint_union(Graph(9), Graph(8)), LimitExceeded);

  const Graph cone = cone_two_nonadjacent(Graph(1));
  CHECK(cone == Graph::from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}}));
  CHECK(cone_two_nonadjacent(Graph(0)) == Graph(2));
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = support::random_graph(n, 0.45, rng);
    const Graph h = apply_permutation(g, support::random_permutation(n, rng));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(graph_from_canonical_form(canonical_form(g)).size() == g.size());
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const Graph a = support::random_graph(n, 0.5, rng);
    const Graph b = support::random_graph(n, 0.5, rng);
    CHECK((canonical_form(a) == canonical_form(b)) ==
          oracle::isomorphic(support::to_matrix(a), support::to_matrix(b)));
  }
}

TEST_CASE("canonical labeling reproduces the canonical representative") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = support::random_graph(7, 0.5, rng);
    const auto order = canonical_labeling(g);
    std::vector<int> image(7);
    for (int i = 0; i < 7; ++i) image[order[i]] = i;
    const Graph relabeled = apply_permutation(g, Permutation::from_images(image));
    CHECK(relabeled == graph_from_canonical_form(canonical_form(g)));
  }
}

TEST_CASE("refined colors are preserved by automorphisms") {
  const Graph g = support::paw();
  const auto colors = refined_colors(g);
  CHECK(colors[0] == colors[1]);
  CHECK(std::set<int>(colors.begin(), colors.end()).size() == 3);
}
