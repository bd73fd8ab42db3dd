#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "ulcf/graph.hpp"
#include "ulcf/list_coloring.hpp"

namespace support {

inline ulcf::Graph to_graph(const oracle::Matrix& m) {
  const auto edges = oracle::edges_of(m);
  return ulcf::Graph::from_edges(static_cast<int>(m.size()), edges);
}

inline oracle::Matrix to_matrix(const ulcf::Graph& g) {
  oracle::Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) m[u][v] = g.adjacent(u, v);
  }
  return m;
}

inline oracle::Assignment to_assignment(const ulcf::ListAssignment& lists) {
  oracle::Assignment out(lists.vertex_count());
  for (int v = 0; v < lists.vertex_count(); ++v) {
    for (const auto c : lists[v]) out[v].push_back(c);
  }
  return out;
}

inline ulcf::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  return to_graph(oracle::random_matrix(n, p, rng));
}

inline ulcf::Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  std::shuffle(image.begin(), image.end(), rng);
  return ulcf::Permutation::from_images(image);
}

inline ulcf::Graph path(int n) {
  std::vector<ulcf::Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return ulcf::Graph::from_edges(n, edges);
}

inline ulcf::Graph cycle(int n) {
  std::vector<ulcf::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return ulcf::Graph::from_edges(n, edges);
}

inline ulcf::Graph complete(int n) {
  std::vector<ulcf::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return ulcf::Graph::from_edges(n, edges);
}

// Triangle 0-1-2 with pendant 3 on vertex 2.
inline ulcf::Graph paw() {
  return ulcf::Graph::from_edges(4, std::vector<ulcf::Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}});
}

}  // namespace support
