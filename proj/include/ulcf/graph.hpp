#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ulcf {

inline constexpr int kMaxVertices = 16;

/// Bit v set <=> vertex v is a member.
using VertexSet = std::uint32_t;

using Edge = std::pair<int, int>;

inline int popcount(VertexSet s) { return __builtin_popcount(s); }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet singleton(int v) { return VertexSet{1} << v; }
inline VertexSet all_vertices(int n) { return (VertexSet{1} << n) - 1; }

/// Simple undirected graph on vertices 0..n-1 (n <= 16), stored as one
/// neighborhood bit-vector per vertex. Immutable once built.
class Graph {
 public:
  /// The empty graph (n = 0).
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws InvalidArgument on loops or endpoints >= n. Duplicate edges
  /// collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Rows must be symmetric and irreflexive.
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  int order() const { return n_; }
  int size() const;

  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Graph without_edge(int u, int v) const;

  /// Merges v into u (u keeps its index, vertices above v shift down by one).
  Graph contract(int u, int v) const;

  /// Induced subgraph on the given vertex set, relabeled in increasing order.
  Graph induced(VertexSet vertices) const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// A bijection on {0..n-1} together with its canonical cycle decomposition
/// (each cycle starts at its minimum, cycles sorted by minimum, 1-cycles
/// included).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);

  /// Throws InvalidArgument unless `image` is a bijection on {0..n-1}.
  static Permutation from_images(std::vector<int> image);

  /// Builds the permutation from disjoint cycles; unspecified points are
  /// fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  std::span<const int> images() const { return image_; }
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  int cycle_count() const { return static_cast<int>(cycles_.size()); }
  bool is_identity() const;

  /// (this * other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  std::string to_string() const;

  bool operator==(const Permutation& other) const { return image_ == other.image_; }
  std::strong_ordering operator<=>(const Permutation& other) const {
    return image_ <=> other.image_;
  }

 private:
  explicit Permutation(std::vector<int> image);

  std::vector<int> image_;
  std::vector<std::vector<int>> cycles_;
};

std::vector<std::vector<int>> cycle_decomposition(const Permutation& pi);

// ---------------------------------------------------------------------------
// Interchange formats

/// graph6, short form (n <= 62; here n <= 16). An optional ">>graph6<<"
/// header and one trailing newline are accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

Graph from_edge_list(int n, std::span<const Edge> edges);

/// "n: u-v, u-v, ..." ("n:" alone for an edgeless graph).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// ---------------------------------------------------------------------------
// Permutations acting on graphs

/// pi G: the graph with edge set { pi(u) pi(v) : uv in E(G) }.
Graph apply_permutation(const Graph& g, const Permutation& pi);
bool is_automorphism(const Graph& g, const Permutation& pi);

/// The quotient G : pi on the cycles of pi (vertex i of the result is cycle i
/// of the canonical decomposition). Throws PreconditionError if pi is not an
/// automorphism of g.
Graph quotient(const Graph& g, const Permutation& pi);

/// True iff every cycle of pi is an independent set of g.
bool cycles_all_independent(const Graph& g, const Permutation& pi);

// ---------------------------------------------------------------------------
// Structural predicates and constructions

bool is_point_determining(const Graph& g);
bool is_connected(const Graph& g);
bool is_chordal(const Graph& g);
bool has_triangle(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Adds two nonadjacent vertices x = n, y = n+1, both joined to all of V(g).
Graph cone_two_nonadjacent(const Graph& g);

// ---------------------------------------------------------------------------
// Canonical labeling

/// Isomorphism-invariant ordered partition of V(g) produced by iterated
/// neighbor-count refinement starting from the unit partition. Vertex colors
/// are cell indices.
std::vector<int> refined_colors(const Graph& g);

/// A labeling `order` (order[i] = original vertex placed at position i) such
/// that relabeling g by it yields the canonical representative.
std::vector<int> canonical_labeling(const Graph& g);

/// Byte string: n, then the strict lower triangle of the canonically
/// relabeled adjacency matrix packed row-major. Equal iff isomorphic.
std::string canonical_form(const Graph& g);

/// Inverse of canonical_form's packing.
Graph graph_from_canonical_form(std::string_view form);

}  // namespace ulcf
