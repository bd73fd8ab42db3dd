#include "ulcf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "ulcf/error.hpp"

namespace ulcf {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw LimitExceeded("vertex count " + std::to_string(n) +
                        " outside supported range 0.." +
                        std::to_string(kMaxVertices));
  }
}

// Removes bit v from s and shifts the higher bits down by one.
VertexSet drop_bit(VertexSet s, int v) {
  const VertexSet low = s & ((VertexSet{1} << v) - 1);
  const VertexSet high = (s >> (v + 1)) << v;
  return low | high;
}

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    const int v = __builtin_ctz(s);
    s &= s - 1;
    f(v);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge " + std::to_string(u) + "-" +
                            std::to_string(v) + " has an endpoint outside 0.." +
                            std::to_string(n - 1));
    }
    if (u == v) {
      throw InvalidArgument("loop at vertex " + std::to_string(u));
    }
    g.adj_[u] |= singleton(v);
    g.adj_[v] |= singleton(u);
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " adjacency rows");
  }
  Graph g(n);
  const VertexSet mask = all_vertices(n);
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~mask) != 0 || contains(rows[v], v)) {
      throw InvalidArgument("adjacency row " + std::to_string(v) +
                            " is out of range or has a loop");
    }
    g.adj_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) {
        throw InvalidArgument("adjacency rows are not symmetric");
      }
    }
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] >> (u + 1) << (u + 1),
                    [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  g.adj_[u] &= ~singleton(v);
  g.adj_[v] &= ~singleton(u);
  return g;
}

Graph Graph::contract(int u, int v) const {
  if (u == v) throw InvalidArgument("cannot contract a vertex with itself");
  Graph g(n_ - 1);
  const VertexSet merged = (adj_[u] | adj_[v]) & ~singleton(u) & ~singleton(v);
  for (int w = 0; w < n_; ++w) {
    if (w == v) continue;
    VertexSet row = adj_[w];
    if (w == u) {
      row = merged;
    } else if (contains(row, v)) {
      row = (row & ~singleton(v)) | singleton(u);
    }
    g.adj_[w < v ? w : w - 1] = drop_bit(row, v);
  }
  return g;
}

Graph Graph::induced(VertexSet vertices) const {
  std::vector<int> keep;
  for_each_vertex(vertices & all_vertices(n_), [&](int v) { keep.push_back(v); });
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) g.adj_[i] |= singleton(static_cast<int>(j));
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  cycles_ = cycle_decomposition(*this);
}

Permutation Permutation::identity(int n) {
  check_order(n);
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::from_images(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  check_order(n);
  std::vector<bool> seen(n, false);
  for (int x : image) {
    if (x < 0 || x >= n || seen[x]) {
      throw InvalidArgument("image array is not a bijection on 0.." +
                            std::to_string(n - 1));
    }
    seen[x] = true;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  check_order(n);
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int v = cycle[i];
      if (v < 0 || v >= n || used[v]) {
        throw InvalidArgument("cycles are not disjoint or out of range");
      }
      used[v] = true;
      image[v] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw InvalidArgument("permutation size mismatch");
  std::vector<int> image(size());
  for (int v = 0; v < size(); ++v) image[v] = image_[other.image_[v]];
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> image(size());
  for (int v = 0; v < size(); ++v) image[image_[v]] = v;
  return Permutation(std::move(image));
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles_) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& pi) {
  const int n = pi.size();
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(n, false);
  // Scanning by increasing start vertex gives min-rotation and sorted order.
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = pi(v)) {
      seen[v] = true;
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int graph6_body_length(int n) {
  const int bits = n * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    base = kGraph6Header.size();
    text.remove_prefix(kGraph6Header.size());
  }
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(base, "empty graph6 input");

  const auto head = static_cast<unsigned char>(text[0]);
  if (head == 126) {
    throw ParseError(base, "long-form graph6 header: vertex count exceeds 16");
  }
  if (head < 63 || head > 126) {
    throw ParseError(base, "invalid graph6 size byte");
  }
  const int n = head - 63;
  if (n > kMaxVertices) {
    throw ParseError(base, "graph6 vertex count " + std::to_string(n) +
                               " exceeds 16");
  }
  const std::size_t expected = 1 + graph6_body_length(n);
  for (std::size_t i = 1; i < text.size() && i < expected; ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError(base + i, "invalid graph6 byte");
  }
  if (text.size() < expected) {
    throw ParseError(base + text.size(), "truncated graph6 input");
  }
  if (text.size() > expected) {
    throw ParseError(base + expected, "trailing garbage after graph6 data");
  }

  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  const int total_bits = static_cast<int>(expected - 1) * 6;
  for (; bit < total_bits; ++bit) {
    const int byte = text[1 + bit / 6] - 63;
    if ((byte >> (5 - bit % 6)) & 1) {
      throw ParseError(base + 1 + bit / 6, "nonzero graph6 padding bits");
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1 + graph6_body_length(n), static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) {
        out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list text

Graph from_edge_list(int n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
  }
  int integer() {
    skip_space();
    int value = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || value < 0) {
      throw ParseError(pos_, "expected a nonnegative integer");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Cursor cur(text);
  const int n = cur.integer();
  if (n > kMaxVertices) {
    throw ParseError(0, "vertex count " + std::to_string(n) + " exceeds 16");
  }
  cur.expect(':');
  std::vector<Edge> edges;
  if (!cur.at_end()) {
    do {
      const int u = cur.integer();
      cur.expect('-');
      const int v = cur.integer();
      edges.emplace_back(u, v);
    } while (cur.accept(','));
  }
  if (!cur.at_end()) throw ParseError(cur.pos(), "unexpected trailing input");
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out += first ? " " : ", ";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutations acting on graphs

Graph apply_permutation(const Graph& g, const Permutation& pi) {
  if (pi.size() != g.order()) {
    throw InvalidArgument("permutation acts on " + std::to_string(pi.size()) +
                          " points but graph has " + std::to_string(g.order()) +
                          " vertices");
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(pi(u), pi(v));
  return Graph::from_edges(g.order(), edges);
}

bool is_automorphism(const Graph& g, const Permutation& pi) {
  return pi.size() == g.order() && apply_permutation(g, pi) == g;
}

namespace {

void require_automorphism(const Graph& g, const Permutation& pi) {
  if (!is_automorphism(g, pi)) {
    throw PreconditionError("permutation " + pi.to_string() +
                            " is not an automorphism of the graph");
  }
}

}  // namespace

Graph quotient(const Graph& g, const Permutation& pi) {
  require_automorphism(g, pi);
  const auto& cycles = pi.cycles();
  const int s = static_cast<int>(cycles.size());
  std::vector<int> cycle_of(g.order());
  for (int i = 0; i < s; ++i) {
    for (int v : cycles[i]) cycle_of[v] = i;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (cycle_of[u] != cycle_of[v]) edges.emplace_back(cycle_of[u], cycle_of[v]);
  }
  return Graph::from_edges(s, edges);
}

bool cycles_all_independent(const Graph& g, const Permutation& pi) {
  require_automorphism(g, pi);
  for (const auto& cycle : pi.cycles()) {
    VertexSet members = 0;
    for (int v : cycle) members |= singleton(v);
    for (int v : cycle) {
      if ((g.neighbors(v) & members) != 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_point_determining(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.neighbors(u) == g.neighbors(v)) return false;
    }
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("connectivity of the empty graph");
  VertexSet reached = singleton(0);
  VertexSet frontier = reached;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all_vertices(g.order());
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination ordering iff g is chordal.
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<int> visit_index(n, -1);
  std::vector<int> visit_order;
  VertexSet visited = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!contains(visited, v) && (pick < 0 || weight[v] > weight[pick])) pick = v;
    }
    visited |= singleton(pick);
    visit_index[pick] = step;
    visit_order.push_back(pick);
    for_each_vertex(g.neighbors(pick) & ~visited, [&](int w) { ++weight[w]; });
  }
  VertexSet earlier = 0;
  for (int v : visit_order) {
    const VertexSet back = g.neighbors(v) & earlier;
    if (back != 0) {
      int latest = -1;
      for_each_vertex(back, [&](int u) {
        if (latest < 0 || visit_index[u] > visit_index[latest]) latest = u;
      });
      const VertexSet rest = back & ~singleton(latest);
      if ((rest & ~g.neighbors(latest)) != 0) return false;
    }
    earlier |= singleton(v);
  }
  return true;
}

bool has_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if ((g.neighbors(u) & g.neighbors(v)) != 0) return true;
  }
  return false;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  if (n > kMaxVertices) {
    throw LimitExceeded("disjoint union has " + std::to_string(n) +
                        " vertices; at most 16 supported");
  }
  std::vector<Edge> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(n, edges);
}

Graph cone_two_nonadjacent(const Graph& g) {
  const int n = g.order();
  if (n + 2 > kMaxVertices) {
    throw LimitExceeded("cone over " + std::to_string(n) +
                        " vertices exceeds 16 vertices");
  }
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(v, n);
    edges.emplace_back(v, n + 1);
  }
  return Graph::from_edges(n + 2, edges);
}

// ---------------------------------------------------------------------------
// Canonical labeling

namespace {

using Partition = std::vector<VertexSet>;

// Splits cells by neighbor counts into other cells until the partition is
// equitable. Fragments are ordered by ascending count, so the result depends
// only on the structure of g relative to the input partition.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (popcount(cells[c]) == 1) continue;
        std::map<int, VertexSet> by_count;
        for_each_vertex(cells[c], [&](int v) {
          by_count[popcount(g.neighbors(v) & splitter)] |= singleton(v);
        });
        if (by_count.size() == 1) continue;
        Partition fragments;
        for (const auto& [count, members] : by_count) fragments.push_back(members);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c),
                     fragments.begin(), fragments.end());
        changed = true;
        break;
      }
    }
  }
}

Partition unit_partition(int n) {
  if (n == 0) return {};
  return {all_vertices(n)};
}

bool are_twins(const Graph& g, int u, int v) {
  return (g.neighbors(u) & ~singleton(v)) == (g.neighbors(v) & ~singleton(u));
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Partition p = unit_partition(g_.order());
    descend(std::move(p));
    return best_order_;
  }

 private:
  void descend(Partition p) {
    refine(g_, p);
    std::size_t target = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (popcount(p[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == p.size()) {
      leaf(p);
      return;
    }
    const VertexSet cell = p[target];
    std::vector<int> tried;
    for_each_vertex(cell, [&](int v) {
      // Swapping twins is an automorphism fixing every individualized
      // vertex, so their subtrees produce the same leaves.
      for (int u : tried) {
        if (are_twins(g_, u, v)) return;
      }
      tried.push_back(v);
      Partition q = p;
      q[target] = singleton(v);
      q.insert(q.begin() + static_cast<std::ptrdiff_t>(target) + 1,
               cell & ~singleton(v));
      descend(std::move(q));
    });
  }

  void leaf(const Partition& p) {
    const int n = g_.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = __builtin_ctz(p[i]);
    std::vector<VertexSet> rows(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        if (g_.adjacent(order[i], order[j])) rows[i] |= VertexSet{1} << (kMaxVertices - 1 - j);
      }
    }
    if (best_order_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_order_ = std::move(order);
    }
  }

  const Graph& g_;
  std::vector<int> best_order_;
  std::vector<VertexSet> best_rows_;
};

}  // namespace

std::vector<int> refined_colors(const Graph& g) {
  Partition p = unit_partition(g.order());
  refine(g, p);
  std::vector<int> color(g.order());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for_each_vertex(p[i], [&](int v) { color[v] = static_cast<int>(i); });
  }
  return color;
}

std::vector<int> canonical_labeling(const Graph& g) {
  return CanonicalSearch(g).run();
}

std::string canonical_form(const Graph& g) {
  const int n = g.order();
  const std::vector<int> order = canonical_labeling(g);
  const int bits = n * (n - 1) / 2;
  std::string out(1 + (bits + 7) / 8, '\0');
  out[0] = static_cast<char>(n);
  int bit = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j, ++bit) {
      if (g.adjacent(order[i], order[j])) {
        out[1 + bit / 8] = static_cast<char>(out[1 + bit / 8] | (0x80 >> (bit % 8)));
      }
    }
  }
  return out;
}

Graph graph_from_canonical_form(std::string_view form) {
  if (form.empty()) throw ParseError(0, "empty canonical form");
  const int n = static_cast<unsigned char>(form[0]);
  check_order(n);
  const int bits = n * (n - 1) / 2;
  if (form.size() != static_cast<std::size_t>(1 + (bits + 7) / 8)) {
    throw ParseError(form.size(), "canonical form has the wrong length");
  }
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j, ++bit) {
      if (static_cast<unsigned char>(form[1 + bit / 8]) & (0x80 >> (bit % 8))) {
        edges.emplace_back(j, i);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace ulcf
