#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ulcf/graph.hpp"
#include "ulcf/polynomial.hpp"
#include "ulcf/symmetry.hpp"

namespace ulcf {

using Color = std::uint8_t;
inline constexpr int kMaxColors = 256;

/// Per-vertex sorted color lists. Lists may be empty only as the output of
/// quotient_list_assignment; counting operations reject them.
class ListAssignment {
 public:
  ListAssignment() = default;

  /// Sorts each list and collapses duplicates. Colors must lie in [0, 256).
  explicit ListAssignment(const std::vector<std::vector<int>>& lists);

  /// Every vertex gets {0, ..., k-1}.
  static ListAssignment constant(int n, int k);

  int vertex_count() const { return static_cast<int>(lists_.size()); }
  std::span<const Color> operator[](int v) const { return lists_[v]; }
  bool has(int v, Color c) const;

  /// The common list size if every list has the same size.
  std::optional<int> uniform_size() const;

  /// Number of distinct colors used anywhere.
  int color_count() const;

  /// L o pi: vertex v receives the list of pi(v).
  ListAssignment permuted(const Permutation& pi) const;

  /// Applies an injective color map (old color c becomes relabel[c]).
  ListAssignment relabeled(std::span<const int> relabel) const;

  nlohmann::json to_json() const;
  static ListAssignment from_json(const nlohmann::json& j);

  /// Inline syntax "v:c,c;v:c,c" with every vertex 0..n-1 listed once.
  static ListAssignment parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const ListAssignment& other) const = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

using Coloring = std::vector<Color>;

/// Guard on the product of list sizes for counting.
inline constexpr std::uint64_t kListProductLimit = 100'000'000;
/// Guard on the number of colorings materialized by enumeration.
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

/// P(G,L) by backtracking, vertices taken by ascending list size (ties by
/// index).
std::uint64_t count_list_colorings(const Graph& g, const ListAssignment& lists);

/// As above but stops as soon as the count exceeds `cap`, returning cap + 1.
std::uint64_t count_list_colorings_capped(const Graph& g, const ListAssignment& lists,
                                          std::uint64_t cap);

/// (G:pi, L') with L'(C_i) the intersection of the lists on cycle C_i.
/// Requires pi in Aut(G) with all cycles independent.
std::pair<Graph, ListAssignment> quotient_list_assignment(const Graph& g,
                                                          const Permutation& pi,
                                                          const ListAssignment& lists);

/// P(G, pi, L): proper L-colorings constant on every cycle of pi.
std::uint64_t fixed_list_coloring_count(const Graph& g, const Permutation& pi,
                                        const ListAssignment& lists);

/// All proper L-colorings in lexicographic order (f(0) most significant).
std::vector<Coloring> enumerate_list_colorings(const Graph& g, const ListAssignment& lists);

/// Proper L-colorings grouped into classes of f ~ g <=> f o pi = g for some
/// pi in Aut(G). `colorings` is sorted; `class_of[i]` numbers classes by
/// first appearance.
struct ColoringClasses {
  std::vector<Coloring> colorings;
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;
};

ColoringClasses equivalence_classes(const Graph& g, const AutGroup& aut,
                                    const ListAssignment& lists);

/// u_l(G,L), the number of classes above.
std::uint64_t unlabeled_list_coloring_count(const Graph& g, const AutGroup& aut,
                                            const ListAssignment& lists);

/// (1/|Aut(G)|) * sum over pi of P(G, pi, L).
Rational burnside_lower_bound(const Graph& g, const AutGroup& aut,
                              const ListAssignment& lists);

/// (f o pi)(v) = f(pi(v)).
Coloring compose(const Coloring& f, const Permutation& pi);

}  // namespace ulcf
