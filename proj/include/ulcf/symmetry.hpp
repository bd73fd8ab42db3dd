#pragma once

#include <cstddef>
#include <vector>

#include "ulcf/graph.hpp"

namespace ulcf {

/// The full automorphism group as a flat element list: identity first, the
/// rest sorted by image array.
struct AutGroup {
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
  const Permutation& identity() const { return elements.front(); }
};

enum class AutSearch {
  /// Backtracking over color-compatible images with partial-adjacency checks.
  kPruned,
  /// Filter all of S_n. Only for cross-checks on small graphs.
  kExhaustive,
};

/// Throws LimitExceeded if the group has more than `max_elements` elements.
AutGroup automorphism_group(const Graph& g, AutSearch mode = AutSearch::kPruned,
                            std::size_t max_elements = 10'000'000);

struct AutElementInfo {
  bool independent_cycles = false;
  int cycle_count = 0;
};

/// Per-element cycle data for the conditions used by the list-coloring
/// thresholds. `a` counts all-independent elements (identity included);
/// `b` counts the non-identity ones among them with exactly n-2 cycles.
struct AutClassification {
  std::vector<AutElementInfo> elements;
  int a = 0;
  int b = 0;
};

AutClassification classify(const Graph& g, const AutGroup& aut);

/// Every non-identity automorphism whose cycles are all independent has at
/// most n-2 cycles.
bool independent_automorphisms_have_few_cycles(const Graph& g);

/// g is point-determining and every non-identity automorphism has a cycle
/// containing two adjacent vertices.
bool cone_hypothesis(const Graph& g);

/// Every non-identity automorphism has a cycle containing an adjacent pair
/// (equivalently a == 1 in the classification).
bool only_identity_has_independent_cycles(const Graph& g);

}  // namespace ulcf
