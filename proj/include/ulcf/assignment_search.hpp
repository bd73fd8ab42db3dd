#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ulcf/graph.hpp"
#include "ulcf/list_coloring.hpp"
#include "ulcf/polynomial.hpp"
#include "ulcf/symmetry.hpp"

namespace ulcf {

// A k-assignment up to a global bijection of colors is determined by how many
// colors lie in exactly the lists of S, for every nonempty vertex subset S.
// Both P(G,L) and u_l(G,L) depend on L only through that vector, so minimizing
// over these cell vectors is an exact minimization over all k-assignments.

inline constexpr int kMaxPatternVertices = 5;
inline constexpr int kMaxPatternListSize = 4;

struct IntersectionPattern {
  int n = 0;
  int k = 0;
  /// cells[S - 1] = x_S for S = 1 .. 2^n - 1.
  std::vector<int> cells;

  int at(VertexSet s) const { return cells[s - 1]; }

  /// {"n": .., "k": .., "cells": {"<bitmask>": size, ...}} with zero cells
  /// omitted. Bitmask strings are binary numerals of width n, vertex 0 in the
  /// least significant (rightmost) position.
  nlohmann::json to_json() const;

  bool operator==(const IntersectionPattern&) const = default;
};

/// Upper bound on the pattern count for (n, k): per-vertex compositions of k
/// over the 2^{n-1} cells containing that vertex, multiplied over vertices.
double estimated_pattern_count(int n, int k);

/// Every pattern for (n, k) exactly once, in lexicographic order of the cell
/// vector. With `dedup`, only the lexicographically least member of each orbit
/// under the group's action on vertex subsets is produced. Throws
/// LimitExceeded beyond n <= 5, k <= 4.
void for_each_pattern(int n, int k, const AutGroup* dedup,
                      const std::function<void(const IntersectionPattern&)>& visit);
std::vector<IntersectionPattern> enumerate_patterns(int n, int k,
                                                    const AutGroup* dedup = nullptr);

/// Concrete lists using colors 0, 1, 2, ...; cells are filled largest subset
/// first, ties by increasing bitmask.
ListAssignment materialize(const IntersectionPattern& p);

/// The pattern of a concrete k-assignment.
IntersectionPattern pattern_of(const ListAssignment& lists);

struct SearchResult {
  std::uint64_t value = 0;
  std::vector<IntersectionPattern> witnesses;
  std::uint64_t explored = 0;
  bool exhausted = false;

  nlohmann::json to_json() const;
};

struct SearchOptions {
  int workers = 1;
  std::size_t witness_cap = 16;
};

/// P_l(G,k): minimum of P(G,L) over k-assignments.
SearchResult list_color_function(const Graph& g, int k, const SearchOptions& options = {});

/// P_l(unlabeled G, k): minimum of u_l(G,L) over k-assignments.
SearchResult unlabeled_list_color_function(const Graph& g, int k,
                                           const SearchOptions& options = {});

struct ThresholdRow {
  int k = 0;
  std::optional<std::uint64_t> list_value;  // P_l(unlabeled G, k)
  Integer chromatic_value;                  // P(unlabeled G, k)
  bool equal = false;
  std::string error;  // set when the search was refused
};

struct ThresholdTable {
  std::vector<ThresholdRow> rows;
  /// Least k0 with equality on every feasible tested k >= k0.
  std::optional<int> equal_from;

  nlohmann::json to_json() const;
};

inline constexpr const char* kEmpiricalLabel = "empirical, not a proof of N";

ThresholdTable threshold_search(const Graph& g, int k_max, const SearchOptions& options = {});

}  // namespace ulcf
