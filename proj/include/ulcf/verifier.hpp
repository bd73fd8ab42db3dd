#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ulcf/assignment_search.hpp"
#include "ulcf/graph.hpp"
#include "ulcf/list_coloring.hpp"

namespace ulcf {

enum class Status { kPass, kFail, kSkip, kInfo };

std::string to_string(Status s);

/// One checked claim on one instance. `lhs` and `rhs` are exact values
/// rendered as decimal integers, fractions, or polynomials; `passed()` holds
/// exactly when the claim's comparison holds on them.
struct VerificationReport {
  std::string claim;
  std::string instance;
  std::string lhs;
  std::string rhs;
  Status status = Status::kSkip;
  std::string note;
  std::optional<std::uint64_t> seed;
  double runtime_ms = 0;

  bool passed() const { return status == Status::kPass; }

  /// Timing is the only nondeterministic field; leave it out when comparing
  /// report streams.
  nlohmann::json to_json(bool include_timing = true) const;
};

// ---------------------------------------------------------------------------
// Seeded list assignments

enum class ListKind {
  kConstant,      // every vertex gets {0..k-1}
  kNearConstant,  // constant, then one vertex swaps one color for a new one
  kDisjoint,      // pairwise-disjoint lists
  kUniform,       // independent uniform k-subsets of {0..n*k-1}
};

std::string to_string(ListKind kind);

ListAssignment random_k_assignment(int n, int k, ListKind kind, std::mt19937_64& rng);

/// A k-assignment on the path 0-1-...-(n-1) whose consecutive lists differ
/// in exactly `changes[i]` colors between vertex i and i+1.
ListAssignment random_path_assignment(int k, const std::vector<int>& changes,
                                      std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Single-instance checks. Hypothesis failures throw PreconditionError naming
// the violated clause; guard overruns produce skipped reports.

/// Orbit-averaged chromatic polynomial at k vs explicit orbit grouping.
VerificationReport verify_hanlon(const Graph& g, int k);

/// u_l(G,L) >= (1/|Aut|) sum_pi P(G,pi,L), with equality for constant lists.
VerificationReport verify_burnside_bound(const Graph& g, const ListAssignment& lists);

/// For f ~ g: |{pi : f o pi = g}| = |{pi : f o pi = f}|, over every ordered
/// pair of equivalent colorings.
VerificationReport verify_stabilizer_cosets(const Graph& g, const ListAssignment& lists);

/// Colorings fixed by pi, filtered directly vs counted on the quotient.
VerificationReport verify_fixed_quotient(const Graph& g, const Permutation& pi,
                                         const ListAssignment& lists);

/// P_l of a disjoint union of two connected non-isomorphic graphs equals the
/// product of the components' values.
VerificationReport verify_union_product(const Graph& g1, const Graph& g2, int k,
                                        const SearchOptions& options = {});

/// Dong-Zhang lower bound on P(G,L) - P(G,k) for k >= m - 1, m >= 4.
VerificationReport verify_dong_zhang(const Graph& g, const ListAssignment& lists);

/// On a path with consecutive list changes s < k, the end lists share at
/// least k - s colors.
VerificationReport verify_path_intersection(const ListAssignment& path_lists);

/// P_l(unlabeled G,k) <= P(unlabeled G,k) on feasible k, with equality
/// asserted past (a-b) + (m-1)(b+1). Requires G connected, m >= 4 and
/// independent_automorphisms_have_few_cycles(G).
VerificationReport verify_symmetric_threshold(const Graph& g, int k_max,
                                              const SearchOptions& options = {});

/// Cone over two new non-adjacent vertices: the swap is an automorphism, the
/// group doubles, the unlabeled chromatic polynomial follows from P(G,k), and
/// P_l <= P on feasible k with equality from cone_equality_threshold on.
VerificationReport verify_cone_construction(const Graph& g, int k_max,
                                            const SearchOptions& options = {});

/// When only the identity has all cycles independent, labeled equality
/// P_l(G,k) = P(G,k) carries over to the unlabeled values. Skipped when the
/// labeled equality fails at k.
VerificationReport verify_equality_lift(const Graph& g, int k, const SearchOptions& options = {});

/// P_l(G,k) = P(G,k) for chordal G.
VerificationReport verify_chordal_equality(const Graph& g, int k,
                                           const SearchOptions& options = {});

/// Exploratory table of P_l vs P for the edgeless graph on n vertices.
ThresholdTable explore_edgeless(int n, int k_max, const SearchOptions& options = {});

/// Least N >= |E(G)| + 3 such that 2 P(G,k-1) <= (k+1) P(G,k-2) for every
/// k >= N.
int cone_equality_threshold(const Graph& g);

// ---------------------------------------------------------------------------
// Batch suites

struct SuiteOptions {
  int max_order = 5;
  int kmax = 6;
  std::uint64_t seed = 1;
  int workers = 1;
  /// Random assignments per (graph, k) for fixed_quotient and dong_zhang.
  int assignments = 20;
  int burnside_instances = 5000;
  int path_instances = 2000;
  /// Largest combined order in the union_product sweep.
  int union_max_order = 4;
  /// List size for the union_product and chordal_equality sweeps.
  int list_k = 2;
  /// Largest order and k handed to exhaustive pattern searches in sweeps.
  int search_max_order = 5;
  int search_kmax = 3;
};

/// Every suite name accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Reports in canonical instance order; identical for any worker count.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

struct ClaimTally {
  int pass = 0;
  int fail = 0;
  int skip = 0;
  int info = 0;
};

std::map<std::string, ClaimTally> summarize(const std::vector<VerificationReport>& reports);
nlohmann::json summary_json(const std::map<std::string, ClaimTally>& tally);

}  // namespace ulcf
