#pragma once

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "ulcf/graph.hpp"
#include "ulcf/polynomial.hpp"
#include "ulcf/symmetry.hpp"

namespace ulcf {

/// Memo table for deletion-contraction keyed by canonical form. Safe for
/// concurrent readers and writers; a lookup never changes a result.
class ChromaticCache {
 public:
  bool lookup(const std::string& key, Polynomial& out) const;
  void insert(const std::string& key, const Polynomial& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Polynomial> table_;
};

/// Process-wide cache used by the single-argument overloads.
ChromaticCache& default_chromatic_cache();

/// P(G,k) by deletion-contraction. The empty graph yields the constant 1.
/// Pass `cache = nullptr` to disable memoization.
Polynomial chromatic_polynomial(const Graph& g);
Polynomial chromatic_polynomial(const Graph& g, ChromaticCache* cache);

/// Number of proper k-colorings fixed by pi: zero when some cycle of pi holds
/// an edge, otherwise P(G:pi, k). Throws PreconditionError if pi is not an
/// automorphism.
Polynomial fixed_coloring_polynomial(const Graph& g, const Permutation& pi);

/// Unlabeled chromatic polynomial: the average of the fixed-coloring
/// polynomials over Aut(G).
Polynomial unlabeled_chromatic_polynomial(const Graph& g);
Polynomial unlabeled_chromatic_polynomial(const Graph& g, const AutGroup& aut);

/// Enumeration guard shared by the brute-force oracles: k^n <= 1e8.
inline constexpr std::uint64_t kBruteForceLimit = 100'000'000;

/// Proper k-colorings counted by walking all of [k]^n.
std::uint64_t count_colorings_brute(const Graph& g, int k);

/// Orbits of proper k-colorings under f -> f o pi^{-1}, pi in Aut(G), counted
/// by explicit orbit grouping: a coloring is counted iff it is the
/// lexicographically least member of its orbit.
std::uint64_t count_unlabeled_colorings_brute(const Graph& g, int k);
std::uint64_t count_unlabeled_colorings_brute(const Graph& g, const AutGroup& aut, int k);

}  // namespace ulcf
