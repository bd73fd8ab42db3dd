#include "ulcf/chromatic.hpp"

#include <vector>

#include "ulcf/error.hpp"

namespace ulcf {

bool ChromaticCache::lookup(const std::string& key, Polynomial& out) const {
  std::shared_lock lock(mutex_);
  const auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void ChromaticCache::insert(const std::string& key, const Polynomial& value) {
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
}

std::size_t ChromaticCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void ChromaticCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

ChromaticCache& default_chromatic_cache() {
  static ChromaticCache cache;
  return cache;
}

namespace {

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = all_vertices(g.order());
  while (unseen != 0) {
    VertexSet reached = unseen & (~unseen + 1);
    VertexSet frontier = reached;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(__builtin_ctz(f));
      frontier = next & ~reached;
      reached |= next;
    }
    out.push_back(reached);
    unseen &= ~reached;
  }
  return out;
}

Polynomial deletion_contraction(const Graph& g, ChromaticCache* cache) {
  const int n = g.order();
  const int m = g.size();
  if (m == 0) return Polynomial::monomial(n);
  if (m == n * (n - 1) / 2) return Polynomial::falling_factorial(n);

  std::string key;
  if (cache != nullptr) {
    key = canonical_form(g);
    Polynomial hit;
    if (cache->lookup(key, hit)) return hit;
  }

  Polynomial result;
  const auto parts = components(g);
  if (parts.size() > 1) {
    result = Polynomial::constant(1);
    for (VertexSet part : parts) result = result * deletion_contraction(g.induced(part), cache);
  } else {
    // Every contraction removes exactly one vertex, so the lowest-indexed
    // edge is taken.
    const auto [u, v] = g.edges().front();
    result = deletion_contraction(g.without_edge(u, v), cache) -
             deletion_contraction(g.contract(u, v), cache);
  }
  if (cache != nullptr) cache->insert(key, result);
  return result;
}

std::uint64_t checked_power(int k, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(k);
    if (total > kBruteForceLimit) {
      throw LimitExceeded("brute-force enumeration of " + std::to_string(k) + "^" +
                          std::to_string(n) + " colorings exceeds the 1e8 guard");
    }
  }
  return total;
}

// Calls visit(f) for every proper k-coloring f, in lexicographic order.
template <typename Visit>
void for_each_proper_coloring(const Graph& g, int k, Visit&& visit) {
  const int n = g.order();
  if (k < 0) throw InvalidArgument("negative color count");
  checked_power(k, n);
  std::vector<int> f(n, 0);
  if (n == 0) {
    visit(f);
    return;
  }
  if (k == 0) return;
  const auto edges = g.edges();
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : edges) {
      if (f[u] == f[v]) {
        proper = false;
        break;
      }
    }
    if (proper) visit(f);
    int pos = n - 1;
    while (pos >= 0 && ++f[pos] == k) f[pos--] = 0;
    if (pos < 0) return;
  }
}

}  // namespace

Polynomial chromatic_polynomial(const Graph& g) {
  return deletion_contraction(g, &default_chromatic_cache());
}

Polynomial chromatic_polynomial(const Graph& g, ChromaticCache* cache) {
  return deletion_contraction(g, cache);
}

Polynomial fixed_coloring_polynomial(const Graph& g, const Permutation& pi) {
  if (!cycles_all_independent(g, pi)) return {};
  return chromatic_polynomial(quotient(g, pi));
}

Polynomial unlabeled_chromatic_polynomial(const Graph& g) {
  return unlabeled_chromatic_polynomial(g, automorphism_group(g));
}

Polynomial unlabeled_chromatic_polynomial(const Graph& g, const AutGroup& aut) {
  Polynomial sum;
  for (const auto& pi : aut.elements) sum += fixed_coloring_polynomial(g, pi);
  return sum * Rational(1, static_cast<unsigned long>(aut.order()));
}

std::uint64_t count_colorings_brute(const Graph& g, int k) {
  std::uint64_t count = 0;
  for_each_proper_coloring(g, k, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::uint64_t count_unlabeled_colorings_brute(const Graph& g, int k) {
  return count_unlabeled_colorings_brute(g, automorphism_group(g), k);
}

std::uint64_t count_unlabeled_colorings_brute(const Graph& g, const AutGroup& aut, int k) {
  const int n = g.order();
  std::uint64_t orbits = 0;
  std::vector<int> image(n);
  for_each_proper_coloring(g, k, [&](const std::vector<int>& f) {
    for (const auto& pi : aut.elements) {
      // (f o pi^{-1})(pi(v)) = f(v).
      for (int v = 0; v < n; ++v) image[pi(v)] = f[v];
      if (image < f) return;
    }
    ++orbits;
  });
  return orbits;
}

}  // namespace ulcf
