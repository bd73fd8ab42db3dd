#include "ulcf/assignment_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "ulcf/chromatic.hpp"
#include "ulcf/error.hpp"
#include "ulcf/parallel.hpp"

namespace ulcf {

namespace {

std::string bitmask_string(VertexSet s, int n) {
  std::string out(n, '0');
  for (int v = 0; v < n; ++v) {
    if (contains(s, v)) out[n - 1 - v] = '1';
  }
  return out;
}

void check_pattern_limits(int n, int k) {
  if (n < 1 || k < 1) throw InvalidArgument("pattern search needs n >= 1 and k >= 1");
  if (n > kMaxPatternVertices || k > kMaxPatternListSize) {
    std::ostringstream msg;
    msg << "pattern search limited to n <= " << kMaxPatternVertices << ", k <= "
        << kMaxPatternListSize << "; (n=" << n << ", k=" << k << ") has up to "
        << estimated_pattern_count(n, k) << " patterns";
    throw LimitExceeded(msg.str());
  }
}

// Walks the cell vector in increasing subset order. `reachable_` tells, for
// each cell index and remaining per-vertex demand, whether the remaining
// cells can meet the demand exactly; the walk never enters a dead branch.
class PatternWalker {
 public:
  PatternWalker(int n, int k, const AutGroup* dedup,
                const std::function<void(const IntersectionPattern&)>& visit)
      : n_(n), k_(k), cells_((1 << n) - 1), visit_(visit) {
    states_ = 1;
    for (int v = 0; v < n; ++v) states_ *= (k + 1);
    reachable_.assign(static_cast<std::size_t>(cells_ + 1) * states_, 0);
    reachable_[static_cast<std::size_t>(cells_) * states_ + 0] = 1;
    for (int i = cells_ - 1; i >= 0; --i) {
      const VertexSet mask = static_cast<VertexSet>(i + 1);
      for (int state = 0; state < states_; ++state) {
        const auto need = decode(state);
        const int cap = max_fill(mask, need);
        bool ok = false;
        for (int x = 0; x <= cap && !ok; ++x) {
          ok = reachable_[static_cast<std::size_t>(i + 1) * states_ + encode(take(mask, need, x))];
        }
        reachable_[static_cast<std::size_t>(i) * states_ + state] = ok;
      }
    }
    if (dedup != nullptr) {
      for (const auto& pi : dedup->elements) {
        if (pi.is_identity()) continue;
        std::vector<VertexSet> image(cells_ + 1, 0);
        for (VertexSet s = 1; s <= static_cast<VertexSet>(cells_); ++s) {
          VertexSet t = 0;
          for (int v = 0; v < n; ++v) {
            if (contains(s, v)) t |= singleton(pi(v));
          }
          image[s] = t;
        }
        subset_maps_.push_back(std::move(image));
      }
    }
  }

  void run() {
    current_.n = n_;
    current_.k = k_;
    current_.cells.assign(cells_, 0);
    std::vector<int> need(n_, k_);
    descend(0, need);
  }

 private:
  std::vector<int> decode(int state) const {
    std::vector<int> need(n_);
    for (int v = 0; v < n_; ++v) {
      need[v] = state % (k_ + 1);
      state /= (k_ + 1);
    }
    return need;
  }

  int encode(const std::vector<int>& need) const {
    int state = 0;
    for (int v = n_ - 1; v >= 0; --v) state = state * (k_ + 1) + need[v];
    return state;
  }

  int max_fill(VertexSet mask, const std::vector<int>& need) const {
    int cap = k_;
    for (int v = 0; v < n_; ++v) {
      if (contains(mask, v)) cap = std::min(cap, need[v]);
    }
    return cap;
  }

  std::vector<int> take(VertexSet mask, std::vector<int> need, int x) const {
    for (int v = 0; v < n_; ++v) {
      if (contains(mask, v)) need[v] -= x;
    }
    return need;
  }

  void descend(int i, std::vector<int>& need) {
    if (i == cells_) {
      if (is_orbit_minimum()) visit_(current_);
      return;
    }
    const VertexSet mask = static_cast<VertexSet>(i + 1);
    const int cap = max_fill(mask, need);
    for (int x = 0; x <= cap; ++x) {
      auto next = take(mask, need, x);
      if (!reachable_[static_cast<std::size_t>(i + 1) * states_ + encode(next)]) continue;
      current_.cells[i] = x;
      descend(i + 1, next);
    }
    current_.cells[i] = 0;
  }

  bool is_orbit_minimum() const {
    for (const auto& image : subset_maps_) {
      // Compare the permuted cell vector (x_{pi(S)})_S against the current one.
      for (int i = 0; i < cells_; ++i) {
        const int permuted = current_.cells[image[i + 1] - 1];
        if (permuted != current_.cells[i]) {
          if (permuted < current_.cells[i]) return false;
          break;
        }
      }
    }
    return true;
  }

  int n_;
  int k_;
  int cells_;
  int states_ = 0;
  std::vector<char> reachable_;
  std::vector<std::vector<VertexSet>> subset_maps_;
  IntersectionPattern current_;
  const std::function<void(const IntersectionPattern&)>& visit_;
};

}  // namespace

nlohmann::json IntersectionPattern::to_json() const {
  nlohmann::json cell_map = nlohmann::json::object();
  for (VertexSet s = 1; s <= cells.size(); ++s) {
    if (at(s) != 0) cell_map[bitmask_string(s, n)] = at(s);
  }
  return {{"n", n}, {"k", k}, {"cells", std::move(cell_map)}};
}

double estimated_pattern_count(int n, int k) {
  // Compositions of k into 2^{n-1} nonnegative parts: C(k + c - 1, k).
  const double c = std::ldexp(1.0, n - 1);
  double per_vertex = 1;
  for (int i = 1; i <= k; ++i) per_vertex = per_vertex * (c - 1 + i) / i;
  return std::pow(per_vertex, n);
}

void for_each_pattern(int n, int k, const AutGroup* dedup,
                      const std::function<void(const IntersectionPattern&)>& visit) {
  check_pattern_limits(n, k);
  if (dedup != nullptr && !dedup->elements.empty() && dedup->elements.front().size() != n) {
    throw InvalidArgument("dedup group acts on the wrong number of points");
  }
  PatternWalker(n, k, dedup, visit).run();
}

std::vector<IntersectionPattern> enumerate_patterns(int n, int k, const AutGroup* dedup) {
  std::vector<IntersectionPattern> out;
  for_each_pattern(n, k, dedup, [&](const IntersectionPattern& p) { out.push_back(p); });
  return out;
}

ListAssignment materialize(const IntersectionPattern& p) {
  std::vector<VertexSet> order;
  for (VertexSet s = 1; s <= p.cells.size(); ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](VertexSet a, VertexSet b) {
    return popcount(a) > popcount(b);
  });
  std::vector<std::vector<int>> lists(p.n);
  int next_color = 0;
  for (VertexSet s : order) {
    for (int i = 0; i < p.at(s); ++i, ++next_color) {
      for (int v = 0; v < p.n; ++v) {
        if (contains(s, v)) lists[v].push_back(next_color);
      }
    }
  }
  return ListAssignment(lists);
}

IntersectionPattern pattern_of(const ListAssignment& lists) {
  const auto k = lists.uniform_size();
  if (!k) throw InvalidArgument("pattern_of needs a k-assignment");
  const int n = lists.vertex_count();
  if (n > kMaxPatternVertices) throw LimitExceeded("pattern_of supports n <= 5");
  IntersectionPattern p{n, *k, std::vector<int>((1 << n) - 1, 0)};
  std::array<VertexSet, kMaxColors> holders{};
  for (int v = 0; v < n; ++v) {
    for (Color c : lists[v]) holders[c] |= singleton(v);
  }
  for (VertexSet s : holders) {
    if (s != 0) ++p.cells[s - 1];
  }
  return p;
}

nlohmann::json SearchResult::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& p : witnesses) w.push_back(p.to_json());
  return {{"value", value}, {"explored", explored}, {"exhausted", exhausted}, {"witnesses", w}};
}

namespace {

struct LocalBest {
  std::uint64_t value = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> witnesses;  // pattern indices, increasing
};

// Minimizes evaluate(pattern, incumbent) over the pattern list. `evaluate`
// may return any value > incumbent once it proves the pattern cannot tie or
// beat the incumbent.
template <typename Evaluate>
SearchResult minimize(const std::vector<IntersectionPattern>& patterns,
                      const SearchOptions& options, Evaluate&& evaluate) {
  const int workers = std::max(1, options.workers);
  std::vector<LocalBest> local(workers);
  parallel_for_workers(workers, [&](int w) {
    LocalBest& best = local[w];
    for (std::size_t i = w; i < patterns.size(); i += workers) {
      const std::uint64_t v = evaluate(patterns[i], best.value);
      if (v < best.value) {
        best.value = v;
        best.witnesses.clear();
      }
      if (v == best.value && best.witnesses.size() < options.witness_cap) {
        best.witnesses.push_back(i);
      }
    }
  });

  SearchResult result;
  result.value = std::numeric_limits<std::uint64_t>::max();
  for (const auto& b : local) result.value = std::min(result.value, b.value);
  std::vector<std::size_t> indices;
  for (const auto& b : local) {
    if (b.value == result.value) indices.insert(indices.end(), b.witnesses.begin(), b.witnesses.end());
  }
  std::sort(indices.begin(), indices.end());
  if (indices.size() > options.witness_cap) indices.resize(options.witness_cap);
  for (std::size_t i : indices) result.witnesses.push_back(patterns[i]);
  result.explored = patterns.size();
  result.exhausted = true;
  return result;
}

}  // namespace

SearchResult list_color_function(const Graph& g, int k, const SearchOptions& options) {
  check_pattern_limits(g.order(), k);
  const AutGroup aut = automorphism_group(g);
  const auto patterns = enumerate_patterns(g.order(), k, &aut);
  return minimize(patterns, options, [&](const IntersectionPattern& p, std::uint64_t incumbent) {
    return count_list_colorings_capped(g, materialize(p), incumbent);
  });
}

SearchResult unlabeled_list_color_function(const Graph& g, int k, const SearchOptions& options) {
  check_pattern_limits(g.order(), k);
  const AutGroup aut = automorphism_group(g);
  const auto patterns = enumerate_patterns(g.order(), k, &aut);
  const std::uint64_t group_order = aut.order();
  return minimize(patterns, options, [&](const IntersectionPattern& p, std::uint64_t incumbent) {
    const ListAssignment lists = materialize(p);
    // u_l(G,L) >= P(G,L)/|Aut(G)|, so a large labeled count rules L out.
    if (incumbent != std::numeric_limits<std::uint64_t>::max()) {
      const std::uint64_t cap = incumbent * group_order;
      if (count_list_colorings_capped(g, lists, cap) > cap) return incumbent + 1;
    }
    return unlabeled_list_coloring_count(g, aut, lists);
  });
}

nlohmann::json ThresholdTable::to_json() const {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = {{"k", row.k}, {"unlabeled_chromatic", row.chromatic_value.get_str()}};
    if (row.list_value) {
      r["unlabeled_list"] = *row.list_value;
      r["equal"] = row.equal;
    } else {
      r["unlabeled_list"] = nullptr;
      r["error"] = row.error;
    }
    table.push_back(std::move(r));
  }
  nlohmann::json out = {{"rows", std::move(table)}, {"label", kEmpiricalLabel}};
  out["equal_from"] = equal_from ? nlohmann::json(*equal_from) : nlohmann::json(nullptr);
  return out;
}

ThresholdTable threshold_search(const Graph& g, int k_max, const SearchOptions& options) {
  ThresholdTable table;
  const Polynomial unlabeled = unlabeled_chromatic_polynomial(g);
  for (int k = 1; k <= k_max; ++k) {
    ThresholdRow row;
    row.k = k;
    const Rational at_k = unlabeled.evaluate(static_cast<long>(k));
    row.chromatic_value = at_k.get_num();
    try {
      row.list_value = unlabeled_list_color_function(g, k, options).value;
      row.equal = Integer(static_cast<unsigned long>(*row.list_value)) == row.chromatic_value;
    } catch (const LimitExceeded& e) {
      row.error = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  for (auto it = table.rows.rbegin(); it != table.rows.rend(); ++it) {
    if (!it->list_value) continue;
    if (!it->equal) break;
    table.equal_from = it->k;
  }
  return table;
}

}  // namespace ulcf
