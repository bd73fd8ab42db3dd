#include "ulcf/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "ulcf/error.hpp"

namespace ulcf {

namespace {

class AutomorphismBacktrack {
 public:
  AutomorphismBacktrack(const Graph& g, std::size_t limit)
      : g_(g), n_(g.order()), color_(refined_colors(g)), image_(n_, -1), limit_(limit) {}

  std::vector<Permutation> run() {
    extend(0, 0);
    return std::move(found_);
  }

 private:
  void extend(int v, VertexSet used) {
    if (v == n_) {
      if (found_.size() >= limit_) {
        throw LimitExceeded("automorphism group exceeds " + std::to_string(limit_) +
                            " elements");
      }
      found_.push_back(Permutation::from_images(image_));
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if (contains(used, w) || color_[w] != color_[v]) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        consistent = g_.adjacent(v, u) == g_.adjacent(w, image_[u]);
      }
      if (!consistent) continue;
      image_[v] = w;
      extend(v + 1, used | singleton(w));
    }
    image_[v] = -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> image_;
  std::size_t limit_;
  std::vector<Permutation> found_;
};

std::vector<Permutation> exhaustive_automorphisms(const Graph& g, std::size_t limit) {
  std::vector<int> image(g.order());
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> found;
  do {
    auto pi = Permutation::from_images(image);
    if (apply_permutation(g, pi) == g) {
      if (found.size() >= limit) {
        throw LimitExceeded("automorphism group exceeds " + std::to_string(limit) +
                            " elements");
      }
      found.push_back(std::move(pi));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return found;
}

}  // namespace

AutGroup automorphism_group(const Graph& g, AutSearch mode, std::size_t max_elements) {
  AutGroup group;
  group.elements = mode == AutSearch::kPruned
                       ? AutomorphismBacktrack(g, max_elements).run()
                       : exhaustive_automorphisms(g, max_elements);
  // The identity has the lexicographically smallest image array.
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

AutClassification classify(const Graph& g, const AutGroup& aut) {
  AutClassification out;
  const int n = g.order();
  for (const auto& pi : aut.elements) {
    AutElementInfo info{cycles_all_independent(g, pi), pi.cycle_count()};
    if (info.independent_cycles) {
      ++out.a;
      if (!pi.is_identity() && info.cycle_count == n - 2) ++out.b;
    }
    out.elements.push_back(info);
  }
  return out;
}

bool independent_automorphisms_have_few_cycles(const Graph& g) {
  const AutGroup aut = automorphism_group(g);
  for (const auto& pi : aut.elements) {
    if (pi.is_identity()) continue;
    if (cycles_all_independent(g, pi) && pi.cycle_count() > g.order() - 2) return false;
  }
  return true;
}

bool only_identity_has_independent_cycles(const Graph& g) {
  const AutGroup aut = automorphism_group(g);
  for (const auto& pi : aut.elements) {
    if (!pi.is_identity() && cycles_all_independent(g, pi)) return false;
  }
  return true;
}

bool cone_hypothesis(const Graph& g) {
  return is_point_determining(g) && only_identity_has_independent_cycles(g);
}

}  // namespace ulcf
