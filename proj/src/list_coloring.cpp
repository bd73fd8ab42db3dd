#include "ulcf/list_coloring.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <charconv>
#include <numeric>

#include "ulcf/disjoint_set.hpp"
#include "ulcf/error.hpp"

namespace ulcf {

// ---------------------------------------------------------------------------
// ListAssignment

ListAssignment::ListAssignment(const std::vector<std::vector<int>>& lists) {
  if (static_cast<int>(lists.size()) > kMaxVertices) {
    throw LimitExceeded("list assignment covers more than 16 vertices");
  }
  lists_.reserve(lists.size());
  for (const auto& list : lists) {
    std::vector<Color> out;
    for (int c : list) {
      if (c < 0 || c >= kMaxColors) {
        throw InvalidArgument("color " + std::to_string(c) + " outside [0, 256)");
      }
      out.push_back(static_cast<Color>(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    lists_.push_back(std::move(out));
  }
}

ListAssignment ListAssignment::constant(int n, int k) {
  std::vector<int> colors(k);
  std::iota(colors.begin(), colors.end(), 0);
  return ListAssignment(std::vector<std::vector<int>>(n, colors));
}

bool ListAssignment::has(int v, Color c) const {
  return std::binary_search(lists_[v].begin(), lists_[v].end(), c);
}

std::optional<int> ListAssignment::uniform_size() const {
  if (lists_.empty()) return std::nullopt;
  const auto k = lists_.front().size();
  for (const auto& list : lists_) {
    if (list.size() != k) return std::nullopt;
  }
  return static_cast<int>(k);
}

int ListAssignment::color_count() const {
  std::bitset<kMaxColors> seen;
  for (const auto& list : lists_) {
    for (Color c : list) seen.set(c);
  }
  return static_cast<int>(seen.count());
}

ListAssignment ListAssignment::permuted(const Permutation& pi) const {
  if (pi.size() != vertex_count()) throw InvalidArgument("permutation size mismatch");
  ListAssignment out;
  out.lists_.resize(lists_.size());
  for (int v = 0; v < vertex_count(); ++v) out.lists_[v] = lists_[pi(v)];
  return out;
}

ListAssignment ListAssignment::relabeled(std::span<const int> relabel) const {
  std::vector<std::vector<int>> lists;
  for (const auto& list : lists_) {
    std::vector<int> out;
    for (Color c : list) {
      if (c >= relabel.size()) throw InvalidArgument("relabel map too short");
      out.push_back(relabel[c]);
    }
    lists.push_back(std::move(out));
  }
  ListAssignment result(lists);
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    if (result.lists_[v].size() != lists_[v].size()) {
      throw InvalidArgument("relabel map is not injective");
    }
  }
  return result;
}

nlohmann::json ListAssignment::to_json() const {
  nlohmann::json lists = nlohmann::json::array();
  for (const auto& list : lists_) {
    nlohmann::json row = nlohmann::json::array();
    for (Color c : list) row.push_back(static_cast<int>(c));
    lists.push_back(std::move(row));
  }
  return {{"lists", std::move(lists)}};
}

ListAssignment ListAssignment::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lists") || !j["lists"].is_array()) {
    throw InvalidArgument("list assignment JSON must be {\"lists\": [[...], ...]}");
  }
  std::vector<std::vector<int>> lists;
  for (const auto& row : j["lists"]) {
    if (!row.is_array()) throw InvalidArgument("each list must be a JSON array");
    std::vector<int> list;
    for (const auto& c : row) {
      if (!c.is_number_integer()) throw InvalidArgument("colors must be integers");
      list.push_back(c.get<int>());
    }
    lists.push_back(std::move(list));
  }
  return ListAssignment(lists);
}

ListAssignment ListAssignment::parse(std::string_view text) {
  std::vector<std::optional<std::vector<int>>> slots;
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto number = [&] {
    skip();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || value < 0) throw ParseError(pos, "expected a nonnegative integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  const auto accept = [&](char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  };

  skip();
  if (pos == text.size()) throw ParseError(pos, "empty list assignment");
  do {
    const std::size_t entry_start = pos;
    const int v = number();
    if (v >= kMaxVertices) throw ParseError(entry_start, "vertex index exceeds 15");
    if (!accept(':')) throw ParseError(pos, "expected ':'");
    std::vector<int> colors;
    skip();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      do {
        colors.push_back(number());
      } while (accept(','));
    }
    if (slots.size() <= static_cast<std::size_t>(v)) slots.resize(v + 1);
    if (slots[v]) throw ParseError(entry_start, "vertex " + std::to_string(v) + " listed twice");
    slots[v] = std::move(colors);
  } while (accept(';'));
  skip();
  if (pos != text.size()) throw ParseError(pos, "unexpected trailing input");

  std::vector<std::vector<int>> lists;
  for (std::size_t v = 0; v < slots.size(); ++v) {
    if (!slots[v]) throw ParseError(text.size(), "vertex " + std::to_string(v) + " has no list");
    lists.push_back(std::move(*slots[v]));
  }
  return ListAssignment(lists);
}

std::string ListAssignment::to_string() const {
  std::string out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (v > 0) out += ';';
    out += std::to_string(v) + ':';
    for (std::size_t i = 0; i < lists_[v].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(lists_[v][i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting

namespace {

void check_compatible(const Graph& g, const ListAssignment& lists) {
  if (lists.vertex_count() != g.order()) {
    throw InvalidArgument("list assignment has " + std::to_string(lists.vertex_count()) +
                          " lists but the graph has " + std::to_string(g.order()) +
                          " vertices");
  }
}

void check_countable(const Graph& g, const ListAssignment& lists) {
  check_compatible(g, lists);
  std::uint64_t product = 1;
  for (int v = 0; v < g.order(); ++v) {
    if (lists[v].empty()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " has an empty list");
    }
    product *= lists[v].size();
    if (product > kListProductLimit) {
      throw LimitExceeded("product of list sizes exceeds the 1e8 guard");
    }
  }
}

class ListBacktrack {
 public:
  ListBacktrack(const Graph& g, const ListAssignment& lists, std::uint64_t cap)
      : g_(g), lists_(lists), color_(g.order(), -1), cap_(cap) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return lists[a].size() < lists[b].size();
    });
  }

  std::uint64_t run() {
    descend(0);
    return count_;
  }

 private:
  void descend(std::size_t depth) {
    if (count_ > cap_) return;
    if (depth == order_.size()) {
      ++count_;
      return;
    }
    const int v = order_[depth];
    const VertexSet nbrs = g_.neighbors(v);
    for (Color c : lists_[v]) {
      bool clash = false;
      for (VertexSet s = nbrs; s != 0 && !clash; s &= s - 1) {
        clash = color_[__builtin_ctz(s)] == c;
      }
      if (clash) continue;
      color_[v] = c;
      descend(depth + 1);
      if (count_ > cap_) break;
    }
    color_[v] = -1;
  }

  const Graph& g_;
  const ListAssignment& lists_;
  std::vector<int> order_;
  std::vector<int> color_;
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t count_list_colorings(const Graph& g, const ListAssignment& lists) {
  check_countable(g, lists);
  return ListBacktrack(g, lists, UINT64_MAX - 1).run();
}

std::uint64_t count_list_colorings_capped(const Graph& g, const ListAssignment& lists,
                                          std::uint64_t cap) {
  check_countable(g, lists);
  return ListBacktrack(g, lists, cap).run();
}

std::pair<Graph, ListAssignment> quotient_list_assignment(const Graph& g,
                                                          const Permutation& pi,
                                                          const ListAssignment& lists) {
  check_compatible(g, lists);
  if (!cycles_all_independent(g, pi)) {
    throw PreconditionError("permutation " + pi.to_string() +
                            " has a cycle containing adjacent vertices");
  }
  std::vector<std::vector<int>> merged;
  for (const auto& cycle : pi.cycles()) {
    std::vector<int> common(lists[cycle.front()].begin(), lists[cycle.front()].end());
    for (int v : cycle) {
      std::vector<int> next;
      for (int c : common) {
        if (lists.has(v, static_cast<Color>(c))) next.push_back(c);
      }
      common = std::move(next);
    }
    merged.push_back(std::move(common));
  }
  return {quotient(g, pi), ListAssignment(merged)};
}

std::uint64_t fixed_list_coloring_count(const Graph& g, const Permutation& pi,
                                        const ListAssignment& lists) {
  check_countable(g, lists);
  if (!cycles_all_independent(g, pi)) return 0;
  const auto [q, merged] = quotient_list_assignment(g, pi, lists);
  for (int v = 0; v < merged.vertex_count(); ++v) {
    if (merged[v].empty()) return 0;
  }
  return count_list_colorings(q, merged);
}

std::vector<Coloring> enumerate_list_colorings(const Graph& g, const ListAssignment& lists) {
  if (count_list_colorings_capped(g, lists, kEnumerationLimit) > kEnumerationLimit) {
    throw LimitExceeded("more than 1e6 proper list colorings to enumerate");
  }
  const int n = g.order();
  std::vector<Coloring> out;
  Coloring f(n, 0);
  // Vertex order 0..n-1 over sorted lists yields lexicographic output.
  const auto descend = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(f);
      return;
    }
    for (Color c : lists[v]) {
      bool clash = false;
      for (VertexSet s = g.neighbors(v) & all_vertices(v); s != 0 && !clash; s &= s - 1) {
        clash = f[__builtin_ctz(s)] == c;
      }
      if (clash) continue;
      f[v] = c;
      self(self, v + 1);
    }
  };
  descend(descend, 0);
  return out;
}

Coloring compose(const Coloring& f, const Permutation& pi) {
  Coloring out(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) out[v] = f[pi(static_cast<int>(v))];
  return out;
}

ColoringClasses equivalence_classes(const Graph& g, const AutGroup& aut,
                                    const ListAssignment& lists) {
  ColoringClasses out;
  out.colorings = enumerate_list_colorings(g, lists);
  const auto& u = out.colorings;
  DisjointSet classes(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (const auto& pi : aut.elements) {
      // f o pi need not respect L; it only merges when it lands back in U.
      const Coloring image = compose(u[i], pi);
      const auto it = std::lower_bound(u.begin(), u.end(), image);
      if (it != u.end() && *it == image) {
        classes.unite(i, static_cast<std::size_t>(it - u.begin()));
      }
    }
  }
  std::vector<std::size_t> id_of_root(u.size(), SIZE_MAX);
  out.class_of.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::size_t root = classes.find(i);
    if (id_of_root[root] == SIZE_MAX) id_of_root[root] = out.class_count++;
    out.class_of[i] = id_of_root[root];
  }
  return out;
}

std::uint64_t unlabeled_list_coloring_count(const Graph& g, const AutGroup& aut,
                                            const ListAssignment& lists) {
  return equivalence_classes(g, aut, lists).class_count;
}

Rational burnside_lower_bound(const Graph& g, const AutGroup& aut,
                              const ListAssignment& lists) {
  Integer total = 0;
  for (const auto& pi : aut.elements) {
    total += static_cast<unsigned long>(fixed_list_coloring_count(g, pi, lists));
  }
  Rational bound(total, Integer(static_cast<unsigned long>(aut.order())));
  bound.canonicalize();
  return bound;
}

}  // namespace ulcf
