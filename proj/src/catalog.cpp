#include "ulcf/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "ulcf/error.hpp"
#include "ulcf/symmetry.hpp"

namespace ulcf {

namespace {

CatalogEntry make_entry(const std::string& form) {
  CatalogEntry e;
  e.graph = graph_from_canonical_form(form);
  e.flags.connected = is_connected(e.graph);
  e.flags.point_determining = is_point_determining(e.graph);
  e.flags.chordal = is_chordal(e.graph);
  e.flags.triangle_free = !has_triangle(e.graph);
  e.aut_order = automorphism_group(e.graph).order();
  return e;
}

std::vector<CatalogEntry> entries_from_forms(const std::map<std::string, bool>& forms) {
  std::vector<CatalogEntry> out;
  out.reserve(forms.size());
  for (const auto& [form, unused] : forms) out.push_back(make_entry(form));
  return out;
}

std::string file_stem(int n) {
  return "catalog_n" + std::to_string(n) + "_v" + std::to_string(kCatalogFormatVersion);
}

}  // namespace

std::vector<CatalogEntry> enumerate_unlabeled(int n) {
  if (n < 1 || n > kMaxCatalogOrder) {
    throw LimitExceeded("catalog order must lie in 1..7, got " + std::to_string(n));
  }
  std::map<std::string, bool> forms;
  if (n <= 6) {
    std::vector<Edge> slots;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    }
    const std::uint32_t total = std::uint32_t{1} << slots.size();
    for (std::uint32_t bits = 0; bits < total; ++bits) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < slots.size(); ++e) {
        if ((bits >> e) & 1u) edges.push_back(slots[e]);
      }
      forms.emplace(canonical_form(Graph::from_edges(n, edges)), true);
    }
  } else {
    // Deleting the last vertex of any graph leaves a graph isomorphic to some
    // smaller representative, so extending every representative in every way
    // reaches every class.
    for (const auto& base : enumerate_unlabeled(n - 1)) {
      const auto edges = base.graph.edges();
      for (VertexSet nbrs = 0; nbrs < (VertexSet{1} << (n - 1)); ++nbrs) {
        std::vector<Edge> extended = edges;
        for (int v = 0; v < n - 1; ++v) {
          if (contains(nbrs, v)) extended.emplace_back(v, n - 1);
        }
        forms.emplace(canonical_form(Graph::from_edges(n, extended)), true);
      }
    }
  }
  return entries_from_forms(forms);
}

std::vector<CatalogEntry> filter(const std::vector<CatalogEntry>& entries,
                                 const CatalogFilter& predicate) {
  const auto matches = [](const std::optional<bool>& want, bool have) {
    return !want || *want == have;
  };
  std::vector<CatalogEntry> out;
  for (const auto& e : entries) {
    if (matches(predicate.connected, e.flags.connected) &&
        matches(predicate.point_determining, e.flags.point_determining) &&
        matches(predicate.chordal, e.flags.chordal) &&
        matches(predicate.triangle_free, e.flags.triangle_free)) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<CatalogEntry> catalog_up_to(int max_order) {
  std::vector<CatalogEntry> all;
  for (int n = 1; n <= max_order; ++n) {
    auto part = enumerate_unlabeled(n);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

nlohmann::json entry_json(const CatalogEntry& entry) {
  return {{"graph6", to_graph6(entry.graph)},
          {"n", entry.graph.order()},
          {"m", entry.graph.size()},
          {"connected", entry.flags.connected},
          {"point_determining", entry.flags.point_determining},
          {"chordal", entry.flags.chordal},
          {"triangle_free", entry.flags.triangle_free},
          {"aut_order", entry.aut_order}};
}

void write_catalog(const std::filesystem::path& dir, int n,
                   const std::vector<CatalogEntry>& entries) {
  std::filesystem::create_directories(dir);
  std::ofstream g6(dir / (file_stem(n) + ".g6"));
  nlohmann::json sidecar = {{"format_version", kCatalogFormatVersion},
                            {"n", n},
                            {"entries", nlohmann::json::array()}};
  for (const auto& e : entries) {
    g6 << to_graph6(e.graph) << '\n';
    sidecar["entries"].push_back(entry_json(e));
  }
  std::ofstream(dir / (file_stem(n) + ".json")) << sidecar.dump(1) << '\n';
  if (!g6) throw Error(ErrorCode::kInvalidArgument, "failed writing catalog to " + dir.string());
}

std::optional<std::vector<CatalogEntry>> read_catalog(const std::filesystem::path& dir, int n) {
  const auto g6_path = dir / (file_stem(n) + ".g6");
  const auto json_path = dir / (file_stem(n) + ".json");
  if (!std::filesystem::exists(g6_path) || !std::filesystem::exists(json_path)) {
    return std::nullopt;
  }
  nlohmann::json sidecar;
  try {
    std::ifstream(json_path) >> sidecar;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (sidecar.value("format_version", -1) != kCatalogFormatVersion || sidecar.value("n", -1) != n) {
    return std::nullopt;
  }
  std::ifstream g6(g6_path);
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t index = 0;
  const auto& meta = sidecar["entries"];
  while (std::getline(g6, line)) {
    if (line.empty()) continue;
    if (index >= meta.size()) return std::nullopt;
    CatalogEntry e;
    e.graph = parse_graph6(line);
    const auto& m = meta[index++];
    if (m.value("graph6", "") != line) return std::nullopt;
    e.flags.connected = m.at("connected").get<bool>();
    e.flags.point_determining = m.at("point_determining").get<bool>();
    e.flags.chordal = m.at("chordal").get<bool>();
    e.flags.triangle_free = m.at("triangle_free").get<bool>();
    e.aut_order = m.at("aut_order").get<std::uint64_t>();
    out.push_back(std::move(e));
  }
  if (index != meta.size()) return std::nullopt;
  return out;
}

std::vector<CatalogEntry> load_or_build_catalog(const std::filesystem::path& dir, int n) {
  if (auto cached = read_catalog(dir, n)) return std::move(*cached);
  auto entries = enumerate_unlabeled(n);
  write_catalog(dir, n, entries);
  return entries;
}

}  // namespace ulcf
