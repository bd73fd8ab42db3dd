#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ulcf/graph.hpp"

namespace ulcf {

inline constexpr int kMaxCatalogOrder = 7;
inline constexpr int kCatalogFormatVersion = 1;

struct CatalogFlags {
  bool connected = false;
  bool point_determining = false;
  bool chordal = false;
  bool triangle_free = false;
};

struct CatalogEntry {
  /// Canonical representative: graph_from_canonical_form(canonical_form(g)).
  Graph graph;
  CatalogFlags flags;
  std::uint64_t aut_order = 0;
};

/// Unset fields match anything.
struct CatalogFilter {
  std::optional<bool> connected;
  std::optional<bool> point_determining;
  std::optional<bool> chordal;
  std::optional<bool> triangle_free;
};

/// One representative per isomorphism class of graphs on n vertices
/// (1 <= n <= 7), sorted by canonical form. Orders up to 6 deduplicate all
/// labeled graphs; order 7 extends each order-6 representative by one vertex.
std::vector<CatalogEntry> enumerate_unlabeled(int n);

std::vector<CatalogEntry> filter(const std::vector<CatalogEntry>& entries,
                                 const CatalogFilter& predicate);

/// Every entry of orders 1..max_order, in order.
std::vector<CatalogEntry> catalog_up_to(int max_order);

nlohmann::json entry_json(const CatalogEntry& entry);

/// Writes catalog_n<N>_v<V>.g6 (one graph6 line per entry) and the matching
/// .json sidecar of flags into `dir`.
void write_catalog(const std::filesystem::path& dir, int n,
                   const std::vector<CatalogEntry>& entries);

/// Reads a catalog written by write_catalog; nullopt if absent or written by a
/// different format version.
std::optional<std::vector<CatalogEntry>> read_catalog(const std::filesystem::path& dir, int n);

/// Cached on disk keyed by n and format version.
std::vector<CatalogEntry> load_or_build_catalog(const std::filesystem::path& dir, int n);

}  // namespace ulcf
