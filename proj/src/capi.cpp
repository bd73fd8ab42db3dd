#include "ulcf/ulcf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "ulcf/assignment_search.hpp"
#include "ulcf/catalog.hpp"
#include "ulcf/chromatic.hpp"
#include "ulcf/error.hpp"
#include "ulcf/list_coloring.hpp"
#include "ulcf/symmetry.hpp"
#include "ulcf/verifier.hpp"

struct ulcf_graph {
  ulcf::Graph graph;
};

struct ulcf_lists {
  ulcf::ListAssignment lists;
};

struct ulcf_polynomial {
  ulcf::Polynomial poly;
};

namespace {

thread_local std::string last_error;

ulcf_status fail(ulcf_status status, const char* what) {
  last_error = what;
  return status;
}

template <typename Body>
ulcf_status guarded(Body&& body) noexcept {
  try {
    body();
    last_error.clear();
    return ULCF_OK;
  } catch (const ulcf::Error& e) {
    return fail(static_cast<ulcf_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(ULCF_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ULCF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ULCF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ULCF_ERR_INTERNAL, "unknown failure");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw ulcf::InvalidArgument(what);
}

std::optional<bool> tristate(int v) {
  if (v < 0) return std::nullopt;
  return v != 0;
}

std::vector<ulcf::CatalogEntry> catalog(int n, const char* cache_dir) {
  if (cache_dir && *cache_dir) return ulcf::load_or_build_catalog(cache_dir, n);
  return ulcf::enumerate_unlabeled(n);
}

ulcf::SearchOptions search_options(int workers) {
  ulcf::SearchOptions o;
  o.workers = workers < 1 ? 1 : workers;
  return o;
}

}  // namespace

extern "C" {

const char* ulcf_version(void) { return "0.1.0"; }

const char* ulcf_last_error(void) { return last_error.c_str(); }

void ulcf_string_free(char* s) { std::free(s); }

ulcf_status ulcf_graph_from_graph6(const char* text, ulcf_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new ulcf_graph{ulcf::parse_graph6(text)};
  });
}

ulcf_status ulcf_graph_from_edge_list(const char* text, ulcf_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new ulcf_graph{ulcf::parse_edge_list(text)};
  });
}

ulcf_status ulcf_graph_from_catalog(int n, int index, const char* cache_dir, ulcf_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto entries = catalog(n, cache_dir);
    if (index < 0 || static_cast<std::size_t>(index) >= entries.size()) {
      throw ulcf::InvalidArgument("catalog index " + std::to_string(index) + " out of range 0.." +
                                  std::to_string(entries.size() - 1));
    }
    *out = new ulcf_graph{entries[index].graph};
  });
}

void ulcf_graph_free(ulcf_graph* g) { delete g; }

int ulcf_graph_order(const ulcf_graph* g) { return g ? g->graph.order() : -1; }

int ulcf_graph_size(const ulcf_graph* g) { return g ? g->graph.size() : -1; }

ulcf_status ulcf_graph_to_graph6(const ulcf_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = duplicate(ulcf::to_graph6(g->graph));
  });
}

ulcf_status ulcf_graph_to_edge_list(const ulcf_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = duplicate(ulcf::to_edge_list(g->graph));
  });
}

ulcf_status ulcf_automorphisms_json(const ulcf_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto aut = ulcf::automorphism_group(g->graph);
    const auto cls = ulcf::classify(g->graph, aut);
    nlohmann::json j = {{"order", aut.order()}, {"a", cls.a}, {"b", cls.b}};
    j["elements"] = nlohmann::json::array();
    for (const auto& pi : aut.elements) j["elements"].push_back(pi.to_string());
    *out = duplicate(j.dump());
  });
}

ulcf_status ulcf_chromatic_polynomial(const ulcf_graph* g, ulcf_polynomial** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new ulcf_polynomial{ulcf::chromatic_polynomial(g->graph)};
  });
}

ulcf_status ulcf_unlabeled_chromatic_polynomial(const ulcf_graph* g, ulcf_polynomial** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new ulcf_polynomial{ulcf::unlabeled_chromatic_polynomial(g->graph)};
  });
}

void ulcf_polynomial_free(ulcf_polynomial* p) { delete p; }

ulcf_status ulcf_polynomial_to_string(const ulcf_polynomial* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = duplicate(p->poly.to_string());
  });
}

ulcf_status ulcf_polynomial_factored(const ulcf_polynomial* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = duplicate(p->poly.factored());
  });
}

ulcf_status ulcf_polynomial_to_json(const ulcf_polynomial* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = duplicate(p->poly.to_json().dump());
  });
}

ulcf_status ulcf_polynomial_evaluate(const ulcf_polynomial* p, long k, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = duplicate(ulcf::to_string(p->poly.evaluate(k)));
  });
}

ulcf_status ulcf_lists_parse(const char* text, ulcf_lists** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new ulcf_lists{ulcf::ListAssignment::parse(text)};
  });
}

ulcf_status ulcf_lists_from_json(const char* json, ulcf_lists** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new ulcf_lists{ulcf::ListAssignment::from_json(nlohmann::json::parse(json))};
  });
}

ulcf_status ulcf_lists_constant(int n, int k, ulcf_lists** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new ulcf_lists{ulcf::ListAssignment::constant(n, k)};
  });
}

void ulcf_lists_free(ulcf_lists* lists) { delete lists; }

ulcf_status ulcf_lists_to_json(const ulcf_lists* lists, char** out) {
  return guarded([&] {
    require(lists && out, "null argument");
    *out = duplicate(lists->lists.to_json().dump());
  });
}

ulcf_status ulcf_count_list_colorings(const ulcf_graph* g, const ulcf_lists* lists,
                                      uint64_t* out) {
  return guarded([&] {
    require(g && lists && out, "null argument");
    *out = ulcf::count_list_colorings(g->graph, lists->lists);
  });
}

ulcf_status ulcf_count_unlabeled_list_colorings(const ulcf_graph* g, const ulcf_lists* lists,
                                                uint64_t* out) {
  return guarded([&] {
    require(g && lists && out, "null argument");
    *out = ulcf::unlabeled_list_coloring_count(g->graph, ulcf::automorphism_group(g->graph),
                                               lists->lists);
  });
}

ulcf_status ulcf_burnside_bound(const ulcf_graph* g, const ulcf_lists* lists, char** out) {
  return guarded([&] {
    require(g && lists && out, "null argument");
    *out = duplicate(ulcf::to_string(
        ulcf::burnside_lower_bound(g->graph, ulcf::automorphism_group(g->graph), lists->lists)));
  });
}

ulcf_status ulcf_list_color_function(const ulcf_graph* g, int k, int workers, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = duplicate(
        ulcf::list_color_function(g->graph, k, search_options(workers)).to_json().dump());
  });
}

ulcf_status ulcf_unlabeled_list_color_function(const ulcf_graph* g, int k, int workers,
                                               char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = duplicate(ulcf::unlabeled_list_color_function(g->graph, k, search_options(workers))
                         .to_json()
                         .dump());
  });
}

ulcf_status ulcf_threshold_search(const ulcf_graph* g, int k_max, int workers, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = duplicate(
        ulcf::threshold_search(g->graph, k_max, search_options(workers)).to_json().dump());
  });
}

ulcf_status ulcf_catalog_json(int n, const ulcf_catalog_filter* filter, const char* cache_dir,
                              char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto entries = catalog(n, cache_dir);
    if (filter) {
      ulcf::CatalogFilter f;
      f.connected = tristate(filter->connected);
      f.point_determining = tristate(filter->point_determining);
      f.chordal = tristate(filter->chordal);
      f.triangle_free = tristate(filter->triangle_free);
      entries = ulcf::filter(entries, f);
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries) j.push_back(ulcf::entry_json(e));
    *out = duplicate(j.dump());
  });
}

void ulcf_suite_options_default(ulcf_suite_options* options) {
  if (!options) return;
  const ulcf::SuiteOptions d;
  options->max_order = d.max_order;
  options->kmax = d.kmax;
  options->seed = d.seed;
  options->workers = d.workers;
  options->assignments = d.assignments;
  options->burnside_instances = d.burnside_instances;
  options->path_instances = d.path_instances;
  options->union_max_order = d.union_max_order;
  options->list_k = d.list_k;
  options->search_max_order = d.search_max_order;
  options->search_kmax = d.search_kmax;
}

ulcf_status ulcf_suite_names(char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = duplicate(nlohmann::json(ulcf::suite_names()).dump());
  });
}

ulcf_status ulcf_verify_suite(const char* name, const ulcf_suite_options* options,
                              int include_timing, char** reports_out, char** summary_out,
                              int* failures) {
  return guarded([&] {
    require(name && options, "null argument");
    ulcf::SuiteOptions o;
    o.max_order = options->max_order;
    o.kmax = options->kmax;
    o.seed = options->seed;
    o.workers = options->workers;
    o.assignments = options->assignments;
    o.burnside_instances = options->burnside_instances;
    o.path_instances = options->path_instances;
    o.union_max_order = options->union_max_order;
    o.list_k = options->list_k;
    o.search_max_order = options->search_max_order;
    o.search_kmax = options->search_kmax;
    const auto reports = ulcf::run_suite(name, o);
    const auto tally = ulcf::summarize(reports);
    if (reports_out) {
      std::string lines;
      for (const auto& r : reports) {
        lines += r.to_json(include_timing != 0).dump();
        lines += '\n';
      }
      *reports_out = duplicate(lines);
    }
    if (summary_out) *summary_out = duplicate(ulcf::summary_json(tally).dump());
    if (failures) {
      int total = 0;
      for (const auto& [claim, t] : tally) total += t.fail;
      *failures = total;
    }
  });
}

}  // extern "C"
