// Command-line front end over the C API. Exit codes: 0 all pass or skip,
// 1 usage or input error, 2 some verification failed.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulcf/ulcf.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

class ApiFailure : public std::runtime_error {
 public:
  ApiFailure(ulcf_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  ulcf_status status() const { return status_; }

 private:
  ulcf_status status_;
};

void check(ulcf_status status) {
  if (status != ULCF_OK) throw ApiFailure(status, ulcf_last_error());
}

std::string take(char* s) {
  std::string out(s ? s : "");
  ulcf_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
};

using GraphHandle = Handle<ulcf_graph, ulcf_graph_free>;
using ListsHandle = Handle<ulcf_lists, ulcf_lists_free>;
using PolyHandle = Handle<ulcf_polynomial, ulcf_polynomial_free>;

struct GraphInput {
  std::string graph6;
  std::string edges;
  std::string catalog;
  std::string cache_dir;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  auto* g6 = cmd->add_option("--graph6", in.graph6, "Graph in graph6 format");
  auto* edges = cmd->add_option("--edges", in.edges, "Edge list \"n: u-v, u-v\"");
  auto* cat = cmd->add_option("--catalog", in.catalog, "Catalog entry n:i (0-based)");
  g6->excludes(edges, cat);
  edges->excludes(cat);
  cmd->add_option("--cache-dir", in.cache_dir, "Directory for cached catalog files");
}

void load_graph(const GraphInput& in, GraphHandle& out) {
  if (!in.graph6.empty()) {
    check(ulcf_graph_from_graph6(in.graph6.c_str(), &out.ptr));
  } else if (!in.edges.empty()) {
    check(ulcf_graph_from_edge_list(in.edges.c_str(), &out.ptr));
  } else if (!in.catalog.empty()) {
    const auto colon = in.catalog.find(':');
    int n = 0;
    int index = 0;
    try {
      if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
      n = std::stoi(in.catalog.substr(0, colon));
      index = std::stoi(in.catalog.substr(colon + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--catalog", "expected n:i, got '" + in.catalog + "'");
    }
    check(ulcf_graph_from_catalog(n, index, in.cache_dir.empty() ? nullptr : in.cache_dir.c_str(),
                                  &out.ptr));
  } else {
    throw CLI::RequiredError("one of --graph6, --edges, --catalog");
  }
}

std::string read_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream file(arg.substr(1));
  if (!file) throw CLI::ValidationError("--lists-json", "cannot read " + arg.substr(1));
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void print_json(const std::string& text) { std::cout << json::parse(text).dump(2) << '\n'; }

void print_witnesses(const json& result) {
  std::cout << "explored " << result.at("explored") << " patterns\n";
  const auto& witnesses = result.at("witnesses");
  std::cout << witnesses.size() << " minimizing pattern(s) kept\n";
  for (const auto& w : witnesses) std::cout << "  " << w.at("cells").dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colorings and list colorings of labeled and unlabeled graphs"};
  app.require_subcommand(1);
  std::string format = "table";
  int workers = 1;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
  };

  GraphInput graph_in;

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  add_graph_options(aut, graph_in);
  add_format(aut);

  auto* chrom = app.add_subcommand("chrompoly", "Chromatic polynomial");
  add_graph_options(chrom, graph_in);
  add_format(chrom);

  auto* unlabeled = app.add_subcommand("unlabeled-poly", "Unlabeled chromatic polynomial");
  add_graph_options(unlabeled, graph_in);
  add_format(unlabeled);
  long eval_at = 0;
  auto* eval_opt = unlabeled->add_option("--eval", eval_at, "Evaluate at k instead");

  auto* listcount = app.add_subcommand("listcount", "Count list colorings");
  add_graph_options(listcount, graph_in);
  add_format(listcount);
  std::string lists_text;
  std::string lists_json;
  auto* lists_opt = listcount->add_option("--lists", lists_text, "Lists \"v:c,c;v:c,c\"");
  auto* lists_json_opt =
      listcount->add_option("--lists-json", lists_json, "Lists as JSON, or @file");
  lists_opt->excludes(lists_json_opt);

  int k = 0;
  auto* ulcf_cmd = app.add_subcommand("ulcf", "Unlabeled list color function at k");
  auto* plcf_cmd = app.add_subcommand("plcf", "List color function at k");
  for (auto* cmd : {ulcf_cmd, plcf_cmd}) {
    add_graph_options(cmd, graph_in);
    add_format(cmd);
    cmd->add_option("--k", k, "List size")->required();
    cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  }

  int k_max = 4;
  auto* threshold = app.add_subcommand("threshold", "Empirical equality table");
  add_graph_options(threshold, graph_in);
  add_format(threshold);
  threshold->add_option("--kmax", k_max, "Largest k");
  threshold->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "Unlabeled graphs of one order");
  add_format(catalog);
  int catalog_n = 0;
  std::string catalog_dir;
  bool want_connected = false, want_pd = false, want_chordal = false, want_tf = false;
  catalog->add_option("--n", catalog_n, "Order (1..7)")->required();
  catalog->add_option("--cache-dir", catalog_dir, "Directory for cached catalog files");
  catalog->add_flag("--connected", want_connected, "Only connected graphs");
  catalog->add_flag("--point-determining", want_pd, "Only point-determining graphs");
  catalog->add_flag("--chordal", want_chordal, "Only chordal graphs");
  catalog->add_flag("--triangle-free", want_tf, "Only triangle-free graphs");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_format(verify);
  ulcf_suite_options suite;
  ulcf_suite_options_default(&suite);
  std::string suite_name;
  std::vector<std::string> names{"all"};
  {
    char* raw = nullptr;
    check(ulcf_suite_names(&raw));
    for (const auto& n : json::parse(take(raw))) names.push_back(n.get<std::string>());
  }
  bool timing = false;
  verify->add_option("suite", suite_name, "Suite name")->required()->check(CLI::IsMember(names));
  verify->add_option("--max-order", suite.max_order, "Largest catalog order");
  verify->add_option("--kmax", suite.kmax, "Largest k for polynomial sweeps");
  verify->add_option("--seed", suite.seed, "Seed for generated list assignments");
  verify->add_option("--workers", suite.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--assignments", suite.assignments, "Random assignments per (G, k)");
  verify->add_option("--burnside-instances", suite.burnside_instances);
  verify->add_option("--path-instances", suite.path_instances);
  verify->add_option("--union-max-order", suite.union_max_order);
  verify->add_option("--list-k", suite.list_k);
  verify->add_option("--search-max-order", suite.search_max_order);
  verify->add_option("--search-kmax", suite.search_kmax);
  verify->add_flag("--timing", timing, "Include runtime_ms in reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool as_json = format == "json";
  try {
    GraphHandle graph;
    if (aut->parsed()) {
      load_graph(graph_in, graph);
      char* raw = nullptr;
      check(ulcf_automorphisms_json(graph.ptr, &raw));
      const std::string text = take(raw);
      if (as_json) {
        print_json(text);
      } else {
        const auto j = json::parse(text);
        std::cout << "|Aut| = " << j["order"] << "  a = " << j["a"] << "  b = " << j["b"] << '\n';
        for (const auto& e : j["elements"]) std::cout << e.get<std::string>() << '\n';
      }
    } else if (chrom->parsed() || (unlabeled->parsed() && !eval_opt->count())) {
      load_graph(graph_in, graph);
      PolyHandle poly;
      check(chrom->parsed() ? ulcf_chromatic_polynomial(graph.ptr, &poly.ptr)
                            : ulcf_unlabeled_chromatic_polynomial(graph.ptr, &poly.ptr));
      char* raw = nullptr;
      check(ulcf_polynomial_to_string(poly.ptr, &raw));
      const std::string expanded = take(raw);
      check(ulcf_polynomial_factored(poly.ptr, &raw));
      const std::string factored = take(raw);
      check(ulcf_polynomial_to_json(poly.ptr, &raw));
      const std::string coeffs = take(raw);
      if (as_json) {
        std::cout << json{{"polynomial", expanded},
                          {"factored", factored},
                          {"coefficients", json::parse(coeffs)}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << expanded << '\n' << factored << '\n';
      }
    } else if (unlabeled->parsed()) {
      load_graph(graph_in, graph);
      PolyHandle poly;
      check(ulcf_unlabeled_chromatic_polynomial(graph.ptr, &poly.ptr));
      char* raw = nullptr;
      check(ulcf_polynomial_evaluate(poly.ptr, eval_at, &raw));
      const std::string value = take(raw);
      if (as_json) {
        std::cout << json{{"k", eval_at}, {"value", value}}.dump(2) << '\n';
      } else {
        std::cout << value << '\n';
      }
    } else if (listcount->parsed()) {
      load_graph(graph_in, graph);
      ListsHandle lists;
      if (!lists_text.empty()) {
        check(ulcf_lists_parse(lists_text.c_str(), &lists.ptr));
      } else if (!lists_json.empty()) {
        check(ulcf_lists_from_json(read_text(lists_json).c_str(), &lists.ptr));
      } else {
        throw CLI::RequiredError("--lists or --lists-json");
      }
      std::uint64_t labeled = 0;
      std::uint64_t classes = 0;
      check(ulcf_count_list_colorings(graph.ptr, lists.ptr, &labeled));
      check(ulcf_count_unlabeled_list_colorings(graph.ptr, lists.ptr, &classes));
      char* raw = nullptr;
      check(ulcf_burnside_bound(graph.ptr, lists.ptr, &raw));
      const std::string bound = take(raw);
      if (as_json) {
        std::cout << json{{"labeled", labeled}, {"unlabeled", classes}, {"burnside_bound", bound}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "P(G,L)   = " << labeled << '\n'
                  << "u_l(G,L) = " << classes << '\n'
                  << "bound    = " << bound << '\n';
      }
    } else if (ulcf_cmd->parsed() || plcf_cmd->parsed()) {
      load_graph(graph_in, graph);
      char* raw = nullptr;
      check(ulcf_cmd->parsed() ? ulcf_unlabeled_list_color_function(graph.ptr, k, workers, &raw)
                               : ulcf_list_color_function(graph.ptr, k, workers, &raw));
      const std::string text = take(raw);
      if (as_json) {
        print_json(text);
      } else {
        const auto j = json::parse(text);
        std::cout << (ulcf_cmd->parsed() ? "P_l(unlabeled G, " : "P_l(G, ") << k
                  << ") = " << j["value"] << '\n';
        print_witnesses(j);
      }
    } else if (threshold->parsed()) {
      load_graph(graph_in, graph);
      char* raw = nullptr;
      check(ulcf_threshold_search(graph.ptr, k_max, workers, &raw));
      const std::string text = take(raw);
      if (as_json) {
        print_json(text);
      } else {
        const auto j = json::parse(text);
        std::cout << std::left << std::setw(4) << "k" << std::setw(12) << "P_l" << std::setw(12)
                  << "P" << "equal\n";
        for (const auto& row : j["rows"]) {
          const bool refused = row["unlabeled_list"].is_null();
          std::cout << std::setw(4) << row["k"].get<int>() << std::setw(12)
                    << (refused ? std::string("refused") : row["unlabeled_list"].dump())
                    << std::setw(12) << row["unlabeled_chromatic"].get<std::string>()
                    << (refused ? "-" : row["equal"].get<bool>() ? "yes" : "no") << '\n';
        }
        if (j["equal_from"].is_null()) {
          std::cout << "no equality run reaching k_max\n";
        } else {
          std::cout << "equal from k = " << j["equal_from"] << " (" << j["label"].get<std::string>()
                    << ")\n";
        }
      }
    } else if (catalog->parsed()) {
      const ulcf_catalog_filter filter{want_connected ? 1 : -1, want_pd ? 1 : -1,
                                       want_chordal ? 1 : -1, want_tf ? 1 : -1};
      char* raw = nullptr;
      check(ulcf_catalog_json(catalog_n, &filter, catalog_dir.empty() ? nullptr : catalog_dir.c_str(),
                              &raw));
      const std::string text = take(raw);
      if (as_json) {
        print_json(text);
      } else {
        for (const auto& e : json::parse(text)) {
          std::cout << e["graph6"].get<std::string>() << "  m=" << e["m"]
                    << "  |Aut|=" << e["aut_order"] << '\n';
        }
      }
    } else if (verify->parsed()) {
      char* reports = nullptr;
      char* summary = nullptr;
      int failures = 0;
      check(ulcf_verify_suite(suite_name.c_str(), &suite, timing ? 1 : 0, &reports, &summary,
                              &failures));
      const std::string report_lines = take(reports);
      const auto tally = json::parse(take(summary));
      if (as_json) {
        std::cout << report_lines << json{{"summary", tally}}.dump() << '\n';
      } else {
        std::istringstream lines(report_lines);
        std::string line;
        std::size_t total = 0;
        while (std::getline(lines, line)) {
          ++total;
          const auto r = json::parse(line);
          if (r["status"] == "fail") {
            std::cout << "FAIL " << r["claim"].get<std::string>() << "  "
                      << r["instance"].get<std::string>() << "  lhs=" << r["lhs"].get<std::string>()
                      << "  rhs=" << r["rhs"].get<std::string>() << '\n';
          }
        }
        std::cout << std::left << std::setw(24) << "claim" << std::setw(8) << "pass"
                  << std::setw(8) << "fail" << std::setw(8) << "skip" << "info\n";
        for (const auto& [claim, t] : tally.items()) {
          std::cout << std::setw(24) << claim << std::setw(8) << t["pass"].get<int>()
                    << std::setw(8) << t["fail"].get<int>() << std::setw(8) << t["skip"].get<int>()
                    << t["info"].get<int>() << '\n';
        }
        std::cout << total << " reports\n";
      }
      return failures > 0 ? kExitFail : 0;
    }
  } catch (const ApiFailure& e) {
    if (e.status() == ULCF_ERR_LIMIT) {
      std::cerr << "warning: skipped: " << e.what() << '\n';
      if (as_json) std::cout << json{{"status", "skip"}, {"note", e.what()}}.dump() << '\n';
      return 0;
    }
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
