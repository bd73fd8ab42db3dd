#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "ulcf/ulcf.h"

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  ulcf_string_free(s);
  return out;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (const char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("graph handles and error codes") {
  ulcf_graph* g = nullptr;
  REQUIRE(ulcf_graph_from_graph6("Bg", &g) == ULCF_OK);
  CHECK(ulcf_graph_order(g) == 3);
  CHECK(ulcf_graph_size(g) == 2);
  char* text = nullptr;
  REQUIRE(ulcf_graph_to_edge_list(g, &text) == ULCF_OK);
  CHECK(take(text) == "3: 0-1, 1-2");
  ulcf_graph_free(g);

  ulcf_graph* bad = nullptr;
  CHECK(ulcf_graph_from_graph6("C~~", &bad) == ULCF_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(ulcf_last_error()).find("at byte 2") != std::string::npos);
  CHECK(ulcf_graph_from_edge_list("3: 0-3", &bad) == ULCF_ERR_INVALID_ARGUMENT);
  CHECK(ulcf_graph_from_graph6(nullptr, &bad) == ULCF_ERR_INVALID_ARGUMENT);
  CHECK(ulcf_graph_from_catalog(9, 0, nullptr, &bad) == ULCF_ERR_LIMIT);
  CHECK(ulcf_graph_from_catalog(3, 4, nullptr, &bad) == ULCF_ERR_INVALID_ARGUMENT);
  REQUIRE(ulcf_graph_from_catalog(3, 3, nullptr, &g) == ULCF_OK);
  CHECK(ulcf_graph_size(g) == 3);
  ulcf_graph_free(g);
  ulcf_graph_free(nullptr);
}

TEST_CASE("polynomials through the C API") {
  ulcf_graph* g = nullptr;
  REQUIRE(ulcf_graph_from_edge_list("3: 0-1, 1-2", &g) == ULCF_OK);
  ulcf_polynomial* p = nullptr;
  REQUIRE(ulcf_chromatic_polynomial(g, &p) == ULCF_OK);
  char* s = nullptr;
  REQUIRE(ulcf_polynomial_to_string(p, &s) == ULCF_OK);
  CHECK(take(s) == "k^3 - 2k^2 + k");
  REQUIRE(ulcf_polynomial_factored(p, &s) == ULCF_OK);
  CHECK(take(s) == "k(k-1)^2");
  ulcf_polynomial_free(p);

  REQUIRE(ulcf_unlabeled_chromatic_polynomial(g, &p) == ULCF_OK);
  REQUIRE(ulcf_polynomial_evaluate(p, 2, &s) == ULCF_OK);
  CHECK(take(s) == "2");
  REQUIRE(ulcf_polynomial_to_json(p, &s) == ULCF_OK);
  CHECK(take(s).front() == '[');
  ulcf_polynomial_free(p);

  REQUIRE(ulcf_automorphisms_json(g, &s) == ULCF_OK);
  CHECK(take(s).find("(0 2)") != std::string::npos);
  ulcf_graph_free(g);
}

TEST_CASE("list counts and searches through the C API") {
  ulcf_graph* g = nullptr;
  REQUIRE(ulcf_graph_from_edge_list("3: 0-1, 1-2", &g) == ULCF_OK);
  ulcf_lists* lists = nullptr;
  REQUIRE(ulcf_lists_parse("0:1,2;1:1,2;2:2,3", &lists) == ULCF_OK);
  uint64_t count = 0;
  REQUIRE(ulcf_count_list_colorings(g, lists, &count) == ULCF_OK);
  CHECK(count == 3);
  REQUIRE(ulcf_count_unlabeled_list_colorings(g, lists, &count) == ULCF_OK);
  CHECK(count == 3);
  char* s = nullptr;
  REQUIRE(ulcf_burnside_bound(g, lists, &s) == ULCF_OK);
  CHECK(take(s) == "2");
  ulcf_lists_free(lists);

  REQUIRE(ulcf_lists_constant(2, 2, &lists) == ULCF_OK);
  CHECK(ulcf_count_list_colorings(g, lists, &count) == ULCF_ERR_INVALID_ARGUMENT);
  ulcf_lists_free(lists);
  CHECK(ulcf_lists_parse("0:x", &lists) == ULCF_ERR_PARSE);
  CHECK(ulcf_lists_from_json("{", &lists) == ULCF_ERR_PARSE);

  REQUIRE(ulcf_unlabeled_list_color_function(g, 2, 2, &s) == ULCF_OK);
  CHECK(take(s).find("\"value\":2") != std::string::npos);
  REQUIRE(ulcf_threshold_search(g, 3, 1, &s) == ULCF_OK);
  CHECK(take(s).find("\"equal_from\"") != std::string::npos);
  ulcf_graph_free(g);

  REQUIRE(ulcf_graph_from_graph6("E???", &g) == ULCF_OK);
  CHECK(ulcf_list_color_function(g, 2, 1, &s) == ULCF_ERR_LIMIT);
  ulcf_graph_free(g);
}

TEST_CASE("catalog and suites through the C API") {
  char* s = nullptr;
  ulcf_catalog_filter connected{1, -1, -1, -1};
  REQUIRE(ulcf_catalog_json(4, &connected, nullptr, &s) == ULCF_OK);
  CHECK(take(s).find("\"connected\":false") == std::string::npos);

  REQUIRE(ulcf_suite_names(&s) == ULCF_OK);
  CHECK(take(s).find("\"hanlon\"") != std::string::npos);

  ulcf_suite_options options;
  ulcf_suite_options_default(&options);
  CHECK(options.max_order == 5);
  options.max_order = 4;
  options.kmax = 5;
  char* reports = nullptr;
  char* summary = nullptr;
  int failures = -1;
  REQUIRE(ulcf_verify_suite("hanlon", &options, 0, &reports, &summary, &failures) == ULCF_OK);
  const std::string lines = take(reports);
  CHECK(count_lines(lines) == 90);
  CHECK(lines.find("runtime_ms") == std::string::npos);
  CHECK(take(summary).find("\"pass\":90") != std::string::npos);
  CHECK(failures == 0);

  CHECK(ulcf_verify_suite("nope", &options, 0, nullptr, nullptr, nullptr) ==
        ULCF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ulcf_version()).size() > 0);
}
