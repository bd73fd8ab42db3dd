#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "ulcf/chromatic.hpp"
#include "ulcf/error.hpp"
#include "ulcf/polynomial.hpp"

using namespace ulcf;

namespace {

Integer binomial(long n, long r) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic and rendering") {
  const Polynomial k = Polynomial::monomial(1);
  const Polynomial p = k * (k - Polynomial::constant(1)) * (k - Polynomial::constant(1));
  CHECK(p.to_string() == "k^3 - 2k^2 + k");
  CHECK(p.factored() == "k(k-1)^2");
  CHECK(p.degree() == 3);
  CHECK(p.evaluate(3L) == 12);
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial().degree() == -1);
  const Polynomial half = Polynomial::rising_factorial(2) * Rational(1, 2);
  CHECK(half.to_string() == "(1/2)k^2 + (1/2)k");
  CHECK(half.factored() == "(1/2)k(k+1)");
  CHECK(Polynomial::falling_factorial(3).factored() == "k(k-1)(k-2)");
  CHECK(p.shifted(1).evaluate(2L) == p.evaluate(3L));
  CHECK(Polynomial::from_json(half.to_json()) == half);
  CHECK(half.to_json().dump() == R"(["0/1","1/2","1/2"])");
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("chromatic polynomial spot values") {
  CHECK(chromatic_polynomial(Graph(0)) == Polynomial::constant(1));
  CHECK(chromatic_polynomial(support::path(3)).to_string() == "k^3 - 2k^2 + k");
  for (int n = 1; n <= 7; ++n) {
    CHECK(chromatic_polynomial(support::complete(n)) == Polynomial::falling_factorial(n));
    CHECK(chromatic_polynomial(Graph(n)) == Polynomial::monomial(n));
  }
  // (k-1)^n + (-1)^n (k-1)
  const Polynomial km1 = Polynomial::monomial(1) - Polynomial::constant(1);
  Polynomial c5 = km1 * km1 * km1 * km1 * km1 - km1;
  CHECK(chromatic_polynomial(support::cycle(5)) == c5);
}

TEST_CASE("chromatic polynomial agrees with odometer counts") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = support::random_graph(n, 0.5, rng);
    const Polynomial p = chromatic_polynomial(g);
    const Polynomial uncached = chromatic_polynomial(g, nullptr);
    CHECK(p == uncached);
    CHECK(p.degree() == n);
    CHECK(p.coefficient(n - 1) == -g.size());
    for (int k = 0; k <= 4; ++k) {
      const auto expected = oracle::count_colorings(support::to_matrix(g), k);
      CHECK(p.evaluate(static_cast<long>(k)) == Rational(static_cast<unsigned long>(expected)));
      CHECK(count_colorings_brute(g, k) == expected);
    }
  }
}

TEST_CASE("component products") {
  const Graph u = disjoint_union(support::cycle(4), support::complete(3));
  CHECK(chromatic_polynomial(u) ==
        chromatic_polynomial(support::cycle(4)) * chromatic_polynomial(support::complete(3)));
}

TEST_CASE("cache is shared and consistent") {
  ChromaticCache cache;
  const Graph g = support::cycle(6);
  const Polynomial first = chromatic_polynomial(g, &cache);
  CHECK(cache.size() > 0);
  CHECK(chromatic_polynomial(g, &cache) == first);
  cache.clear();
  CHECK(cache.size() == 0);
}

TEST_CASE("fixed-coloring polynomial") {
  const Graph c4 = support::cycle(4);
  const auto half_turn = Permutation::from_images({2, 3, 0, 1});
  CHECK(fixed_coloring_polynomial(c4, half_turn) == chromatic_polynomial(support::complete(2)));
  const auto rotation = Permutation::from_images({1, 2, 3, 0});
  CHECK(fixed_coloring_polynomial(c4, rotation).is_zero());
  CHECK_THROWS_AS(fixed_coloring_polynomial(c4, Permutation::from_images({1, 0, 2, 3})),
                  PreconditionError);
}

TEST_CASE("unlabeled chromatic polynomial spot values") {
  const Polynomial p3 = unlabeled_chromatic_polynomial(support::path(3));
  CHECK(p3.evaluate(3L) == 9);
  CHECK(p3.evaluate(2L) == 2);
  CHECK(p3.factored() == "(1/2)k^2(k-1)");
  CHECK(unlabeled_chromatic_polynomial(support::cycle(4)).evaluate(2L) == 1);
  CHECK(unlabeled_chromatic_polynomial(Graph(1)) == Polynomial::monomial(1));
  CHECK(unlabeled_chromatic_polynomial(support::complete(3)).evaluate(3L) == 1);
  for (int n = 1; n <= 5; ++n) {
    for (long k = 0; k <= 6; ++k) {
      // Multisets of n colors from k.
      const Integer expected = k == 0 ? Integer(0) : binomial(k + n - 1, n);
      CHECK(unlabeled_chromatic_polynomial(Graph(n)).evaluate(k) == Rational(expected));
    }
  }
}

TEST_CASE("unlabeled chromatic polynomial agrees with orbit search") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Graph g = support::random_graph(n, 0.4, rng);
    const Polynomial p = unlabeled_chromatic_polynomial(g);
    for (int k = 1; k <= 4; ++k) {
      const auto expected = oracle::unlabeled_count(support::to_matrix(g), k);
      CHECK(p.evaluate(static_cast<long>(k)) == Rational(static_cast<unsigned long>(expected)));
      CHECK(count_unlabeled_colorings_brute(g, k) == expected);
    }
  }
}

TEST_CASE("brute force guards") {
  CHECK_THROWS_AS(count_colorings_brute(Graph(12), 5), LimitExceeded);
  CHECK_THROWS_AS(count_colorings_brute(Graph(2), -1), InvalidArgument);
  CHECK(count_colorings_brute(Graph(0), 3) == 1);
}
