#include <algorithm>
#include <thread>

#include "doctest.h"
#include "twosep/corpus.hpp"
#include "twosep/errors.hpp"
#include "twosep/families.hpp"
#include "twosep/forest_count.hpp"
#include "twosep/resistance.hpp"
#include "twosep/separation.hpp"

using namespace twosep;

namespace {
Ratio q(long a, long b = 1) { return Ratio(BigInt(a), BigInt(b)); }
}  // namespace

TEST_CASE("Fibonacci and Lucas values") {
  const long expected[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
  for (int p = 0; p <= 12; ++p) CHECK(fib(p) == expected[p]);
  CHECK(fib(-1) == 1);
  CHECK(fib(-2) == -1);
  CHECK(fib(-3) == 2);
  CHECK(fib(-4) == -3);
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(2) == 3);
  CHECK(lucas(5) == 11);
  CHECK(fib(100).get_str() == "354224848179261915075");
}

TEST_CASE("property: Fibonacci recurrences and Catalan's identity") {
  for (std::int64_t p = -30; p <= 60; ++p) {
    CHECK(fib(p + 1) == fib(p) + fib(p - 1));
    CHECK(lucas(p) == fib(p - 1) + fib(p + 1));
  }
  for (std::int64_t n = 0; n <= 50; ++n)
    for (std::int64_t r = 0; r <= n; ++r) {
      const BigInt sign = (n - r) % 2 == 0 ? 1 : -1;
      CHECK(fib(n) * fib(n) - fib(n - r) * fib(n + r) == sign * fib(r) * fib(r));
    }
}

TEST_CASE("FibCache is safe to share") {
  FibCache cache;
  std::vector<std::thread> threads;
  std::vector<BigInt> results(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { results[t] = cache.fib(300 + t); });
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) CHECK(results[t] == fib(300 + t));
}

TEST_CASE("straight 2-tree generator") {
  CHECK(gen_straight(4) == MultiGraph::build(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  const MultiGraph h7 = gen_straight(7);
  CHECK(h7.edge_count() == 11);
  const std::map<VertexPair, Multiplicity> expected{{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}, {{2, 4}, 1},
                                                    {{3, 4}, 1}, {{3, 5}, 1}, {{4, 5}, 1}, {{4, 6}, 1},
                                                    {{5, 6}, 1}, {{5, 7}, 1}, {{6, 7}, 1}};
  CHECK(h7.edges() == expected);
  CHECK(gen_straight(3).degree_sequence() == std::vector<Multiplicity>{2, 2, 2});
  for (std::size_t n = 4; n <= 20; ++n) {
    const MultiGraph g = gen_straight(n);
    CHECK(g.edge_count() == 2 * n - 3);
    const auto degrees = g.degree_sequence();
    CHECK(std::count(degrees.begin(), degrees.end(), 2u) == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(static_cast<Vertex>(n)) == 2);
  }
  CHECK_THROWS_AS(gen_straight(2), InvalidArgument);
}

TEST_CASE("bent 2-tree generator") {
  const MultiGraph g = gen_bent(7, 3);
  CHECK(g.degree(3) == 5);
  CHECK(g.degree(4) == 3);
  CHECK(g.multiplicity(3, 6) == 1);
  CHECK(g.multiplicity(4, 6) == 0);
  const auto degrees = g.degree_sequence();
  CHECK(std::count(degrees.begin(), degrees.end(), 5u) == 1);
  // the switched H_7, written out by hand
  const MultiGraph right = MultiGraph::build(
      7, {{1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}});
  CHECK(isomorphism_key(g) == isomorphism_key(right));
  CHECK_THROWS_AS(gen_bent(7, 5), InvalidArgument);
  CHECK_THROWS_AS(gen_bent(7, 0), InvalidArgument);
  CHECK_THROWS_AS(gen_bent(3, 1), InvalidArgument);
}

TEST_CASE("property: bent equals the straight 2-tree 2-switched at {k,k+1}") {
  for (std::size_t n = 4; n <= 14; ++n)
    for (std::size_t k = 1; k + 3 <= n; ++k) {
      const MultiGraph bent = gen_bent(n, k);
      if (k == 1) {
        // {1,2} separates nothing; the k = 1 bend is H_n with 1 and 2 swapped
        std::vector<EdgeSpec> swapped;
        for (const auto& [pair, m] : bent.edges()) {
          auto flip = [](Vertex x) { return x == 1 ? Vertex{2} : x == 2 ? Vertex{1} : x; };
          swapped.push_back({flip(pair.first), flip(pair.second), m});
        }
        CHECK(MultiGraph::build(n, swapped) == gen_straight(n));
        continue;
      }
      const TwoSeparation sep = split(gen_straight(n), static_cast<Vertex>(k), static_cast<Vertex>(k + 1));
      CHECK(two_switch(sep, Side::second) == bent);
      if (n <= 12) CHECK(count_trees_det(bent) == fib(2 * static_cast<std::int64_t>(n) - 2));
    }
}

TEST_CASE("Sierpinski generator") {
  CHECK(gen_sierpinski(0).graph == MultiGraph::build(3, {{1, 2}, {2, 3}, {1, 3}}));
  const SierpinskiGraph s1 = gen_sierpinski(1);
  CHECK(s1.graph.vertex_count() == 6);
  CHECK(s1.graph.edge_count() == 9);
  CHECK(s1.graph == MultiGraph::build(6, {{1, 4}, {1, 6}, {4, 6}, {2, 4}, {2, 5}, {4, 5}, {3, 5}, {3, 6}, {5, 6}}));
  CHECK(s1.corners == std::array<Vertex, 3>{1, 2, 3});
  for (std::size_t n = 0; n <= 5; ++n) {
    const MultiGraph g = gen_sierpinski(n).graph;
    std::size_t p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= 3;
    CHECK(g.vertex_count() == 3 * (p + 1) / 2);
    CHECK(g.edge_count() == 3 * p);
    for (Vertex c : {1u, 2u, 3u}) CHECK(g.degree(c) == 2);
    for (Vertex x = 4; x <= g.vertex_count(); ++x) CHECK(g.degree(x) == 4);
  }
  CHECK(gen_sierpinski(2).graph.vertex_count() == 15);
  CHECK(gen_sierpinski(2).graph.edge_count() == 27);
  CHECK_THROWS_AS(gen_sierpinski(9), InvalidArgument);
}

TEST_CASE("straight resistance closed form") {
  CHECK(straight_resistance_closed(1, 6, 7) == q(14, 9));
  CHECK(straight_resistance_closed(1, 3, 4) == q(1));
  CHECK(straight_resistance_closed(2, 2, 7) == q(81, 144));
  CHECK_THROWS_AS(straight_resistance_closed(0, 2, 7), InvalidArgument);
  CHECK_THROWS_AS(straight_resistance_closed(3, 5, 7), InvalidArgument);
  for (std::size_t n = 3; n <= 12; ++n) {
    const MultiGraph g = gen_straight(n);
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t k = 1; j + k <= n; ++k)
        CHECK(straight_resistance_closed(j, k, n) ==
              resistance(g, static_cast<Vertex>(j), static_cast<Vertex>(j + k)));
  }
}

TEST_CASE("straight 2-forest closed form and sum") {
  CHECK(straight_forest_closed(2, 4, 7) == 81);
  CHECK(straight_forest_closed(3, 5, 7) == 80);
  CHECK(straight_forest_closed(1, 7, 7) == 224);
  CHECK(straight_forest_sum(1, 3, 7) == 89);
  CHECK(straight_forest_sum(1, 7, 7) == 224);
  CHECK(enumerate_2forests(gen_straight(7), 1, 7) == 224);
  CHECK_THROWS_AS(straight_forest_closed(3, 3, 7), InvalidArgument);
  CHECK_THROWS_AS(straight_forest_sum(2, 8, 7), InvalidArgument);
  for (std::int64_t n = 3; n <= 14; ++n)
    for (std::int64_t u = 1; u < n; ++u)
      CHECK(straight_forest_sum(u, u + 1, n) == fib(2 * u - 1) * fib(2 * n - 2 * u - 1));
}

TEST_CASE("property: straight resistance, forest and forest-sum formulas agree with determinants") {
  for (std::size_t n = 3; n <= 14; ++n) {
    const MultiGraph g = gen_straight(n);
    const Count trees = straight_trees(n);
    CHECK(count_trees_det(g) == trees);
    for (std::size_t u = 1; u <= n; ++u)
      for (std::size_t v = u + 1; v <= n; ++v) {
        const Count det = count_2forests_det(g, static_cast<Vertex>(u), static_cast<Vertex>(v));
        CHECK(straight_forest_closed(u, v, n) == det);
        CHECK(straight_forest_sum(u, v, n) == det);
        CHECK(straight_resistance_closed(u, v - u, n) == Ratio(det, trees));
      }
  }
}

TEST_CASE("bent 2-forest counts") {
  CHECK(bent_forest(1, 7, 7, 3) == 209);
  CHECK(bent_forest(1, 2, 7, 3) == 89);
  CHECK(bent_forest_deficit(1, 7, 7, 3) == 15);
  CHECK_THROWS_AS(bent_forest_deficit(1, 3, 7, 3), InvalidArgument);
  CHECK_THROWS_AS(bent_forest(1, 8, 7, 3), InvalidArgument);
  CHECK_THROWS_AS(bent_forest(1, 7, 7, 5), InvalidArgument);
}

TEST_CASE("property: bent forest counts, deficit, strict decrease and end pair") {
  for (std::size_t n = 4; n <= 12; ++n)
    for (std::size_t k = 1; k + 3 <= n; ++k) {
      const MultiGraph g = gen_bent(n, k);
      const auto nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
      for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v) {
          const Count det = count_2forests_det(g, static_cast<Vertex>(u), static_cast<Vertex>(v));
          CHECK(bent_forest(u, v, n, k) == det);
          const bool across = u <= k + 1 && v > k + 1;
          if (!across) CHECK(det == straight_forest_closed(u, v, n));
          if (k >= 3 && u <= k && v > k + 1) CHECK(det < straight_forest_closed(u, v, n));
        }
      CHECK(bent_forest(1, n, n, k) ==
            straight_forest_closed(1, n, n) - fib(kk - 2) * fib(kk + 1) * fib(nn - kk - 2) * fib(nn - kk + 1));
      CHECK(bent_end_resistance(n, k) == resistance(g, 1, static_cast<Vertex>(n)));
    }
}

TEST_CASE("bent end resistance") {
  CHECK(bent_end_resistance(7, 3) == q(209, 144));
  CHECK(bent_end_resistance(6, 3) == resistance(gen_bent(6, 3), 1, 6));
  Ratio previous = bent_end_resistance(6, 3);
  for (std::size_t n = 7; n <= 60; ++n) {
    const Ratio r = bent_end_resistance(n, 3);
    CHECK(r > previous);
    previous = r;
  }
  CHECK(previous > q(11));
}

TEST_CASE("Sierpinski closed forms") {
  CHECK(sierpinski_trees(0) == 3);
  CHECK(sierpinski_trees(1) == 54);
  CHECK(sierpinski_trees(2) == count_trees_det(gen_sierpinski(2).graph));
  CHECK(sierpinski_corner_resistance(0) == q(2, 3));
  CHECK(sierpinski_corner_forests(0) == 2);
  CHECK(sierpinski_corner_resistance(1) == q(10, 9));
  CHECK(sierpinski_corner_forests(1) == 60);
  CHECK(sierpinski_corner_resistance(2) == q(50, 27));
  CHECK(sierpinski_corner_resistance(2) == resistance(gen_sierpinski(2).graph, 1, 2));
  for (std::size_t n = 0; n <= 15; ++n)
    CHECK(sierpinski_corner_resistance(n) * Ratio(sierpinski_trees(n)) == Ratio(sierpinski_corner_forests(n)));
  for (std::size_t n = 0; n <= 3; ++n) {
    const MultiGraph g = gen_sierpinski(n).graph;
    CHECK(count_trees_det(g) == sierpinski_trees(n));
    CHECK(count_2forests_det(g, 1, 2) == sierpinski_corner_forests(n));
    CHECK(count_2forests_det(g, 2, 3) == sierpinski_corner_forests(n));
    CHECK(count_2forests_det(g, 1, 3) == sierpinski_corner_forests(n));
  }
  CHECK_THROWS_AS(sierpinski_trees(16), InvalidArgument);
}

TEST_CASE("FamilySpec") {
  CHECK(parse_family("straight") == Family::straight_2tree);
  CHECK(parse_family("bent_2tree") == Family::bent_2tree);
  CHECK(parse_family("sierpinski") == Family::sierpinski);
  CHECK_THROWS_AS(parse_family("spiral"), InvalidArgument);
  CHECK(family_name(Family::bent_2tree) == "bent");
  CHECK(generate({Family::bent_2tree, 7, 3}) == gen_bent(7, 3));
  CHECK(generate({Family::sierpinski, 1, 0}) == gen_sierpinski(1).graph);
  CHECK_THROWS_AS(generate({Family::bent_2tree, 7, 6}), InvalidArgument);
  CHECK_THROWS_AS(generate({Family::straight_2tree, 2, 0}), InvalidArgument);
}
