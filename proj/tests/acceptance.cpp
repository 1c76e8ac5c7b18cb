// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "twosep/cli.hpp"
#include "twosep/corpus.hpp"
#include "twosep/families.hpp"
#include "twosep/forest_count.hpp"
#include "twosep/resistance.hpp"
#include "twosep/separation.hpp"

using namespace twosep;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts mismatches and keeps the first few for the report.
struct Check {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks << " checks";
    if (failures) s << ", " << failures << " failed (first: " << first << ")";
    return s.str();
  }
};

std::string g_name(const MultiGraph& g) { return g.canonical_key().substr(0, 60); }

std::vector<VertexPair> all_pairs(const MultiGraph& g) {
  std::vector<VertexPair> out;
  for (Vertex u = 1; u <= g.vertex_count(); ++u)
    for (Vertex v = u + 1; v <= g.vertex_count(); ++v) out.emplace_back(u, v);
  return out;
}

std::vector<MultiGraph> random_200() { return random_corpus(200, 20240611); }

Outcome oracle_equivalence() {
  auto graphs = simple_corpus(6);
  const std::size_t simple = graphs.size();
  const auto doubled = multiplicity2_corpus(5);
  graphs.insert(graphs.end(), doubled.begin(), doubled.end());
  const auto random = random_200();
  graphs.insert(graphs.end(), random.begin(), random.end());
  Check check;
  for (const MultiGraph& g : graphs) {
    check(enumerate_trees(g) == count_trees_det(g), "T " + g_name(g));
    for (const auto& [u, v] : all_pairs(g))
      check(enumerate_2forests(g, u, v) == count_2forests_det(g, u, v), "F " + g_name(g));
  }
  std::ostringstream d;
  d << graphs.size() << " graphs (" << simple << " simple, " << doubled.size() << " multiplicity-2, "
    << random.size() << " random), " << check.summary();
  return {check.ok(), d.str()};
}

Outcome h7_labels() {
  const std::map<VertexPair, long> left{{{1, 2}, 89}, {{1, 3}, 89}, {{2, 3}, 68}, {{2, 4}, 81},
                                        {{3, 4}, 65}, {{3, 5}, 80}, {{4, 5}, 65}, {{4, 6}, 81},
                                        {{5, 6}, 68}, {{5, 7}, 89}, {{6, 7}, 89}};
  const std::map<VertexPair, long> right{{{1, 2}, 89}, {{1, 4}, 89}, {{2, 3}, 81}, {{2, 4}, 68},
                                         {{3, 4}, 65}, {{3, 5}, 80}, {{4, 5}, 65}, {{4, 6}, 81},
                                         {{5, 6}, 68}, {{5, 7}, 89}, {{6, 7}, 89}};
  Check check;
  const MultiGraph h7 = gen_straight(7);
  std::map<VertexPair, long> computed;
  for (const auto& [pair, m] : h7.edges())
    computed[pair] = count_2forests_det(h7, pair.first, pair.second).get_si();
  check(computed == left, "left labels");

  const TwoSeparation sep = split(h7, 3, 4);
  const MultiGraph switched = two_switch(sep, Side::first);
  std::map<VertexPair, long> switched_labels;
  for (const auto& [pair, m] : switched.edges())
    switched_labels[pair] = count_2forests_det(switched, pair.first, pair.second).get_si();
  check(switched_labels == right, "right labels");
  check(isomorphism_key(switched) == isomorphism_key(gen_bent(7, 3)), "right graph is the bent 2-tree");

  // same-side counts survive the switch, either side moved
  for (Side s : {Side::first, Side::second}) {
    const MultiGraph g = two_switch(sep, s);
    check(count_trees_det(g) == count_trees_det(h7), "T after switch");
    const SeparationPiece& moved = s == Side::first ? sep.first() : sep.second();
    for (const auto& [u, v] : all_pairs(h7)) {
      const bool same = (sep.first().contains(u) && sep.first().contains(v)) ||
                        (sep.second().contains(u) && sep.second().contains(v));
      if (!same) continue;
      auto image = [&](Vertex x) {
        if (!(moved.contains(u) && moved.contains(v))) return x;
        return x == 3 ? Vertex{4} : (x == 4 ? Vertex{3} : x);
      };
      check(count_2forests_det(g, image(u), image(v)) == count_2forests_det(h7, u, v), "same-side after switch");
    }
  }
  return {check.ok(), "11 labels on each graph, " + check.summary()};
}

Outcome reduction_equivalence() {
  std::vector<std::pair<std::string, MultiGraph>> graphs;
  for (std::size_t n = 4; n <= 16; ++n) graphs.emplace_back("H_" + std::to_string(n), gen_straight(n));
  for (std::size_t n = 6; n <= 12; ++n)
    for (std::size_t k = 3; k + 3 <= n; ++k)
      graphs.emplace_back("G_" + std::to_string(n) + "," + std::to_string(k), gen_bent(n, k));
  for (std::size_t n = 0; n <= 2; ++n) graphs.emplace_back("S_" + std::to_string(n), gen_sierpinski(n).graph);
  for (const auto& g : random_200()) graphs.emplace_back("random", g);
  std::mt19937_64 rng(808);
  for (int t = 0; t < 40; ++t) graphs.emplace_back("glued", random_glued_graph(rng, 4 + t % 5, 5 + t % 4));

  const std::vector<SolveOptions> strategies{
      {.base_threshold = 8, .order = SeparatorOrder::balanced, .record_trace = false},
      {.base_threshold = 3, .order = SeparatorOrder::lexicographic, .record_trace = false}};
  Check check;
  std::size_t separations = 0;
  for (const auto& [name, g] : graphs) {
    const Count trees = count_trees_det(g);
    std::map<VertexPair, Count> forests;
    for (const auto& [u, v] : all_pairs(g)) forests[{u, v}] = count_2forests_det(g, u, v);

    for (const auto& s : strategies) {
      ReductionEngine engine(s);
      check(engine.solve(g, Query::trees()).value == trees, name + " solve T");
      for (const auto& [pair, f] : forests)
        check(engine.solve(g, Query::forests(pair.first, pair.second)).value == f, name + " solve F");
    }
    if (!find_cut_vertices(g).empty()) continue;
    for (const auto& [i, j] : find_2separators(g))
      for (Side ij : {Side::first, Side::second}) {
        const TwoSeparation sep = split(g, i, j, ij);
        ++separations;
        check(trees_via_separation(sep) == trees, name + " trees");
        for (const auto& [pair, f] : forests) {
          const auto [u, v] = pair;
          const bool same = (sep.first().contains(u) && sep.first().contains(v)) ||
                            (sep.second().contains(u) && sep.second().contains(v));
          if (same) {
            check(forests_same_side(sep, u, v) == f, name + " same-side forests");
          } else {
            const CrossForms forms = forests_cross_forms(sep, u, v);
            check(forms.with_pair_counts == f, name + " cross forests (pair counts)");
            check(forms.with_half_terms == f, name + " cross forests (half terms)");
          }
        }
      }
  }
  std::ostringstream d;
  d << graphs.size() << " graphs, " << separations << " separations x 2 edge assignments, 2 strategies, "
    << check.summary();
  return {check.ok(), d.str()};
}

Outcome identification_identity() {
  const auto graphs = random_corpus(100, 4242);
  Check check;
  for (const MultiGraph& g : graphs) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = i + 1; j <= n; ++j) {
        const auto [merged, map] = identify(g, i, j);
        for (Vertex u = 1; u <= n; ++u)
          for (Vertex v = u; v <= n; ++v) {
            const Vertex a = map(u), b = map(v);
            const Ratio direct = a == b ? Ratio(BigInt(0)) : resistance(merged, a, b);
            check(resistance_identified(g, i, j, u, v) == direct, g_name(g));
          }
      }
  }
  return {check.ok(), "100 random graphs, all (u,v,i,j), " + check.summary()};
}

Outcome sierpinski() {
  Check check;
  std::ostringstream d;
  for (std::size_t n = 0; n <= 3; ++n) {
    const MultiGraph g = gen_sierpinski(n).graph;
    const Count trees = count_trees_det(g);
    const Count forests = count_2forests_det(g, 1, 2);
    const Ratio r = Ratio(forests, trees);
    check(r == sierpinski_corner_resistance(n), "r_" + std::to_string(n));
    check(trees == sierpinski_trees(n), "T_" + std::to_string(n));
    check(forests == sierpinski_corner_forests(n), "F_" + std::to_string(n));
    check(r * Ratio(trees) == Ratio(forests), "r T = F at " + std::to_string(n));
    check(solve(g, Query::trees(), {.base_threshold = 4, .record_trace = false}).value == trees, "solve T");
    d << "S_" << n << " |V|=" << g.vertex_count() << " r=" << r.str() << "; ";
  }
  return {check.ok(), d.str() + check.summary()};
}

Outcome linear_2trees(std::string& extended_note) {
  Check check;
  for (std::size_t n = 4; n <= 14; ++n) {
    const MultiGraph g = gen_straight(n);
    const Count trees = count_trees_det(g);
    check(trees == fib(2 * static_cast<std::int64_t>(n) - 2), "T(H_n)");
    for (const auto& [u, v] : all_pairs(g)) {
      const Count det = count_2forests_det(g, u, v);
      const Count closed = straight_forest_closed(u, v, n);
      const Count summed = straight_forest_sum(u, v, n);
      const Ratio r = straight_resistance_closed(u, v - u, n);
      check(closed == det && summed == det, "straight forests at n=" + std::to_string(n));
      check(r == Ratio(det, trees) && r * Ratio(trees) == Ratio(closed), "straight resistance at n=" + std::to_string(n));
    }
  }

  auto bent_checks = [](std::size_t k_min, std::size_t k_max_offset, Check& c) {
    for (std::size_t n = 4; n <= 12; ++n)
      for (std::size_t k = k_min; k + k_max_offset <= n && k <= n - 3; ++k) {
        const MultiGraph g = gen_bent(n, k);
        const auto nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
        const Count trees = count_trees_det(g);
        const std::string at = " at n=" + std::to_string(n) + ",k=" + std::to_string(k);
        for (const auto& [u, v] : all_pairs(g)) {
          const Count det = count_2forests_det(g, u, v);
          const Count straight = straight_forest_closed(u, v, n);
          const bool across = u <= k + 1 && v > k + 1;
          if (across)
            c(straight - bent_forest_deficit(u, v, n, k) == det, "bent deficit" + at);
          else
            c(straight == det, "bent same-side" + at);
          if (u <= k && v > k + 1) c(det < straight, "bent strict decrease" + at);
        }
        c(count_2forests_det(g, 1, static_cast<Vertex>(n)) ==
              straight_forest_closed(1, n, n) - fib(kk - 2) * fib(kk + 1) * fib(nn - kk - 2) * fib(nn - kk + 1),
          "bent end pair" + at);
        c(bent_end_resistance(n, k) == Ratio(count_2forests_det(g, 1, static_cast<Vertex>(n)), trees), "bent end resistance" + at);
      }
  };
  bent_checks(3, 3, check);

  Ratio previous = bent_end_resistance(6, 3);
  Ratio previous_straight = straight_resistance_closed(1, 5, 6);
  for (std::size_t n = 7; n <= 60; ++n) {
    const Ratio r = bent_end_resistance(n, 3);
    const Ratio rs = straight_resistance_closed(1, n - 1, n);
    check(r > previous, "bent growth at n=" + std::to_string(n));
    check(rs > previous_straight, "straight growth at n=" + std::to_string(n));
    previous = r;
    previous_straight = rs;
  }

  Check extended;
  bent_checks(1, 3, extended);
  extended_note = "bends k=1,2 (F_{-1}=1 convention), outside the stated range: " + extended.summary();
  return {check.ok(), "n<=14 straight, n<=12 bent with 3<=k<=n-3, growth to n=60, " + check.summary()};
}

Outcome pseudoinverse() {
  auto graphs = simple_corpus(6);
  const auto doubled = multiplicity2_corpus(5);
  graphs.insert(graphs.end(), doubled.begin(), doubled.end());
  const auto random = random_200();
  graphs.insert(graphs.end(), random.begin(), random.end());
  Check check;
  double worst = 0.0;
  for (const MultiGraph& g : graphs)
    for (const auto& [u, v] : all_pairs(g)) {
      const Ratio exact = resistance(g, u, v);
      const double approx = resistance_pinv(g, u, v);
      const double rel = std::abs(approx - exact.to_double()) / exact.to_double();
      worst = std::max(worst, rel);
      check(rel <= 1e-9, g_name(g));
    }
  std::ostringstream d;
  d << graphs.size() << " graphs, max relative error " << std::scientific << std::setprecision(2) << worst
    << " (limit 1e-9), " << check.summary();
  return {check.ok(), d.str()};
}

Outcome benchmark() {
  Check check;
  const MultiGraph h200 = gen_straight(200);
  check(solve(h200, Query::trees(), {.record_trace = false}).value == count_trees_det(h200), "T");
  check(solve(h200, Query::forests(1, 200), {.record_trace = false}).value == count_2forests_det(h200, 1, 200),
        "F(1,200)");
  check(solve(h200, Query::forests(57, 143), {.record_trace = false}).value == count_2forests_det(h200, 57, 143),
        "F(57,143)");
  check(count_trees_det(h200) == fib(398), "T = F_398");

  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"bench", "--family", "straight", "--n-range", "200..200", "--format", "json"}, in, out, err);
  check(code == 0, "bench exit code");
  std::string timings;
  if (code == 0) {
    const auto rows = nlohmann::json::parse(out.str())["result"]["rows"];
    check(rows.size() == 1 && rows[0]["equal"] == true, "bench equality");
    check(rows[0].contains("det_ms") && rows[0].contains("reduce_ms"), "bench timings");
    std::ostringstream t;
    t << std::fixed << std::setprecision(1) << "det " << rows[0]["det_ms"].get<double>() << " ms, reduce "
      << rows[0]["reduce_ms"].get<double>() << " ms";
    timings = t.str();
  }
  return {check.ok(), "H_200 " + timings + ", " + check.summary()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  std::string extended_note;
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", 300, oracle_equivalence},
      {2, "H_7 2-forest edge labels", 30, h7_labels},
      {3, "reduction equals determinant", 600, reduction_equivalence},
      {4, "identification resistance identity", 600, identification_identity},
      {5, "Sierpinski corner resistance", 300, sierpinski},
      {6, "linear 2-tree closed forms", 600, [&] { return linear_2trees(extended_note); }},
      {7, "pseudoinverse cross-check", 600, pseudoinverse},
      {8, "benchmark sanity H_200", 60, benchmark},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " | " << o.detail << " | "
              << std::fixed << std::setprecision(2) << seconds << " s (limit " << std::setprecision(0)
              << c.limit_seconds << " s)" << (in_time ? "" : " OVER TIME") << std::endl;
  }
  if (!extended_note.empty()) std::cout << "note: " << extended_note << std::endl;
  std::cout << (failures == 0 ? "all 8 criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
