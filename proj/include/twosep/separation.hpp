#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twosep/exact.hpp"
#include "twosep/forest_count.hpp"
#include "twosep/graph.hpp"

namespace twosep {

/// Articulation points, ascending. Works per component, so a disconnected
/// graph reports the cut vertices of each component.
std::vector<Vertex> find_cut_vertices(const MultiGraph& g);

/// Every pair {i,j} (i < j) whose deletion disconnects g, in lexicographic
/// order. Meaningful for 2-connected g; O(n^2 (n + m)).
std::vector<VertexPair> find_2separators(const MultiGraph& g);

/// Counts a query on a sub-graph. The identity routines below are written
/// against this so that the same code serves both the one-shot checks (sides
/// counted by determinant) and the recursive solver.
using SubCounter = std::function<Count(const MultiGraph&, const Query&)>;

/// Plain determinant counter.
SubCounter determinant_counter();

/// T(G) = T(G1) F_G2(i,j) + T(G2) F_G1(i,j).
Count trees_via_separation(const TwoSeparation& sep, const SubCounter& counter = determinant_counter());

/// F_G(u,v) for u, v on one side (a separator vertex belongs to both):
/// F_G1(u,v) F_G2(i,j) + F_{G1/ij}(u,v) T(G2), or the mirror image.
/// Labels are the parent's.
Count forests_same_side(const TwoSeparation& sep, Vertex u, Vertex v,
                        const SubCounter& counter = determinant_counter());

/// Both closed forms for a pair split by the separator.
struct CrossForms {
  /// Five-term form using the F(u,{i,j}) pair counts.
  Count with_pair_counts;
  /// Nine half-term form using only two-vertex counts.
  Count with_half_terms;
};

/// u must lie on one side and v on the other, neither in {i,j}.
CrossForms forests_cross_forms(const TwoSeparation& sep, Vertex u, Vertex v,
                               const SubCounter& counter = determinant_counter());

/// The common value of both cross forms; ConsistencyError if they differ.
Count forests_cross(const TwoSeparation& sep, Vertex u, Vertex v, const SubCounter& counter = determinant_counter());

/// F_G(u,v) through the separation, routed to the same-side or cross formula.
Count forests_via_separation(const TwoSeparation& sep, Vertex u, Vertex v,
                             const SubCounter& counter = determinant_counter());

/// T(G) = T(G1) T(G2).
Count cut_vertex_trees(const CutSeparation& cut, const SubCounter& counter = determinant_counter());
Count cut_vertex_trees(const MultiGraph& g, Vertex w);

/// F_G(u,v) = F_G1(u,v) T(G2) on one side, F_G1(u,w) T(G2) + T(G1) F_G2(w,v)
/// across.
Count cut_vertex_forests(const CutSeparation& cut, Vertex u, Vertex v,
                         const SubCounter& counter = determinant_counter());
Count cut_vertex_forests(const MultiGraph& g, Vertex w, Vertex u, Vertex v);

enum class SeparatorOrder {
  /// Minimise the larger side; ties go to the lexicographically first pair.
  balanced,
  /// Lexicographically first admissible separator.
  lexicographic,
};

struct SolveOptions {
  /// Graphs with at most this many vertices go straight to the determinant,
  /// and a separator is only used when both sides are larger than this.
  std::size_t base_threshold = 8;
  SeparatorOrder order = SeparatorOrder::balanced;
  bool memoize = true;
  bool record_trace = true;
};

/// One step of a reduction.
struct TraceNode {
  enum class Rule { determinant, cut_vertex, two_separation, pair_identity, memo, trivial };

  Rule rule = Rule::determinant;
  std::size_t vertices = 0;
  Multiplicity edges = 0;
  Query query;
  std::optional<VertexPair> separator;
  std::optional<Vertex> cut_vertex;
  std::pair<std::size_t, std::size_t> side_sizes{0, 0};
  Count value;
  std::vector<TraceNode> children;
};

std::string rule_name(TraceNode::Rule rule);

class ReductionTrace {
 public:
  ReductionTrace() = default;
  explicit ReductionTrace(TraceNode root) : root_(std::move(root)) {}

  const TraceNode& root() const { return root_; }
  bool empty() const { return root_.vertices == 0; }

  /// Indented tree, one step per line.
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

  std::size_t node_count() const;
  std::size_t depth() const;

 private:
  TraceNode root_;
};

struct SolveStats {
  std::size_t calls = 0;
  std::size_t determinant_leaves = 0;
  std::size_t memo_hits = 0;
  std::size_t cut_vertex_steps = 0;
  std::size_t separation_steps = 0;
};

struct SolveResult {
  Count value;
  ReductionTrace trace;
  SolveStats stats;
};

/// Recursive divide-and-conquer count. Cut vertices are split first, then
/// 2-separators, otherwise the determinant. Pair-set queries go through
/// F(u,{v,w}) = (F(v,u) + F(w,u) - F(v,w)) / 2. Rejects disconnected input.
SolveResult solve(const MultiGraph& g, const Query& query, const SolveOptions& options = {});

/// Reusable solver: keeps its memo table across calls.
class ReductionEngine {
 public:
  explicit ReductionEngine(SolveOptions options = {});
  ~ReductionEngine();
  ReductionEngine(ReductionEngine&&) noexcept;
  ReductionEngine& operator=(ReductionEngine&&) noexcept;

  SolveResult solve(const MultiGraph& g, const Query& query);
  const SolveOptions& options() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace twosep
