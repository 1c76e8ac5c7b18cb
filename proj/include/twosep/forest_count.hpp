#pragma once

#include <cstddef>
#include <string>

#include "twosep/exact.hpp"
#include "twosep/graph.hpp"

namespace twosep {

/// What to count: spanning trees T(G), 2-forests separating u from v
/// F(u,v), or 2-forests separating u from the pair {v,w} F(u,{v,w}).
struct Query {
  enum class Kind { trees, two_forest, two_forest_pair };

  Kind kind = Kind::trees;
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;

  static Query trees() { return {}; }
  static Query forests(Vertex u, Vertex v) { return {Kind::two_forest, u, v, 0}; }
  static Query forests_pair(Vertex u, Vertex v, Vertex w) { return {Kind::two_forest_pair, u, v, w}; }

  /// Throws InvalidArgument unless the named vertices are distinct and in range.
  void validate(const MultiGraph& g) const;
  std::string str() const;

  bool operator==(const Query&) const = default;
};

/// det L(j) for j = 1. Zero for a disconnected graph, 1 for a single vertex.
Count count_trees_det(const MultiGraph& g);

/// det L(u,v).
Count count_2forests_det(const MultiGraph& g, Vertex u, Vertex v);

/// F(u,{v,w}) = (F(v,u) + F(w,u) - F(v,w)) / 2. An odd numerator raises
/// ConsistencyError.
Count count_2forests_pair(const MultiGraph& g, Vertex u, Vertex v, Vertex w);

Count count_det(const MultiGraph& g, const Query& q);

struct EnumerationLimits {
  /// Upper bound on edge instances (parallel edges counted separately).
  std::size_t max_edge_instances = 24;
};

// Brute-force oracle: walks edge subsets of the right size with union-find
// pruning. Parallel edges are distinct instances. Throws InvalidArgument when
// the graph has more edge instances than the limit.
Count enumerate_trees(const MultiGraph& g, EnumerationLimits limits = {});
Count enumerate_2forests(const MultiGraph& g, Vertex u, Vertex v, EnumerationLimits limits = {});
Count enumerate_2forests_pair(const MultiGraph& g, Vertex u, Vertex v, Vertex w, EnumerationLimits limits = {});

Count enumerate(const MultiGraph& g, const Query& q, EnumerationLimits limits = {});

}  // namespace twosep
