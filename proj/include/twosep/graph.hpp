#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twosep/exact.hpp"

namespace twosep {

/// Vertices are labelled 1..n. 0 never names a vertex.
using Vertex = std::uint32_t;
using Multiplicity = std::uint64_t;

/// Unordered vertex pair, stored with first < second.
using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair make_pair_sorted(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

struct EdgeSpec {
  Vertex u = 0;
  Vertex v = 0;
  Multiplicity mult = 1;
};

/// Loopless undirected multigraph on vertices 1..n. Parallel edges are kept
/// as a multiplicity per vertex pair. Immutable once built.
class MultiGraph {
 public:
  /// The single-vertex graph.
  MultiGraph() = default;

  /// Duplicate pairs accumulate. Throws InvalidArgument on loops,
  /// out-of-range labels, zero multiplicity or n == 0.
  static MultiGraph build(std::size_t n, std::span<const EdgeSpec> edges);
  static MultiGraph build(std::size_t n, std::initializer_list<EdgeSpec> edges) {
    return build(n, std::span<const EdgeSpec>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t pair_count() const { return edges_.size(); }
  /// Sum of all multiplicities.
  Multiplicity edge_count() const;

  Multiplicity multiplicity(Vertex u, Vertex v) const;
  Multiplicity degree(Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

  const std::map<VertexPair, Multiplicity>& edges() const { return edges_; }

  /// Distinct neighbours of each vertex, index 0 unused.
  std::vector<std::vector<Vertex>> adjacency() const;

  /// Degree multiset, sorted ascending.
  std::vector<Multiplicity> degree_sequence() const;

  /// "n|u-v*m,..." in (u,v) order. Equal strings iff equal labelled graphs.
  std::string canonical_key() const;

  bool operator==(const MultiGraph& other) const = default;

 private:
  std::size_t n_ = 1;
  std::map<VertexPair, Multiplicity> edges_;
};

/// Relabelling from one vertex set to another. Index 0 of the backing table
/// is unused; an image of 0 means "no image" (the vertex was deleted).
class VertexMap {
 public:
  static constexpr Vertex kAbsent = 0;

  VertexMap() = default;
  /// image[x] is the image of x; image[0] is ignored.
  explicit VertexMap(std::vector<Vertex> image);

  static VertexMap identity(std::size_t n);

  std::size_t domain_size() const { return image_.empty() ? 0 : image_.size() - 1; }
  /// Image of x, kAbsent if x has none. Throws on x outside the domain.
  Vertex operator()(Vertex x) const;
  bool contains(Vertex x) const { return (*this)(x) != kAbsent; }

  /// x -> after(this(x)).
  VertexMap then(const VertexMap& after) const;
  /// Inverse of an injective map, over a codomain of size `codomain`.
  VertexMap inverse(std::size_t codomain) const;

  bool operator==(const VertexMap& other) const = default;

 private:
  std::vector<Vertex> image_{kAbsent};
};

/// Combinatorial Laplacian: degree on the diagonal, minus multiplicity off it.
IntMatrix laplacian(const MultiGraph& g);

/// G/ij. The merged vertex takes the smaller label's position; survivors keep
/// their relative order. Edges {i,j} vanish, parallel edges accumulate.
std::pair<MultiGraph, VertexMap> identify(const MultiGraph& g, Vertex i, Vertex j);

/// Removes u and its edges; requires n >= 2.
std::pair<MultiGraph, VertexMap> delete_vertex(const MultiGraph& g, Vertex u);

/// Subgraph on `vertices` (compactly relabelled in increasing order) carrying
/// exactly `edges` (parent labels). Returns the graph and its local->parent map.
std::pair<MultiGraph, VertexMap> extract_piece(const MultiGraph& parent, const std::set<Vertex>& vertices,
                                               const std::map<VertexPair, Multiplicity>& edges);

bool connected(const MultiGraph& g);
/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const MultiGraph& g);
/// Components of g with the vertices in `removed` deleted (labels unchanged).
std::vector<std::vector<Vertex>> components_without(const MultiGraph& g, const std::set<Vertex>& removed);

enum class Side : std::uint8_t { first = 0, second = 1 };

/// One graph of a separation, with maps to and from the parent's labels.
struct SeparationPiece {
  MultiGraph graph;
  VertexMap to_parent;
  VertexMap from_parent;

  bool contains(Vertex parent_label) const { return from_parent.contains(parent_label); }
  /// Local label of a parent vertex; throws if absent.
  Vertex local(Vertex parent_label) const;
};

/// G = G1 u G2 with V(G1) n V(G2) = {i,j} and disjoint edge sets.
struct TwoSeparation {
  Vertex i = 0;
  Vertex j = 0;
  std::size_t parent_vertex_count = 0;
  std::array<SeparationPiece, 2> sides;
  /// Parent edge -> multiplicity placed on each side.
  std::map<VertexPair, std::array<Multiplicity, 2>> provenance;

  const SeparationPiece& first() const { return sides[0]; }
  const SeparationPiece& second() const { return sides[1]; }
};

/// Decides which side each parent edge goes to (all instances of a pair go
/// to the same side).
using SideAssignment = std::function<Side(Vertex u, Vertex v)>;

/// Non-separator vertices in `first_side` go to side 1, the rest to side 2.
/// Edges between i and j go to `ij_edges`.
SideAssignment assign_by_vertices(Vertex i, Vertex j, std::set<Vertex> first_side, Side ij_edges = Side::first);

/// Splits g along {i,j} with an explicit assignment. Throws InvalidArgument
/// when the assignment is not a 2-separation: a non-separator vertex touches
/// both sides, a side has no vertex outside {i,j}, or a side is disconnected.
TwoSeparation split(const MultiGraph& g, Vertex i, Vertex j, const SideAssignment& assignment);

/// Natural split: the component of g - {i,j} holding the smallest vertex goes
/// to side 1 with the {i,j} edges (unless overridden), every other component
/// to side 2.
TwoSeparation split(const MultiGraph& g, Vertex i, Vertex j, Side ij_edges = Side::first);

/// Glues the two sides back at {i,j}; reproduces the original graph.
MultiGraph reassemble(const TwoSeparation& sep);

/// 2-switch: glue the copy of i in one side to the copy of j in the other and
/// vice versa. `relabelled` picks the side whose i/j copies are swapped; the
/// other side keeps its parent labels.
MultiGraph two_switch(const TwoSeparation& sep, Side relabelled = Side::second);

/// G = G1 u G2 with V(G1) n V(G2) = {w}.
struct CutSeparation {
  Vertex w = 0;
  std::array<SeparationPiece, 2> sides;
};

/// Splits at a cut vertex: the component of g - w with the smallest vertex
/// (plus w) is side 1, everything else (plus w) is side 2.
CutSeparation split_at_cut_vertex(const MultiGraph& g, Vertex w);

}  // namespace twosep
