#include "twosep/graph.hpp"

#include <algorithm>
#include <numeric>

#include "twosep/errors.hpp"

namespace twosep {

namespace {

std::string label(Vertex v) { return std::to_string(v); }

void require_vertex(const MultiGraph& g, Vertex v, const char* op) {
  if (!g.has_vertex(v))
    throw InvalidArgument(std::string(op) + ": vertex " + label(v) + " not in 1.." +
                          std::to_string(g.vertex_count()));
}

// Marks every vertex reachable from `start` while skipping `removed`.
void flood(const std::vector<std::vector<Vertex>>& adj, Vertex start, const std::vector<bool>& removed,
           std::vector<int>& comp, int id) {
  std::vector<Vertex> stack{start};
  comp[start] = id;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x]) {
      if (removed[y] || comp[y] >= 0) continue;
      comp[y] = id;
      stack.push_back(y);
    }
  }
}

}  // namespace

MultiGraph MultiGraph::build(std::size_t n, std::span<const EdgeSpec> edges) {
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
  MultiGraph g;
  g.n_ = n;
  for (const EdgeSpec& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw InvalidArgument("edge {" + label(e.u) + "," + label(e.v) + "} has a label outside 1.." +
                            std::to_string(n));
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + label(e.u) + " is not allowed");
    if (e.mult == 0) throw InvalidArgument("edge {" + label(e.u) + "," + label(e.v) + "} has multiplicity 0");
    g.edges_[make_pair_sorted(e.u, e.v)] += e.mult;
  }
  return g;
}

Multiplicity MultiGraph::edge_count() const {
  Multiplicity total = 0;
  for (const auto& [pair, m] : edges_) total += m;
  return total;
}

Multiplicity MultiGraph::multiplicity(Vertex u, Vertex v) const {
  if (u == v) return 0;
  auto it = edges_.find(make_pair_sorted(u, v));
  return it == edges_.end() ? 0 : it->second;
}

Multiplicity MultiGraph::degree(Vertex v) const {
  Multiplicity d = 0;
  for (const auto& [pair, m] : edges_)
    if (pair.first == v || pair.second == v) d += m;
  return d;
}

std::vector<std::vector<Vertex>> MultiGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_ + 1);
  for (const auto& [pair, m] : edges_) {
    adj[pair.first].push_back(pair.second);
    adj[pair.second].push_back(pair.first);
  }
  return adj;
}

std::vector<Multiplicity> MultiGraph::degree_sequence() const {
  std::vector<Multiplicity> deg(n_, 0);
  for (const auto& [pair, m] : edges_) {
    deg[pair.first - 1] += m;
    deg[pair.second - 1] += m;
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::string MultiGraph::canonical_key() const {
  std::string key = std::to_string(n_);
  key.push_back('|');
  bool first = true;
  for (const auto& [pair, m] : edges_) {
    if (!first) key.push_back(',');
    first = false;
    key += std::to_string(pair.first);
    key.push_back('-');
    key += std::to_string(pair.second);
    if (m != 1) {
      key.push_back('*');
      key += std::to_string(m);
    }
  }
  return key;
}

VertexMap::VertexMap(std::vector<Vertex> image) : image_(std::move(image)) {
  if (image_.empty()) image_.push_back(kAbsent);
}

VertexMap VertexMap::identity(std::size_t n) {
  std::vector<Vertex> image(n + 1);
  std::iota(image.begin(), image.end(), Vertex{0});
  return VertexMap(std::move(image));
}

Vertex VertexMap::operator()(Vertex x) const {
  if (x < 1 || x >= image_.size()) throw InvalidArgument("vertex map: " + label(x) + " outside the domain");
  return image_[x];
}

VertexMap VertexMap::then(const VertexMap& after) const {
  std::vector<Vertex> image(image_.size(), kAbsent);
  for (std::size_t x = 1; x < image_.size(); ++x)
    if (image_[x] != kAbsent) image[x] = after(image_[x]);
  return VertexMap(std::move(image));
}

VertexMap VertexMap::inverse(std::size_t codomain) const {
  std::vector<Vertex> image(codomain + 1, kAbsent);
  for (std::size_t x = 1; x < image_.size(); ++x) {
    const Vertex y = image_[x];
    if (y == kAbsent) continue;
    if (y > codomain) throw InvalidArgument("vertex map: image " + label(y) + " outside the codomain");
    if (image[y] != kAbsent) throw InvalidArgument("vertex map: not injective at " + label(y));
    image[y] = static_cast<Vertex>(x);
  }
  return VertexMap(std::move(image));
}

IntMatrix laplacian(const MultiGraph& g) {
  IntMatrix lap(g.vertex_count());
  for (const auto& [pair, m] : g.edges()) {
    const std::size_t a = pair.first - 1;
    const std::size_t b = pair.second - 1;
    const BigInt w = static_cast<unsigned long>(m);
    lap.at(a, a) += w;
    lap.at(b, b) += w;
    lap.at(a, b) -= w;
    lap.at(b, a) -= w;
  }
  return lap;
}

std::pair<MultiGraph, VertexMap> identify(const MultiGraph& g, Vertex i, Vertex j) {
  require_vertex(g, i, "identify");
  require_vertex(g, j, "identify");
  if (i == j) throw InvalidArgument("identify: vertices must differ");
  const Vertex keep = std::min(i, j);
  const Vertex drop = std::max(i, j);

  std::vector<Vertex> image(g.vertex_count() + 1, VertexMap::kAbsent);
  for (Vertex x = 1; x <= g.vertex_count(); ++x) image[x] = x < drop ? x : x - 1;
  image[drop] = keep;
  VertexMap map(std::move(image));

  std::vector<EdgeSpec> edges;
  for (const auto& [pair, m] : g.edges()) {
    const Vertex a = map(pair.first);
    const Vertex b = map(pair.second);
    if (a == b) continue;
    edges.push_back({a, b, m});
  }
  return {MultiGraph::build(g.vertex_count() - 1, edges), std::move(map)};
}

std::pair<MultiGraph, VertexMap> delete_vertex(const MultiGraph& g, Vertex u) {
  require_vertex(g, u, "delete_vertex");
  if (g.vertex_count() < 2) throw InvalidArgument("delete_vertex: cannot delete the only vertex");
  std::vector<Vertex> image(g.vertex_count() + 1, VertexMap::kAbsent);
  for (Vertex x = 1; x <= g.vertex_count(); ++x)
    if (x != u) image[x] = x < u ? x : x - 1;
  VertexMap map(std::move(image));

  std::vector<EdgeSpec> edges;
  for (const auto& [pair, m] : g.edges())
    if (pair.first != u && pair.second != u) edges.push_back({map(pair.first), map(pair.second), m});
  return {MultiGraph::build(g.vertex_count() - 1, edges), std::move(map)};
}

std::pair<MultiGraph, VertexMap> extract_piece(const MultiGraph& parent, const std::set<Vertex>& vertices,
                                               const std::map<VertexPair, Multiplicity>& edges) {
  if (vertices.empty()) throw InvalidArgument("extract_piece: empty vertex set");
  std::vector<Vertex> to_parent{VertexMap::kAbsent};
  std::vector<Vertex> from_parent(parent.vertex_count() + 1, VertexMap::kAbsent);
  for (Vertex v : vertices) {
    require_vertex(parent, v, "extract_piece");
    from_parent[v] = static_cast<Vertex>(to_parent.size());
    to_parent.push_back(v);
  }
  std::vector<EdgeSpec> local;
  local.reserve(edges.size());
  for (const auto& [pair, m] : edges) {
    if (m == 0) continue;
    const Vertex a = from_parent[pair.first];
    const Vertex b = from_parent[pair.second];
    if (a == VertexMap::kAbsent || b == VertexMap::kAbsent)
      throw InvalidArgument("extract_piece: edge leaves the vertex set");
    local.push_back({a, b, m});
  }
  return {MultiGraph::build(vertices.size(), local), VertexMap(std::move(to_parent))};
}

std::vector<std::vector<Vertex>> components_without(const MultiGraph& g, const std::set<Vertex>& removed) {
  const std::size_t n = g.vertex_count();
  const auto adj = g.adjacency();
  std::vector<bool> gone(n + 1, false);
  for (Vertex r : removed)
    if (g.has_vertex(r)) gone[r] = true;
  std::vector<int> comp(n + 1, -1);
  int count = 0;
  for (Vertex v = 1; v <= n; ++v)
    if (!gone[v] && comp[v] < 0) flood(adj, v, gone, comp, count++);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(count));
  for (Vertex v = 1; v <= n; ++v)
    if (!gone[v]) out[static_cast<std::size_t>(comp[v])].push_back(v);
  return out;
}

std::vector<std::vector<Vertex>> components(const MultiGraph& g) { return components_without(g, {}); }

bool connected(const MultiGraph& g) { return components(g).size() == 1; }

Vertex SeparationPiece::local(Vertex parent_label) const {
  const Vertex v = from_parent(parent_label);
  if (v == VertexMap::kAbsent)
    throw InvalidArgument("vertex " + label(parent_label) + " is not on this side of the separation");
  return v;
}

SideAssignment assign_by_vertices(Vertex i, Vertex j, std::set<Vertex> first_side, Side ij_edges) {
  return [ij = make_pair_sorted(i, j), first = std::move(first_side), ij_edges](Vertex u, Vertex v) {
    if (make_pair_sorted(u, v) == ij) return ij_edges;
    return first.contains(u) || first.contains(v) ? Side::first : Side::second;
  };
}

namespace {

SeparationPiece make_piece(const MultiGraph& g, const std::set<Vertex>& vertices,
                           const std::map<VertexPair, Multiplicity>& edges) {
  auto [graph, to_parent] = extract_piece(g, vertices, edges);
  SeparationPiece piece{std::move(graph), std::move(to_parent), {}};
  piece.from_parent = piece.to_parent.inverse(g.vertex_count());
  return piece;
}

}  // namespace

TwoSeparation split(const MultiGraph& g, Vertex i, Vertex j, const SideAssignment& assignment) {
  require_vertex(g, i, "split");
  require_vertex(g, j, "split");
  if (i == j) throw InvalidArgument("split: separator vertices must differ");

  std::array<std::map<VertexPair, Multiplicity>, 2> side_edges;
  std::array<std::set<Vertex>, 2> side_vertices{std::set<Vertex>{i, j}, std::set<Vertex>{i, j}};
  TwoSeparation sep;
  sep.i = i;
  sep.j = j;
  sep.parent_vertex_count = g.vertex_count();
  for (const auto& [pair, m] : g.edges()) {
    const auto s = static_cast<std::size_t>(assignment(pair.first, pair.second));
    side_edges[s][pair] += m;
    side_vertices[s].insert(pair.first);
    side_vertices[s].insert(pair.second);
    sep.provenance[pair][s] += m;
  }

  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (v == i || v == j) continue;
    const bool a = side_vertices[0].contains(v);
    const bool b = side_vertices[1].contains(v);
    if (a && b)
      throw InvalidArgument("split: vertex " + label(v) + " has edges on both sides, {" + label(i) + "," +
                            label(j) + "} does not separate this assignment");
    if (!a && !b) throw InvalidArgument("split: vertex " + label(v) + " is isolated");
  }
  for (std::size_t s = 0; s < 2; ++s) {
    if (side_vertices[s].size() < 3)
      throw InvalidArgument("split: side " + std::to_string(s + 1) + " has no vertex outside {" + label(i) + "," +
                            label(j) + "}");
    sep.sides[s] = make_piece(g, side_vertices[s], side_edges[s]);
    if (!connected(sep.sides[s].graph))
      throw InvalidArgument("split: side " + std::to_string(s + 1) + " is disconnected");
  }
  return sep;
}

TwoSeparation split(const MultiGraph& g, Vertex i, Vertex j, Side ij_edges) {
  require_vertex(g, i, "split");
  require_vertex(g, j, "split");
  if (i == j) throw InvalidArgument("split: separator vertices must differ");
  const auto comps = components_without(g, {i, j});
  if (comps.size() < 2)
    throw InvalidArgument("split: {" + label(i) + "," + label(j) + "} is not a 2-separator");
  return split(g, i, j, assign_by_vertices(i, j, {comps.front().begin(), comps.front().end()}, ij_edges));
}

MultiGraph reassemble(const TwoSeparation& sep) {
  std::vector<EdgeSpec> edges;
  for (const auto& piece : sep.sides)
    for (const auto& [pair, m] : piece.graph.edges())
      edges.push_back({piece.to_parent(pair.first), piece.to_parent(pair.second), m});
  return MultiGraph::build(sep.parent_vertex_count, edges);
}

MultiGraph two_switch(const TwoSeparation& sep, Side relabelled) {
  std::vector<EdgeSpec> edges;
  for (std::size_t s = 0; s < 2; ++s) {
    const auto& piece = sep.sides[s];
    const bool swap = s == static_cast<std::size_t>(relabelled);
    auto place = [&](Vertex local) {
      const Vertex p = piece.to_parent(local);
      if (!swap) return p;
      if (p == sep.i) return sep.j;
      if (p == sep.j) return sep.i;
      return p;
    };
    for (const auto& [pair, m] : piece.graph.edges()) edges.push_back({place(pair.first), place(pair.second), m});
  }
  return MultiGraph::build(sep.parent_vertex_count, edges);
}

CutSeparation split_at_cut_vertex(const MultiGraph& g, Vertex w) {
  require_vertex(g, w, "split_at_cut_vertex");
  if (!connected(g)) throw InvalidArgument("split_at_cut_vertex: graph is disconnected");
  const auto comps = components_without(g, {w});
  if (comps.size() < 2) throw InvalidArgument("split_at_cut_vertex: " + label(w) + " is not a cut vertex");

  std::array<std::set<Vertex>, 2> vertices;
  vertices[0].insert(comps.front().begin(), comps.front().end());
  for (std::size_t c = 1; c < comps.size(); ++c) vertices[1].insert(comps[c].begin(), comps[c].end());
  std::array<std::map<VertexPair, Multiplicity>, 2> edges;
  for (const auto& [pair, m] : g.edges()) {
    const Vertex other = pair.first == w ? pair.second : pair.first;
    edges[vertices[0].contains(other) ? 0 : 1][pair] = m;
  }
  CutSeparation cut;
  cut.w = w;
  for (std::size_t s = 0; s < 2; ++s) {
    vertices[s].insert(w);
    cut.sides[s] = make_piece(g, vertices[s], edges[s]);
  }
  return cut;
}

}  // namespace twosep
