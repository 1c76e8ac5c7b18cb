#include "twosep/forest_count.hpp"

#include <utility>
#include <vector>

#include "twosep/errors.hpp"

namespace twosep {

void Query::validate(const MultiGraph& g) const {
  auto check = [&](Vertex x) {
    if (!g.has_vertex(x))
      throw InvalidArgument("vertex " + std::to_string(x) + " not in 1.." + std::to_string(g.vertex_count()));
  };
  switch (kind) {
    case Kind::trees:
      return;
    case Kind::two_forest:
      check(u);
      check(v);
      if (u == v) throw InvalidArgument("2-forest query needs two distinct vertices");
      return;
    case Kind::two_forest_pair:
      check(u);
      check(v);
      check(w);
      if (u == v || u == w || v == w) throw InvalidArgument("2-forest pair query needs three distinct vertices");
      return;
  }
}

std::string Query::str() const {
  switch (kind) {
    case Kind::trees:
      return "T";
    case Kind::two_forest:
      return "F(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case Kind::two_forest_pair:
      return "F(" + std::to_string(u) + ",{" + std::to_string(v) + "," + std::to_string(w) + "})";
  }
  return {};
}

Count count_trees_det(const MultiGraph& g) { return det_exact(minor_matrix(laplacian(g), {1}, {1})); }

Count count_2forests_det(const MultiGraph& g, Vertex u, Vertex v) {
  Query::forests(u, v).validate(g);
  return det_exact(minor_matrix(laplacian(g), {u, v}, {u, v}));
}

Count count_2forests_pair(const MultiGraph& g, Vertex u, Vertex v, Vertex w) {
  Query::forests_pair(u, v, w).validate(g);
  const Count twice = count_2forests_det(g, v, u) + count_2forests_det(g, w, u) - count_2forests_det(g, v, w);
  if (mpz_odd_p(twice.get_mpz_t()) || sgn(twice) < 0)
    throw ConsistencyError("F(x,z) + F(y,z) - F(x,y) = " + twice.get_str() + " is not a nonnegative even number");
  return twice / 2;
}

Count count_det(const MultiGraph& g, const Query& q) {
  switch (q.kind) {
    case Query::Kind::trees:
      return count_trees_det(g);
    case Query::Kind::two_forest:
      return count_2forests_det(g, q.u, q.v);
    case Query::Kind::two_forest_pair:
      return count_2forests_pair(g, q.u, q.v, q.w);
  }
  return 0;
}

namespace {

// Union-find with undo: union by size, no path compression.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n + 1), size_(n + 1, 1) {
    for (std::size_t i = 0; i <= n; ++i) parent_[i] = static_cast<Vertex>(i);
  }

  Vertex find(Vertex x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
  }

  void undo() {
    const Vertex b = history_.back();
    history_.pop_back();
    const Vertex a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::vector<Vertex> history_;
};

struct Enumerator {
  std::vector<std::pair<Vertex, Vertex>> instances;
  std::size_t target = 0;
  Query query;
  RollbackUnionFind uf;
  std::uint64_t found = 0;

  // Would joining the classes of a and b merge two classes that must stay apart?
  bool forbidden(Vertex ra, Vertex rb) const {
    auto splits = [&](Vertex x, Vertex y) {
      const Vertex rx = uf.find(x);
      const Vertex ry = uf.find(y);
      return (ra == rx && rb == ry) || (ra == ry && rb == rx);
    };
    switch (query.kind) {
      case Query::Kind::trees:
        return false;
      case Query::Kind::two_forest:
        return splits(query.u, query.v);
      case Query::Kind::two_forest_pair:
        return splits(query.u, query.v) || splits(query.u, query.w);
    }
    return false;
  }

  bool accept() const {
    if (query.kind == Query::Kind::two_forest_pair) return uf.find(query.v) == uf.find(query.w);
    return true;
  }

  void walk(std::size_t next, std::size_t chosen) {
    if (chosen == target) {
      if (accept()) ++found;
      return;
    }
    if (instances.size() - next < target - chosen) return;
    const auto [a, b] = instances[next];
    const Vertex ra = uf.find(a);
    const Vertex rb = uf.find(b);
    if (ra != rb && !forbidden(ra, rb)) {
      uf.unite(a, b);
      walk(next + 1, chosen + 1);
      uf.undo();
    }
    walk(next + 1, chosen);
  }
};

Count run_enumeration(const MultiGraph& g, const Query& q, EnumerationLimits limits) {
  q.validate(g);
  const Multiplicity total = g.edge_count();
  if (total > limits.max_edge_instances)
    throw InvalidArgument("enumeration: graph has " + std::to_string(total) + " edge instances, limit is " +
                          std::to_string(limits.max_edge_instances));
  const std::size_t n = g.vertex_count();
  Enumerator e{{}, 0, q, RollbackUnionFind(n), 0};
  for (const auto& [pair, m] : g.edges())
    for (Multiplicity k = 0; k < m; ++k) e.instances.push_back(pair);
  e.target = q.kind == Query::Kind::trees ? n - 1 : n - 2;
  e.walk(0, 0);
  return Count(static_cast<unsigned long>(e.found));
}

}  // namespace

Count enumerate_trees(const MultiGraph& g, EnumerationLimits limits) {
  return run_enumeration(g, Query::trees(), limits);
}

Count enumerate_2forests(const MultiGraph& g, Vertex u, Vertex v, EnumerationLimits limits) {
  return run_enumeration(g, Query::forests(u, v), limits);
}

Count enumerate_2forests_pair(const MultiGraph& g, Vertex u, Vertex v, Vertex w, EnumerationLimits limits) {
  return run_enumeration(g, Query::forests_pair(u, v, w), limits);
}

Count enumerate(const MultiGraph& g, const Query& q, EnumerationLimits limits) {
  return run_enumeration(g, q, limits);
}

}  // namespace twosep
