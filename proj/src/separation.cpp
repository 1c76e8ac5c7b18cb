#include "twosep/separation.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "twosep/errors.hpp"

namespace twosep {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

// Size of the component holding the smallest surviving vertex and the number
// of components, with `a` and `b` deleted (b may be 0 for "only a").
struct Cut {
  std::size_t components = 0;
  std::size_t first_size = 0;
};

Cut probe(const Adjacency& adj, std::size_t n, Vertex a, Vertex b, std::vector<int>& mark, int& stamp,
          std::vector<Vertex>& stack) {
  Cut cut;
  ++stamp;
  mark[a] = stamp;
  if (b != 0) mark[b] = stamp;
  for (Vertex s = 1; s <= n; ++s) {
    if (mark[s] == stamp) continue;
    std::size_t size = 0;
    mark[s] = stamp;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex y : adj[x]) {
        if (mark[y] == stamp) continue;
        mark[y] = stamp;
        stack.push_back(y);
      }
    }
    if (cut.components == 0) cut.first_size = size;
    ++cut.components;
  }
  return cut;
}

struct Candidate {
  VertexPair separator;
  std::size_t side1 = 0;
  std::size_t side2 = 0;
};

std::vector<Candidate> separator_candidates(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const Adjacency adj = g.adjacency();
  std::vector<int> mark(n + 1, 0);
  std::vector<Vertex> stack;
  int stamp = 0;
  std::vector<Candidate> out;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const Cut cut = probe(adj, n, i, j, mark, stamp, stack);
      if (cut.components >= 2) out.push_back({{i, j}, cut.first_size + 2, n - cut.first_size});
    }
  }
  return out;
}

}  // namespace

std::vector<Vertex> find_cut_vertices(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const Adjacency adj = g.adjacency();
  std::vector<std::size_t> disc(n + 1, 0);
  std::vector<std::size_t> low(n + 1, 0);
  std::vector<bool> articulation(n + 1, false);
  std::size_t clock = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 1; root <= n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++clock;
    std::size_t root_children = 0;
    stack.push_back({root, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const Vertex w = adj[f.v][f.next++];
        if (w == f.parent) continue;
        if (disc[w] != 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = ++clock;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (done.parent == 0) continue;
      low[done.parent] = std::min(low[done.parent], low[done.v]);
      if (done.parent != root && low[done.v] >= disc[done.parent]) articulation[done.parent] = true;
    }
    if (root_children > 1) articulation[root] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (articulation[v]) out.push_back(v);
  return out;
}

std::vector<VertexPair> find_2separators(const MultiGraph& g) {
  std::vector<VertexPair> out;
  for (const Candidate& c : separator_candidates(g)) out.push_back(c.separator);
  return out;
}

SubCounter determinant_counter() {
  return [](const MultiGraph& g, const Query& q) { return count_det(g, q); };
}

Count trees_via_separation(const TwoSeparation& sep, const SubCounter& counter) {
  const auto& g1 = sep.first();
  const auto& g2 = sep.second();
  const Count t1 = counter(g1.graph, Query::trees());
  const Count t2 = counter(g2.graph, Query::trees());
  const Count f1 = counter(g1.graph, Query::forests(g1.local(sep.i), g1.local(sep.j)));
  const Count f2 = counter(g2.graph, Query::forests(g2.local(sep.i), g2.local(sep.j)));
  return mul(t1, f2) + mul(t2, f1);
}

Count forests_same_side(const TwoSeparation& sep, Vertex u, Vertex v, const SubCounter& counter) {
  if (u == v) throw InvalidArgument("forests_same_side: u and v must differ");
  std::size_t s = 0;
  if (!(sep.sides[0].contains(u) && sep.sides[0].contains(v))) {
    if (!(sep.sides[1].contains(u) && sep.sides[1].contains(v)))
      throw InvalidArgument("forests_same_side: " + std::to_string(u) + " and " + std::to_string(v) +
                            " are not on one side of the separation");
    s = 1;
  }
  const auto& here = sep.sides[s];
  const auto& there = sep.sides[1 - s];
  const Vertex hi = here.local(sep.i);
  const Vertex hj = here.local(sep.j);

  const Count split_here = counter(here.graph, Query::forests(here.local(u), here.local(v)));
  const Count split_there = counter(there.graph, Query::forests(there.local(sep.i), there.local(sep.j)));
  const Count trees_there = counter(there.graph, Query::trees());

  const auto [merged, map] = identify(here.graph, hi, hj);
  const Vertex mu = map(here.local(u));
  const Vertex mv = map(here.local(v));
  const Count split_merged = mu == mv ? Count(0) : counter(merged, Query::forests(mu, mv));
  return mul(split_here, split_there) + mul(split_merged, trees_there);
}

namespace {

Count halve_exact(const Count& twice, const char* what) {
  if (mpz_odd_p(twice.get_mpz_t()))
    throw ConsistencyError(std::string(what) + ": expected an even value, got " + twice.get_str());
  return twice / 2;
}

}  // namespace

CrossForms forests_cross_forms(const TwoSeparation& sep, Vertex u, Vertex v, const SubCounter& counter) {
  auto outside = [&](std::size_t s, Vertex x) {
    return sep.sides[s].contains(x) && x != sep.i && x != sep.j;
  };
  if (outside(1, u) && outside(0, v)) std::swap(u, v);
  if (!(outside(0, u) && outside(1, v)))
    throw InvalidArgument("forests_cross: " + std::to_string(u) + " and " + std::to_string(v) +
                          " must lie on opposite sides, off the separator");

  const auto& g1 = sep.first();
  const auto& g2 = sep.second();
  const Vertex i1 = g1.local(sep.i), j1 = g1.local(sep.j), u1 = g1.local(u);
  const Vertex i2 = g2.local(sep.i), j2 = g2.local(sep.j), v2 = g2.local(v);

  const Count t1 = counter(g1.graph, Query::trees());
  const Count t2 = counter(g2.graph, Query::trees());
  const Count f1_ui = counter(g1.graph, Query::forests(u1, i1));
  const Count f1_uj = counter(g1.graph, Query::forests(u1, j1));
  const Count f1_ij = counter(g1.graph, Query::forests(i1, j1));
  const Count f2_vi = counter(g2.graph, Query::forests(v2, i2));
  const Count f2_vj = counter(g2.graph, Query::forests(v2, j2));
  const Count f2_ij = counter(g2.graph, Query::forests(i2, j2));

  const auto [m1, map1] = identify(g1.graph, i1, j1);
  const auto [m2, map2] = identify(g2.graph, i2, j2);
  const Count f1_merged = counter(m1, Query::forests(map1(u1), map1(i1)));
  const Count f2_merged = counter(m2, Query::forests(map2(v2), map2(i2)));

  const Count pair1 = counter(g1.graph, Query::forests_pair(u1, i1, j1));
  const Count pair2 = counter(g2.graph, Query::forests_pair(v2, i2, j2));

  const Count through = mul(f1_merged, t2) + mul(f2_merged, t1);

  CrossForms forms;
  forms.with_pair_counts = through + mul(f1_ui, f2_vj) + mul(f1_uj, f2_vi) - 2 * mul(pair1, pair2);

  Count twice_half_terms = 2 * through;
  twice_half_terms += mul(f1_ui, f2_vj) + mul(f1_uj, f2_vi);
  twice_half_terms -= mul(f1_ui, f2_vi) + mul(f1_uj, f2_vj);
  twice_half_terms += mul(Count(f1_ui + f1_uj), f2_ij);
  twice_half_terms += mul(f1_ij, Count(f2_vi + f2_vj));
  twice_half_terms -= mul(f1_ij, f2_ij);
  forms.with_half_terms = halve_exact(twice_half_terms, "forests_cross half-term form");
  return forms;
}

Count forests_cross(const TwoSeparation& sep, Vertex u, Vertex v, const SubCounter& counter) {
  const CrossForms forms = forests_cross_forms(sep, u, v, counter);
  if (forms.with_pair_counts != forms.with_half_terms)
    throw ConsistencyError("cross-side forms disagree: " + forms.with_pair_counts.get_str() + " vs " +
                           forms.with_half_terms.get_str());
  return forms.with_pair_counts;
}

Count forests_via_separation(const TwoSeparation& sep, Vertex u, Vertex v, const SubCounter& counter) {
  for (const auto& side : sep.sides)
    if (side.contains(u) && side.contains(v)) return forests_same_side(sep, u, v, counter);
  return forests_cross(sep, u, v, counter);
}

Count cut_vertex_trees(const CutSeparation& cut, const SubCounter& counter) {
  return mul(counter(cut.sides[0].graph, Query::trees()), counter(cut.sides[1].graph, Query::trees()));
}

Count cut_vertex_trees(const MultiGraph& g, Vertex w) { return cut_vertex_trees(split_at_cut_vertex(g, w)); }

Count cut_vertex_forests(const CutSeparation& cut, Vertex u, Vertex v, const SubCounter& counter) {
  if (u == v) throw InvalidArgument("cut_vertex_forests: u and v must differ");
  for (std::size_t s = 0; s < 2; ++s) {
    const auto& here = cut.sides[s];
    if (here.contains(u) && here.contains(v)) {
      return mul(counter(here.graph, Query::forests(here.local(u), here.local(v))),
                 counter(cut.sides[1 - s].graph, Query::trees()));
    }
  }
  const std::size_t su = cut.sides[0].contains(u) ? 0 : 1;
  const auto& a = cut.sides[su];
  const auto& b = cut.sides[1 - su];
  if (!a.contains(u) || !b.contains(v)) throw InvalidArgument("cut_vertex_forests: vertex outside the graph");
  return mul(counter(a.graph, Query::forests(a.local(u), a.local(cut.w))), counter(b.graph, Query::trees())) +
         mul(counter(a.graph, Query::trees()), counter(b.graph, Query::forests(b.local(cut.w), b.local(v))));
}

Count cut_vertex_forests(const MultiGraph& g, Vertex w, Vertex u, Vertex v) {
  return cut_vertex_forests(split_at_cut_vertex(g, w), u, v);
}

std::string rule_name(TraceNode::Rule rule) {
  switch (rule) {
    case TraceNode::Rule::determinant:
      return "determinant";
    case TraceNode::Rule::cut_vertex:
      return "cut_vertex";
    case TraceNode::Rule::two_separation:
      return "two_separation";
    case TraceNode::Rule::pair_identity:
      return "pair_identity";
    case TraceNode::Rule::memo:
      return "memo";
    case TraceNode::Rule::trivial:
      return "trivial";
  }
  return "unknown";
}

namespace {

void write_text(const TraceNode& node, std::size_t depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << node.query.str() << " = " << node.value.get_str() << "  ["
      << rule_name(node.rule);
  if (node.separator)
    out << " {" << node.separator->first << "," << node.separator->second << "} sides " << node.side_sizes.first
        << "/" << node.side_sizes.second;
  if (node.cut_vertex)
    out << " at " << *node.cut_vertex << " sides " << node.side_sizes.first << "/" << node.side_sizes.second;
  out << "] n=" << node.vertices << " m=" << node.edges << "\n";
  for (const TraceNode& child : node.children) write_text(child, depth + 1, out);
}

nlohmann::ordered_json node_json(const TraceNode& node) {
  nlohmann::ordered_json j;
  j["rule"] = rule_name(node.rule);
  j["query"] = node.query.str();
  j["vertices"] = node.vertices;
  j["edges"] = node.edges;
  j["value"] = node.value.get_str();
  if (node.separator) j["separator"] = {node.separator->first, node.separator->second};
  if (node.cut_vertex) j["cut_vertex"] = *node.cut_vertex;
  if (node.separator || node.cut_vertex) j["sides"] = {node.side_sizes.first, node.side_sizes.second};
  auto children = nlohmann::ordered_json::array();
  for (const TraceNode& child : node.children) children.push_back(node_json(child));
  j["children"] = std::move(children);
  return j;
}

std::size_t count_nodes(const TraceNode& node) {
  std::size_t total = 1;
  for (const TraceNode& child : node.children) total += count_nodes(child);
  return total;
}

std::size_t node_depth(const TraceNode& node) {
  std::size_t deepest = 0;
  for (const TraceNode& child : node.children) deepest = std::max(deepest, node_depth(child));
  return deepest + 1;
}

}  // namespace

std::string ReductionTrace::to_text() const {
  std::ostringstream out;
  if (!empty()) write_text(root_, 0, out);
  return out.str();
}

nlohmann::ordered_json ReductionTrace::to_json() const {
  return empty() ? nlohmann::ordered_json(nullptr) : node_json(root_);
}

std::size_t ReductionTrace::node_count() const { return empty() ? 0 : count_nodes(root_); }
std::size_t ReductionTrace::depth() const { return empty() ? 0 : node_depth(root_); }

struct ReductionEngine::Impl {
  SolveOptions options;
  std::unordered_map<std::string, Count> memo;
  SolveStats stats;

  Count count(const MultiGraph& g, Query q, TraceNode* node);
  SubCounter child_counter(TraceNode* node);
  Count reduce(const MultiGraph& g, const Query& q, TraceNode* node);
};

SubCounter ReductionEngine::Impl::child_counter(TraceNode* node) {
  return [this, node](const MultiGraph& sub, const Query& q) {
    if (node == nullptr) return count(sub, q, nullptr);
    node->children.emplace_back();
    return count(sub, q, &node->children.back());
  };
}

Count ReductionEngine::Impl::count(const MultiGraph& g, Query q, TraceNode* node) {
  ++stats.calls;
  if (q.kind == Query::Kind::two_forest && q.u > q.v) std::swap(q.u, q.v);
  if (node != nullptr) {
    node->vertices = g.vertex_count();
    node->edges = g.edge_count();
    node->query = q;
  }
  auto finish = [&](TraceNode::Rule rule, Count value) {
    if (node != nullptr) {
      node->rule = rule;
      node->value = value;
    }
    return value;
  };

  if (q.kind == Query::Kind::two_forest && q.u == q.v) return finish(TraceNode::Rule::trivial, 0);

  std::string key;
  if (options.memoize) {
    key = g.canonical_key();
    key.push_back('#');
    key += q.str();
    if (auto it = memo.find(key); it != memo.end()) {
      ++stats.memo_hits;
      return finish(TraceNode::Rule::memo, it->second);
    }
  }

  Count value = reduce(g, q, node);
  if (options.memoize) memo.emplace(std::move(key), value);
  return value;
}

Count ReductionEngine::Impl::reduce(const MultiGraph& g, const Query& q, TraceNode* node) {
  auto finish = [&](TraceNode::Rule rule, Count value) {
    if (node != nullptr) {
      node->rule = rule;
      node->value = value;
    }
    return value;
  };
  const SubCounter sub = child_counter(node);

  if (q.kind == Query::Kind::two_forest_pair) {
    const Count twice = sub(g, Query::forests(q.v, q.u)) + sub(g, Query::forests(q.w, q.u)) -
                        sub(g, Query::forests(q.v, q.w));
    return finish(TraceNode::Rule::pair_identity, halve_exact(twice, "pair identity"));
  }

  const std::size_t n = g.vertex_count();
  if (n <= options.base_threshold) {
    ++stats.determinant_leaves;
    return finish(TraceNode::Rule::determinant, count_det(g, q));
  }

  const std::vector<Vertex> cut_vertices = find_cut_vertices(g);
  if (!cut_vertices.empty()) {
    Vertex best = cut_vertices.front();
    std::size_t best_size = n + 1;
    std::pair<std::size_t, std::size_t> best_sides{0, 0};
    for (Vertex w : cut_vertices) {
      const auto comps = components_without(g, {w});
      const std::size_t s1 = comps.front().size() + 1;
      const std::size_t s2 = n - comps.front().size();
      if (std::max(s1, s2) < best_size) {
        best = w;
        best_size = std::max(s1, s2);
        best_sides = {s1, s2};
      }
      if (options.order == SeparatorOrder::lexicographic) break;
    }
    ++stats.cut_vertex_steps;
    if (node != nullptr) {
      node->cut_vertex = best;
      node->side_sizes = best_sides;
    }
    const CutSeparation cut = split_at_cut_vertex(g, best);
    const Count value =
        q.kind == Query::Kind::trees ? cut_vertex_trees(cut, sub) : cut_vertex_forests(cut, q.u, q.v, sub);
    return finish(TraceNode::Rule::cut_vertex, value);
  }

  const Candidate* chosen = nullptr;
  const std::vector<Candidate> candidates = separator_candidates(g);
  for (const Candidate& c : candidates) {
    if (c.side1 <= options.base_threshold || c.side2 <= options.base_threshold) continue;
    if (chosen == nullptr || std::max(c.side1, c.side2) < std::max(chosen->side1, chosen->side2)) chosen = &c;
    if (options.order == SeparatorOrder::lexicographic) break;
  }
  if (chosen == nullptr) {
    ++stats.determinant_leaves;
    return finish(TraceNode::Rule::determinant, count_det(g, q));
  }

  ++stats.separation_steps;
  if (node != nullptr) {
    node->separator = chosen->separator;
    node->side_sizes = {chosen->side1, chosen->side2};
  }
  const TwoSeparation sep = split(g, chosen->separator.first, chosen->separator.second);
  const Count value =
      q.kind == Query::Kind::trees ? trees_via_separation(sep, sub) : forests_via_separation(sep, q.u, q.v, sub);
  return finish(TraceNode::Rule::two_separation, value);
}

ReductionEngine::ReductionEngine(SolveOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = options;
}
ReductionEngine::~ReductionEngine() = default;
ReductionEngine::ReductionEngine(ReductionEngine&&) noexcept = default;
ReductionEngine& ReductionEngine::operator=(ReductionEngine&&) noexcept = default;

const SolveOptions& ReductionEngine::options() const { return impl_->options; }

SolveResult ReductionEngine::solve(const MultiGraph& g, const Query& query) {
  query.validate(g);
  if (!connected(g)) throw InvalidArgument("solve: graph is disconnected");
  impl_->stats = {};
  SolveResult result;
  if (impl_->options.record_trace) {
    TraceNode root;
    result.value = impl_->count(g, query, &root);
    result.trace = ReductionTrace(std::move(root));
  } else {
    result.value = impl_->count(g, query, nullptr);
  }
  result.stats = impl_->stats;
  return result;
}

SolveResult solve(const MultiGraph& g, const Query& query, const SolveOptions& options) {
  ReductionEngine engine(options);
  return engine.solve(g, query);
}

}  // namespace twosep
