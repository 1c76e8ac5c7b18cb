#include "twosep/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "twosep/errors.hpp"

namespace twosep {

namespace {

// Pair multiplicities laid out in (a,b) lexicographic order, 0-based vertices.
struct PairLayout {
  std::size_t n;
  std::vector<std::vector<std::size_t>> index;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  explicit PairLayout(std::size_t n_) : n(n_), index(n_, std::vector<std::size_t>(n_, 0)) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        index[a][b] = index[b][a] = pairs.size();
        pairs.emplace_back(a, b);
      }
  }
};

template <typename M>
std::vector<M> canonical_code(const PairLayout& layout, const std::vector<M>& mults) {
  std::vector<std::size_t> perm(layout.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<M> best;
  std::vector<M> code(mults.size());
  do {
    for (std::size_t p = 0; p < layout.pairs.size(); ++p) {
      const auto [a, b] = layout.pairs[p];
      code[layout.index[perm[a]][perm[b]]] = mults[p];
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

template <typename M>
bool code_connected(const PairLayout& layout, const std::vector<M>& mults) {
  std::vector<std::size_t> parent(layout.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t groups = layout.n;
  for (std::size_t p = 0; p < layout.pairs.size(); ++p) {
    if (mults[p] == 0) continue;
    const auto a = find(layout.pairs[p].first), b = find(layout.pairs[p].second);
    if (a != b) {
      parent[a] = b;
      --groups;
    }
  }
  return groups == 1;
}

template <typename M>
MultiGraph graph_of(const PairLayout& layout, const std::vector<M>& mults) {
  std::vector<EdgeSpec> edges;
  for (std::size_t p = 0; p < layout.pairs.size(); ++p)
    if (mults[p] != 0)
      edges.push_back({static_cast<Vertex>(layout.pairs[p].first + 1), static_cast<Vertex>(layout.pairs[p].second + 1),
                       static_cast<Multiplicity>(mults[p])});
  return MultiGraph::build(layout.n, edges);
}

MultiGraph relabel_randomly(std::mt19937_64& rng, const MultiGraph& g) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{1});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<EdgeSpec> edges;
  for (const auto& [pair, m] : g.edges()) edges.push_back({perm[pair.first - 1], perm[pair.second - 1], m});
  return MultiGraph::build(g.vertex_count(), edges);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// 2-tree on labels[0..], grown from the triangle on the first three labels.
void grow_two_tree(std::mt19937_64& rng, const std::vector<Vertex>& labels, std::vector<EdgeSpec>& out) {
  std::vector<VertexPair> tree_edges{make_pair_sorted(labels[0], labels[1]), make_pair_sorted(labels[1], labels[2]),
                                     make_pair_sorted(labels[0], labels[2])};
  for (std::size_t x = 3; x < labels.size(); ++x) {
    const auto [a, b] = tree_edges[uniform(rng, 0, tree_edges.size() - 1)];
    tree_edges.push_back(make_pair_sorted(labels[x], a));
    tree_edges.push_back(make_pair_sorted(labels[x], b));
  }
  for (const auto& [a, b] : tree_edges) out.push_back({a, b, 1});
}

}  // namespace

std::string isomorphism_key(const MultiGraph& g) {
  const PairLayout layout(g.vertex_count());
  std::vector<Multiplicity> mults(layout.pairs.size(), 0);
  for (const auto& [pair, m] : g.edges()) mults[layout.index[pair.first - 1][pair.second - 1]] = m;
  const auto code = canonical_code(layout, mults);
  std::string key = std::to_string(g.vertex_count()) + "|";
  for (const auto m : code) key += std::to_string(m) + ",";
  return key;
}

std::vector<MultiGraph> connected_graphs(std::size_t n, Multiplicity max_mult) {
  if (n == 0) throw InvalidArgument("connected_graphs: n must be positive");
  if (max_mult == 0 || max_mult > 3) throw InvalidArgument("connected_graphs: max_mult must be 1..3");
  if ((max_mult == 1 && n > 6) || (max_mult > 1 && n > 5))
    throw InvalidArgument("connected_graphs: too many vertices for exhaustive generation");
  const PairLayout layout(n);
  const std::size_t base = max_mult + 1;
  std::size_t total = 1;
  for (std::size_t p = 0; p < layout.pairs.size(); ++p) total *= base;

  std::set<std::vector<std::uint8_t>> seen;
  std::vector<MultiGraph> out;
  std::vector<std::uint8_t> mults(layout.pairs.size(), 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (auto& m : mults) {
      m = static_cast<std::uint8_t>(rest % base);
      rest /= base;
    }
    if (!code_connected(layout, mults)) continue;
    auto canon = canonical_code(layout, mults);
    if (seen.insert(canon).second) out.push_back(graph_of(layout, canon));
  }
  return out;
}

std::vector<MultiGraph> simple_corpus(std::size_t max_n) {
  std::vector<MultiGraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = connected_graphs(n, 1);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<MultiGraph> multiplicity2_corpus(std::size_t max_n) {
  std::vector<MultiGraph> out;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (auto& g : connected_graphs(n, 2)) {
      bool doubled = false;
      for (const auto& [pair, m] : g.edges()) doubled = doubled || m == 2;
      if (doubled) out.push_back(std::move(g));
    }
  return out;
}

MultiGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  if (options.min_vertices < 1 || options.min_vertices > options.max_vertices)
    throw InvalidArgument("random_connected_graph: bad vertex range");
  if (options.max_vertices > options.max_edge_instances + 1)
    throw InvalidArgument("random_connected_graph: vertex range exceeds the edge budget");
  const std::size_t n = uniform(rng, options.min_vertices, options.max_vertices);
  std::map<VertexPair, Multiplicity> mult;
  for (Vertex v = 2; v <= n; ++v) mult[make_pair_sorted(v, static_cast<Vertex>(uniform(rng, 1, v - 1)))] = 1;

  const Multiplicity capacity = static_cast<Multiplicity>(n * (n - 1) / 2) * options.max_mult;
  const Multiplicity ceiling = std::min(capacity, options.max_edge_instances);
  const Multiplicity target = n < 2 ? 0 : uniform(rng, n - 1, ceiling);
  Multiplicity placed = n - 1;
  while (placed < target) {
    const auto a = static_cast<Vertex>(uniform(rng, 1, n));
    const auto b = static_cast<Vertex>(uniform(rng, 1, n));
    if (a == b) continue;
    auto& m = mult[make_pair_sorted(a, b)];
    if (m >= options.max_mult) continue;
    ++m;
    ++placed;
  }
  std::vector<EdgeSpec> edges;
  for (const auto& [pair, m] : mult)
    if (m > 0) edges.push_back({pair.first, pair.second, m});
  return relabel_randomly(rng, MultiGraph::build(n, edges));
}

MultiGraph random_two_tree(std::mt19937_64& rng, std::size_t n, double double_probability) {
  if (n < 3) throw InvalidArgument("random_two_tree: need n >= 3");
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), Vertex{1});
  std::vector<EdgeSpec> edges;
  grow_two_tree(rng, labels, edges);
  std::bernoulli_distribution coin(double_probability);
  for (auto& e : edges)
    if (coin(rng)) e.mult = 2;
  return relabel_randomly(rng, MultiGraph::build(n, edges));
}

MultiGraph random_glued_graph(std::mt19937_64& rng, std::size_t n1, std::size_t n2) {
  if (n1 < 3 || n2 < 3) throw InvalidArgument("random_glued_graph: each side needs at least 3 vertices");
  const std::size_t n = n1 + n2 - 2;
  std::vector<Vertex> left(n1), right{1, 2};
  std::iota(left.begin(), left.end(), Vertex{1});
  for (std::size_t x = n1 + 1; x <= n; ++x) right.push_back(static_cast<Vertex>(x));
  std::vector<EdgeSpec> edges;
  grow_two_tree(rng, left, edges);
  grow_two_tree(rng, right, edges);
  for (const auto* side : {&left, &right}) {
    if (side->size() < 4) continue;
    const std::size_t chords = uniform(rng, 0, 2);
    for (std::size_t c = 0; c < chords; ++c) {
      const Vertex a = (*side)[uniform(rng, 0, side->size() - 1)];
      const Vertex b = (*side)[uniform(rng, 0, side->size() - 1)];
      if (a != b) edges.push_back({a, b, 1});
    }
  }
  return relabel_randomly(rng, MultiGraph::build(n, edges));
}

std::vector<MultiGraph> random_corpus(std::size_t count, std::uint64_t seed, const RandomGraphOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<MultiGraph> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) out.push_back(random_connected_graph(rng, options));
  return out;
}

}  // namespace twosep
