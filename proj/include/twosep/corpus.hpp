#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twosep/graph.hpp"

namespace twosep {

/// Smallest canonical_key over all relabellings. Practical up to about 8
/// vertices.
std::string isomorphism_key(const MultiGraph& g);

/// One representative of every isomorphism class of connected graphs on
/// exactly n vertices whose pair multiplicities lie in 0..max_mult.
/// n <= 6 for max_mult == 1, n <= 5 otherwise.
std::vector<MultiGraph> connected_graphs(std::size_t n, Multiplicity max_mult = 1);

/// All connected simple graphs on 1..max_n vertices, up to isomorphism.
std::vector<MultiGraph> simple_corpus(std::size_t max_n = 6);

/// Connected multigraphs on 2..max_n vertices with multiplicities up to 2 and
/// at least one doubled pair, up to isomorphism.
std::vector<MultiGraph> multiplicity2_corpus(std::size_t max_n = 5);

struct RandomGraphOptions {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 8;
  Multiplicity max_mult = 2;
  /// Upper bound on the sum of multiplicities.
  Multiplicity max_edge_instances = 24;
};

/// Random connected multigraph: a random spanning tree plus random extra
/// edge instances, respecting the options.
MultiGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphOptions& options = {});

/// Random 2-tree on n >= 3 vertices (each new vertex joins both ends of an
/// existing edge), then a random subset of pairs doubled. Rich in 2-separators.
MultiGraph random_two_tree(std::mt19937_64& rng, std::size_t n, double double_probability = 0.0);

/// Two random 2-trees glued along an edge with a few extra chords inside each
/// side, so the glue pair stays a 2-separator.
MultiGraph random_glued_graph(std::mt19937_64& rng, std::size_t n1, std::size_t n2);

/// Deterministic list of `count` random connected graphs within the
/// enumeration cap.
std::vector<MultiGraph> random_corpus(std::size_t count, std::uint64_t seed = 20240611,
                                      const RandomGraphOptions& options = {});

}  // namespace twosep
