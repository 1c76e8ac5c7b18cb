#include "twosep/resistance.hpp"

#include <Eigen/Dense>

#include <charconv>

#include "twosep/errors.hpp"
#include "twosep/forest_count.hpp"
#include "twosep/separation.hpp"

namespace twosep {

namespace {

void require_connected_pair(const MultiGraph& g, Vertex u, Vertex v, const char* op) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw InvalidArgument(std::string(op) + ": vertex outside 1.." + std::to_string(g.vertex_count()));
  if (!connected(g)) throw InvalidArgument(std::string(op) + ": graph is disconnected");
}

// r(x,y) with r(x,x) = 0.
Ratio r0(const MultiGraph& g, Vertex x, Vertex y) { return x == y ? Ratio(0) : resistance(g, x, y); }

Ratio square(const Ratio& x) { return x * x; }

}  // namespace

std::string method_name(ResistanceMethod method) {
  switch (method) {
    case ResistanceMethod::f_over_t:
      return "f_over_t";
    case ResistanceMethod::same_side_reduction:
      return "same_side_reduction";
    case ResistanceMethod::cross_reduction:
      return "cross_reduction";
    case ResistanceMethod::cut_vertex:
      return "cut_vertex";
    case ResistanceMethod::pinv_float:
      return "pinv_float";
  }
  return "unknown";
}

Ratio resistance(const MultiGraph& g, Vertex u, Vertex v) {
  require_connected_pair(g, u, v, "resistance");
  if (u == v) throw InvalidArgument("resistance: u and v must differ");
  return Ratio(count_2forests_det(g, u, v), count_trees_det(g));
}

Ratio resistance_cut_vertex(const MultiGraph& g, Vertex w, Vertex u, Vertex v) {
  require_connected_pair(g, u, v, "resistance_cut_vertex");
  if (u == v) throw InvalidArgument("resistance_cut_vertex: u and v must differ");
  const CutSeparation cut = split_at_cut_vertex(g, w);
  for (const auto& side : cut.sides)
    if (side.contains(u) && side.contains(v)) return resistance(side.graph, side.local(u), side.local(v));
  const auto& a = cut.sides[0].contains(u) ? cut.sides[0] : cut.sides[1];
  const auto& b = cut.sides[0].contains(u) ? cut.sides[1] : cut.sides[0];
  return resistance(a.graph, a.local(u), a.local(w)) + resistance(b.graph, b.local(w), b.local(v));
}

Ratio resistance_identified(const MultiGraph& g, Vertex i, Vertex j, Vertex u, Vertex v) {
  require_connected_pair(g, i, j, "resistance_identified");
  require_connected_pair(g, u, v, "resistance_identified");
  if (i == j) throw InvalidArgument("resistance_identified: i and j must differ");
  const Ratio rij = resistance(g, i, j);
  if (rij.sign() <= 0) throw ConsistencyError("resistance_identified: r(i,j) is not positive");
  const Ratio cross = r0(g, u, i) + r0(g, v, j) - r0(g, u, j) - r0(g, v, i);
  return r0(g, u, v) - square(cross) / (Ratio(4) * rij);
}

Ratio resistance_same_side(const TwoSeparation& sep, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("resistance_same_side: u and v must differ");
  std::size_t s = 0;
  if (!(sep.sides[0].contains(u) && sep.sides[0].contains(v))) {
    if (!(sep.sides[1].contains(u) && sep.sides[1].contains(v)))
      throw InvalidArgument("resistance_same_side: vertices are not on one side of the separation");
    s = 1;
  }
  const auto& here = sep.sides[s];
  const auto& there = sep.sides[1 - s];
  const MultiGraph& g = here.graph;
  const Vertex lu = here.local(u), lv = here.local(v), li = here.local(sep.i), lj = here.local(sep.j);
  const Ratio denominator = Ratio(4) * (resistance(g, li, lj) + resistance(there.graph, there.local(sep.i),
                                                                            there.local(sep.j)));
  const Ratio cross = r0(g, lu, li) + r0(g, lv, lj) - r0(g, lu, lj) - r0(g, lv, li);
  return resistance(g, lu, lv) - square(cross) / denominator;
}

Ratio resistance_cross(const TwoSeparation& sep, Vertex u, Vertex v) {
  auto outside = [&](std::size_t s, Vertex x) { return sep.sides[s].contains(x) && x != sep.i && x != sep.j; };
  if (outside(1, u) && outside(0, v)) std::swap(u, v);
  if (!(outside(0, u) && outside(1, v)))
    throw InvalidArgument("resistance_cross: vertices must lie on opposite sides, off the separator");

  const auto& s1 = sep.first();
  const auto& s2 = sep.second();
  const MultiGraph& g1 = s1.graph;
  const MultiGraph& g2 = s2.graph;
  const Vertex i1 = s1.local(sep.i), j1 = s1.local(sep.j), u1 = s1.local(u);
  const Vertex i2 = s2.local(sep.i), j2 = s2.local(sep.j), v2 = s2.local(v);

  const Ratio r1_ij = resistance(g1, i1, j1);
  const Ratio r2_ij = resistance(g2, i2, j2);
  const Ratio r1_ui = resistance(g1, u1, i1);
  const Ratio r1_uj = resistance(g1, u1, j1);
  const Ratio r2_vi = resistance(g2, v2, i2);
  const Ratio r2_vj = resistance(g2, v2, j2);

  const auto [m1, map1] = identify(g1, i1, j1);
  const auto [m2, map2] = identify(g2, i2, j2);
  const Ratio r1_merged = resistance(m1, map1(u1), map1(i1));
  const Ratio r2_merged = resistance(m2, map2(v2), map2(i2));

  const Ratio half(1, 2);
  Ratio numerator = r1_merged * r1_ij + r2_merged * r2_ij;
  numerator += half * (r1_ui * r2_vj + r1_uj * r2_vi);
  numerator -= half * (r1_ui * r2_vi + r1_uj * r2_vj);
  numerator += half * (r1_ui + r1_uj) * r2_ij;
  numerator += half * r1_ij * (r2_vi + r2_vj);
  numerator -= half * r1_ij * r2_ij;
  return numerator / (r1_ij + r2_ij);
}

double resistance_pinv(const MultiGraph& g, Vertex u, Vertex v) {
  require_connected_pair(g, u, v, "resistance_pinv");
  if (u == v) return 0.0;
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  // L^+ = (L + J/n)^{-1} - J/n, and J annihilates e_u - e_v.
  Eigen::MatrixXd shifted = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  for (const auto& [pair, m] : g.edges()) {
    const Eigen::Index a = pair.first - 1;
    const Eigen::Index b = pair.second - 1;
    const auto w = static_cast<double>(m);
    shifted(a, a) += w;
    shifted(b, b) += w;
    shifted(a, b) -= w;
    shifted(b, a) -= w;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(u - 1) = 1.0;
  rhs(v - 1) = -1.0;
  const Eigen::VectorXd x = shifted.ldlt().solve(rhs);
  return rhs.dot(x);
}

ResistanceResult compute_resistance(const MultiGraph& g, Vertex u, Vertex v, ResistanceMethod method) {
  ResistanceResult result;
  result.method = method;
  switch (method) {
    case ResistanceMethod::f_over_t:
      result.value = resistance(g, u, v);
      break;
    case ResistanceMethod::cut_vertex: {
      require_connected_pair(g, u, v, "resistance");
      const auto cuts = find_cut_vertices(g);
      if (cuts.empty()) throw InvalidArgument("resistance: graph has no cut vertex");
      result.value = resistance_cut_vertex(g, cuts.front(), u, v);
      break;
    }
    case ResistanceMethod::same_side_reduction:
    case ResistanceMethod::cross_reduction: {
      require_connected_pair(g, u, v, "resistance");
      for (const VertexPair& s : find_2separators(g)) {
        TwoSeparation sep;
        try {
          sep = split(g, s.first, s.second);
        } catch (const InvalidArgument&) {
          continue;  // not a clean separation (g has a cut vertex)
        }
        const bool same = (sep.sides[0].contains(u) && sep.sides[0].contains(v)) ||
                          (sep.sides[1].contains(u) && sep.sides[1].contains(v));
        if (method == ResistanceMethod::same_side_reduction && same) {
          result.value = resistance_same_side(sep, u, v);
          break;
        }
        if (method == ResistanceMethod::cross_reduction && !same) {
          result.value = resistance_cross(sep, u, v);
          break;
        }
      }
      if (!result.value) throw InvalidArgument("resistance: no 2-separator fits this pair for " + method_name(method));
      break;
    }
    case ResistanceMethod::pinv_float: {
      result.approximate = resistance_pinv(g, u, v);
      char buf[64];
      const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, result.approximate);
      result.float_value.assign(buf, end);
      return result;
    }
  }
  result.approximate = result.value->to_double();
  result.float_value = result.value->decimal();
  return result;
}

}  // namespace twosep
