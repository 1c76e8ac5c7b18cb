#pragma once

#include <optional>
#include <string>

#include "twosep/exact.hpp"
#include "twosep/graph.hpp"

namespace twosep {

enum class ResistanceMethod { f_over_t, same_side_reduction, cross_reduction, cut_vertex, pinv_float };

std::string method_name(ResistanceMethod method);

struct ResistanceResult {
  /// Exact value; empty for the floating-point method.
  std::optional<Ratio> value;
  ResistanceMethod method = ResistanceMethod::f_over_t;
  double approximate = 0.0;
  /// Decimal rendering (12 digits, half-even) of the exact value, or the
  /// shortest round-trip form of the floating value.
  std::string float_value;
};

/// r(u,v) = F(u,v) / T(G), both by determinant. Rejects disconnected graphs
/// and u == v.
Ratio resistance(const MultiGraph& g, Vertex u, Vertex v);

/// Resistance through a cut vertex w. Pairs split by w get
/// r_G1(u,w) + r_G2(w,v); pairs on one side get that side's resistance.
/// Rejects a w that is not a cut vertex.
Ratio resistance_cut_vertex(const MultiGraph& g, Vertex w, Vertex u, Vertex v);

/// Resistance in G/ij between the images of u and v, computed from
/// resistances in G only:
///   r(u,v) - [r(u,i) + r(v,j) - r(u,j) - r(v,i)]^2 / (4 r(i,j)),
/// with r(x,x) = 0.
Ratio resistance_identified(const MultiGraph& g, Vertex i, Vertex j, Vertex u, Vertex v);

/// u and v on one side (parent labels); uses side resistances only.
Ratio resistance_same_side(const TwoSeparation& sep, Vertex u, Vertex v);

/// u and v on opposite sides, off the separator.
Ratio resistance_cross(const TwoSeparation& sep, Vertex u, Vertex v);

/// (e_u - e_v)^T L^+ (e_u - e_v) in double precision. Diagnostic only.
double resistance_pinv(const MultiGraph& g, Vertex u, Vertex v);

/// Dispatches to one of the routes above. The reduction routes pick the first
/// applicable cut vertex or 2-separator and throw InvalidArgument when none
/// fits the pair.
ResistanceResult compute_resistance(const MultiGraph& g, Vertex u, Vertex v, ResistanceMethod method);

}  // namespace twosep
