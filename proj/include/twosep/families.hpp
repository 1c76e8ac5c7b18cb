#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "twosep/exact.hpp"
#include "twosep/graph.hpp"

namespace twosep {

/// Memoised Fibonacci (F_0 = 0, F_1 = 1) and Lucas (L_0 = 2, L_1 = 1)
/// numbers. Negative indices follow the recurrence backwards:
/// F_{-p} = (-1)^{p+1} F_p, so F_{-1} = 1. Safe to share between threads.
class FibCache {
 public:
  BigInt fib(std::int64_t p);
  BigInt lucas(std::int64_t q);

 private:
  void extend(std::size_t p);

  std::mutex mutex_;
  std::vector<BigInt> fib_{0, 1};
};

/// Process-wide cache.
FibCache& fib_cache();
inline BigInt fib(std::int64_t p) { return fib_cache().fib(p); }
inline BigInt lucas(std::int64_t q) { return fib_cache().lucas(q); }

enum class Family { straight_2tree, bent_2tree, sierpinski };

std::string family_name(Family f);
/// Accepts "straight", "bent", "sierpinski" and the long names.
Family parse_family(const std::string& name);

/// Declarative description of one family member.
struct FamilySpec {
  Family family = Family::straight_2tree;
  std::size_t n = 4;
  /// Bend vertex, bent family only.
  std::size_t k = 0;

  /// Throws InvalidArgument on an out-of-range parameter.
  void validate() const;
};

/// Straight linear 2-tree H_n: edges {i,i+1} and {i,i+2}. Requires n >= 3.
MultiGraph gen_straight(std::size_t n);

/// Bent linear 2-tree: H_n with {k+1,k+3} replaced by {k,k+3}. Requires
/// 1 <= k <= n-3 (so n >= 4).
MultiGraph gen_bent(std::size_t n, std::size_t k);

struct SierpinskiGraph {
  MultiGraph graph;
  /// a (bottom left), b (bottom right), c (top): always labels 1, 2, 3.
  std::array<Vertex, 3> corners{1, 2, 3};
};

/// Stage-n Sierpinski triangle. Corners are 1, 2, 3; the remaining vertices
/// are numbered as they are first created while sub-triangles are expanded
/// breadth-first, each triangle yielding its (top, bottom-left, bottom-right)
/// children and creating its side midpoints in the order ab, bc, ca.
/// Supports n <= 8.
SierpinskiGraph gen_sierpinski(std::size_t n);

MultiGraph generate(const FamilySpec& spec);

/// T(H_n) = F_{2n-2}.
Count straight_trees(std::size_t n);

/// r_{H_n}(j, j+k), m = n - 2:
/// (F_{m+1}^2 + F_k^2 F_{m-2j-k+3}^2
///   + F_{m+1}/5 [F_{m-k}(k L_k - F_k) + F_{m-k+1}((k-5) F_{k+1} + (2k+2) F_k)]) / F_{2m+2}.
/// Requires 1 <= j < j + k <= n.
Ratio straight_resistance_closed(std::size_t j, std::size_t k, std::size_t n);

/// F_{H_n}(u,v) from the closed form above times F_{2n-2}. ConsistencyError
/// if the expression is not an integer.
Count straight_forest_closed(std::size_t u, std::size_t v, std::size_t n);

/// F_{H_n}(u,v) = sum_{i=1}^{v-u} (F_i F_{i+2u-2} - F_{i-1} F_{i+2u-3}) F_{2n-2i-2u+1}.
Count straight_forest_sum(std::size_t u, std::size_t v, std::size_t n);

/// The amount by which the bend at k lowers F(u,v) for u <= k+1 < v:
/// [F_{k-2} F_{k+1} + 2(-1)^{k-u} F_{u-1}^2] [F_{n-k-2} F_{n-k+1} + 2(-1)^{v-k-1} F_{n-v}^2].
BigInt bent_forest_deficit(std::size_t u, std::size_t v, std::size_t n, std::size_t k);

/// F_{G_n}(u,v) on the bent 2-tree, any 1 <= u < v <= n. Pairs on one side
/// of {k, k+1} equal the straight value.
Count bent_forest(std::size_t u, std::size_t v, std::size_t n, std::size_t k);

/// r_{G_n}(1,n) = (n-1)/5 + 4 F_{n-1} / (5 L_{n-1}) - F_{k-2} F_{k+1} F_{n-k-2} F_{n-k+1} / F_{2n-2}.
Ratio bent_end_resistance(std::size_t n, std::size_t k);

/// 2^{(3^n-1)/2} 3^{(3^{n+1}+2n+1)/4} 5^{(3^n-2n-1)/4}. Supports n <= 15.
Count sierpinski_trees(std::size_t n);

/// (2/3)(5/3)^n.
Ratio sierpinski_corner_resistance(std::size_t n);

/// 2^{(3^n+1)/2} 3^{(3^{n+1}-2n-3)/4} 5^{(3^n+2n-1)/4}. Supports n <= 15.
Count sierpinski_corner_forests(std::size_t n);

}  // namespace twosep
