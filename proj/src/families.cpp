#include "twosep/families.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "twosep/errors.hpp"

namespace twosep {

namespace {

constexpr std::size_t kMaxSierpinskiGraph = 8;
constexpr std::size_t kMaxSierpinskiFormula = 15;

using Index = std::int64_t;

Index idx(std::size_t x) { return static_cast<Index>(x); }

BigInt sign_pow(Index e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

void require_pair(std::size_t u, std::size_t v, std::size_t n, const char* op) {
  if (u < 1 || u >= v || v > n)
    throw InvalidArgument(std::string(op) + ": need 1 <= u < v <= n, got u=" + std::to_string(u) +
                          " v=" + std::to_string(v) + " n=" + std::to_string(n));
}

void require_bend(std::size_t n, std::size_t k, const char* op) {
  if (n < 4 || k < 1 || k + 3 > n)
    throw InvalidArgument(std::string(op) + ": need 1 <= k <= n-3, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
}

BigInt pow_ui(unsigned long base, std::uint64_t exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(exponent));
  return out;
}

std::uint64_t pow3(std::size_t n) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= 3;
  return p;
}

// Numerator divided by a small positive divisor, which must divide exactly.
std::uint64_t exact_quarter(std::int64_t numerator, std::int64_t divisor) {
  if (numerator < 0 || numerator % divisor != 0)
    throw ConsistencyError("sierpinski exponent " + std::to_string(numerator) + "/" + std::to_string(divisor) +
                           " is not a nonnegative integer");
  return static_cast<std::uint64_t>(numerator / divisor);
}

}  // namespace

void FibCache::extend(std::size_t p) {
  while (fib_.size() <= p) fib_.push_back(fib_[fib_.size() - 1] + fib_[fib_.size() - 2]);
}

BigInt FibCache::fib(std::int64_t p) {
  const auto magnitude = static_cast<std::size_t>(p < 0 ? -p : p);
  BigInt value;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    extend(magnitude);
    value = fib_[magnitude];
  }
  if (p < 0 && magnitude % 2 == 0) value = -value;
  return value;
}

BigInt FibCache::lucas(std::int64_t q) { return fib(q - 1) + fib(q + 1); }

FibCache& fib_cache() {
  static FibCache cache;
  return cache;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::straight_2tree:
      return "straight";
    case Family::bent_2tree:
      return "bent";
    case Family::sierpinski:
      return "sierpinski";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "straight" || name == "straight_2tree") return Family::straight_2tree;
  if (name == "bent" || name == "bent_2tree") return Family::bent_2tree;
  if (name == "sierpinski") return Family::sierpinski;
  throw InvalidArgument("unknown family '" + name + "' (expected straight, bent or sierpinski)");
}

void FamilySpec::validate() const {
  switch (family) {
    case Family::straight_2tree:
      if (n < 3) throw InvalidArgument("straight 2-tree needs n >= 3");
      return;
    case Family::bent_2tree:
      require_bend(n, k, "bent 2-tree");
      return;
    case Family::sierpinski:
      if (n > kMaxSierpinskiGraph)
        throw InvalidArgument("sierpinski graphs are generated up to stage " + std::to_string(kMaxSierpinskiGraph));
      return;
  }
}

MultiGraph gen_straight(std::size_t n) {
  if (n < 3) throw InvalidArgument("gen_straight: need n >= 3, got " + std::to_string(n));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), 1});
  for (std::size_t i = 1; i + 2 <= n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 2), 1});
  return MultiGraph::build(n, edges);
}

MultiGraph gen_bent(std::size_t n, std::size_t k) {
  require_bend(n, k, "gen_bent");
  std::vector<EdgeSpec> edges;
  const MultiGraph straight = gen_straight(n);
  for (const auto& [pair, m] : straight.edges()) {
    if (pair == VertexPair{static_cast<Vertex>(k + 1), static_cast<Vertex>(k + 3)}) continue;
    edges.push_back({pair.first, pair.second, m});
  }
  edges.push_back({static_cast<Vertex>(k), static_cast<Vertex>(k + 3), 1});
  return MultiGraph::build(n, edges);
}

SierpinskiGraph gen_sierpinski(std::size_t n) {
  if (n > kMaxSierpinskiGraph)
    throw InvalidArgument("gen_sierpinski: stage " + std::to_string(n) + " exceeds the supported " +
                          std::to_string(kMaxSierpinskiGraph));
  struct Triangle {
    Vertex a, b, c;  // bottom-left, bottom-right, top
    std::size_t level;
  };
  std::map<VertexPair, Vertex> midpoint;
  Vertex next_label = 4;
  auto mid = [&](Vertex x, Vertex y) {
    auto [it, inserted] = midpoint.try_emplace(make_pair_sorted(x, y), next_label);
    if (inserted) ++next_label;
    return it->second;
  };

  std::vector<EdgeSpec> edges;
  std::deque<Triangle> queue{{1, 2, 3, n}};
  while (!queue.empty()) {
    const Triangle t = queue.front();
    queue.pop_front();
    if (t.level == 0) {
      edges.push_back({t.a, t.b, 1});
      edges.push_back({t.b, t.c, 1});
      edges.push_back({t.c, t.a, 1});
      continue;
    }
    const Vertex ab = mid(t.a, t.b);
    const Vertex bc = mid(t.b, t.c);
    const Vertex ca = mid(t.c, t.a);
    queue.push_back({ca, bc, t.c, t.level - 1});
    queue.push_back({t.a, ab, ca, t.level - 1});
    queue.push_back({ab, t.b, bc, t.level - 1});
  }
  return {MultiGraph::build(next_label - 1, edges), {1, 2, 3}};
}

MultiGraph generate(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::straight_2tree:
      return gen_straight(spec.n);
    case Family::bent_2tree:
      return gen_bent(spec.n, spec.k);
    case Family::sierpinski:
      return gen_sierpinski(spec.n).graph;
  }
  throw InvalidArgument("unknown family");
}

Count straight_trees(std::size_t n) {
  if (n < 3) throw InvalidArgument("straight_trees: need n >= 3");
  return fib(2 * idx(n) - 2);
}

Ratio straight_resistance_closed(std::size_t j, std::size_t k, std::size_t n) {
  if (j < 1 || k < 1 || j + k > n)
    throw InvalidArgument("straight_resistance_closed: need 1 <= j < j+k <= n, got j=" + std::to_string(j) +
                          " k=" + std::to_string(k) + " n=" + std::to_string(n));
  const Index m = idx(n) - 2;
  const Index jj = idx(j);
  const Index kk = idx(k);
  const BigInt f_m1 = fib(m + 1);
  const BigInt fk = fib(kk);
  const BigInt tail = fib(m - 2 * jj - kk + 3);
  const Ratio head(f_m1 * f_m1 + fk * fk * tail * tail);
  const BigInt bracket = fib(m - kk) * (kk * lucas(kk) - fk) + fib(m - kk + 1) * ((kk - 5) * fib(kk + 1) + (2 * kk + 2) * fk);
  const Ratio correction = Ratio(f_m1, 5) * Ratio(bracket);
  return (head + correction) / Ratio(fib(2 * m + 2));
}

Count straight_forest_closed(std::size_t u, std::size_t v, std::size_t n) {
  require_pair(u, v, n, "straight_forest_closed");
  const Index nn = idx(n);
  const Index uu = idx(u);
  const Index vv = idx(v);
  const Index d = vv - uu;
  const BigInt f_n1 = fib(nn - 1);
  const BigInt fd = fib(d);
  const BigInt tail = fib(nn - uu - vv + 1);
  const BigInt bracket = fib(nn + uu - vv - 2) * (d * lucas(d) - fd) + fib(nn + uu - vv - 1) * ((d - 5) * fib(d + 1) + 2 * (d + 1) * fd);
  const BigInt fifth_numerator = f_n1 * bracket;
  if (!mpz_divisible_ui_p(fifth_numerator.get_mpz_t(), 5))
    throw ConsistencyError("straight_forest_closed: F_{n-1} * bracket = " + fifth_numerator.get_str() +
                           " is not divisible by 5");
  const Count value = f_n1 * f_n1 + fd * fd * tail * tail + fifth_numerator / 5;
  if (sgn(value) < 0) throw ConsistencyError("straight_forest_closed: negative count");
  return value;
}

Count straight_forest_sum(std::size_t u, std::size_t v, std::size_t n) {
  require_pair(u, v, n, "straight_forest_sum");
  const Index nn = idx(n);
  const Index uu = idx(u);
  Count total = 0;
  for (Index i = 1; i <= idx(v) - uu; ++i)
    total += (fib(i) * fib(i + 2 * uu - 2) - fib(i - 1) * fib(i + 2 * uu - 3)) * fib(2 * nn - 2 * i - 2 * uu + 1);
  return total;
}

BigInt bent_forest_deficit(std::size_t u, std::size_t v, std::size_t n, std::size_t k) {
  require_bend(n, k, "bent_forest_deficit");
  require_pair(u, v, n, "bent_forest_deficit");
  if (!(u <= k + 1 && v > k + 1))
    throw InvalidArgument("bent_forest_deficit: need u <= k+1 < v, got u=" + std::to_string(u) +
                          " v=" + std::to_string(v) + " k=" + std::to_string(k));
  const Index nn = idx(n), kk = idx(k), uu = idx(u), vv = idx(v);
  const BigInt fu = fib(uu - 1);
  const BigInt fv = fib(nn - vv);
  const BigInt left = fib(kk - 2) * fib(kk + 1) + 2 * sign_pow(kk - uu) * fu * fu;
  const BigInt right = fib(nn - kk - 2) * fib(nn - kk + 1) + 2 * sign_pow(vv - kk - 1) * fv * fv;
  return left * right;
}

Count bent_forest(std::size_t u, std::size_t v, std::size_t n, std::size_t k) {
  require_bend(n, k, "bent_forest");
  require_pair(u, v, n, "bent_forest");
  Count value = straight_forest_closed(u, v, n);
  if (u <= k + 1 && v > k + 1) value -= bent_forest_deficit(u, v, n, k);
  return value;
}

Ratio bent_end_resistance(std::size_t n, std::size_t k) {
  require_bend(n, k, "bent_end_resistance");
  const Index nn = idx(n), kk = idx(k);
  const Ratio straight = Ratio(nn - 1, 5) + Ratio(4 * fib(nn - 1), 5 * lucas(nn - 1));
  const BigInt deficit = fib(kk - 2) * fib(kk + 1) * fib(nn - kk - 2) * fib(nn - kk + 1);
  return straight - Ratio(deficit, fib(2 * nn - 2));
}

Count sierpinski_trees(std::size_t n) {
  if (n > kMaxSierpinskiFormula)
    throw InvalidArgument("sierpinski_trees: stage above " + std::to_string(kMaxSierpinskiFormula));
  const auto p = static_cast<std::int64_t>(pow3(n));
  const auto s = static_cast<std::int64_t>(n);
  return pow_ui(2, exact_quarter(p - 1, 2)) * pow_ui(3, exact_quarter(3 * p + 2 * s + 1, 4)) *
         pow_ui(5, exact_quarter(p - 2 * s - 1, 4));
}

Ratio sierpinski_corner_resistance(std::size_t n) {
  return Ratio(2 * pow_ui(5, n), 3 * pow_ui(3, n));
}

Count sierpinski_corner_forests(std::size_t n) {
  if (n > kMaxSierpinskiFormula)
    throw InvalidArgument("sierpinski_corner_forests: stage above " + std::to_string(kMaxSierpinskiFormula));
  const auto p = static_cast<std::int64_t>(pow3(n));
  const auto s = static_cast<std::int64_t>(n);
  return pow_ui(2, exact_quarter(p + 1, 2)) * pow_ui(3, exact_quarter(3 * p - 2 * s - 3, 4)) *
         pow_ui(5, exact_quarter(p + 2 * s - 1, 4));
}

}  // namespace twosep
