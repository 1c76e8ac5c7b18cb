#include "twosep/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twosep/corpus.hpp"
#include "twosep/errors.hpp"
#include "twosep/families.hpp"
#include "twosep/forest_count.hpp"
#include "twosep/io.hpp"
#include "twosep/resistance.hpp"
#include "twosep/separation.hpp"

namespace twosep::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Method { det, reduce, enumerate, pinv, closed_form };

const std::vector<std::string> kMethods{"det", "reduce", "enumerate", "pinv", "closed-form"};

Method parse_method(const std::string& s) {
  if (s == "det") return Method::det;
  if (s == "reduce") return Method::reduce;
  if (s == "enumerate") return Method::enumerate;
  if (s == "pinv") return Method::pinv;
  if (s == "closed-form") return Method::closed_form;
  throw UsageError("unknown method '" + s + "'");
}

struct Options {
  std::string file;
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  std::string method = "reduce";
  std::string format = "text";
  std::string output;
  std::string query;
  std::size_t threshold = 8;
  std::string order = "balanced";
  std::size_t max_n = 6;
  std::size_t random_count = 50;
  std::uint64_t seed = 20240611;
  std::string n_range;
  bool csv = false;
};

struct Loaded {
  MultiGraph graph;
  Json input;
  std::optional<FamilySpec> spec;
};

Json integer_result(const Count& c) { return Json{{"integer", c.get_str()}}; }

Json ratio_result(const Ratio& r) {
  return Json{{"numerator", r.num().get_str()}, {"denominator", r.den().get_str()}, {"decimal", r.decimal()}};
}

FamilySpec family_spec(const Options& o) {
  FamilySpec spec;
  spec.family = parse_family(o.family);
  spec.n = o.n;
  spec.k = o.k;
  spec.validate();
  return spec;
}

Json family_json(const FamilySpec& spec) {
  Json j{{"family", family_name(spec.family)}, {"n", spec.n}};
  if (spec.family == Family::bent_2tree) j["k"] = spec.k;
  return j;
}

Loaded load(const Options& o, std::istream& in) {
  const bool has_file = !o.file.empty();
  const bool has_family = !o.family.empty();
  if (has_file == has_family) throw UsageError("give exactly one input: FILE or --family");
  if (has_file) {
    Loaded l{o.file == "-" ? parse_edge_list(in) : read_edge_list(o.file), Json{{"file", o.file}}, std::nullopt};
    return l;
  }
  const FamilySpec spec = family_spec(o);
  return {generate(spec), family_json(spec), spec};
}

void require_vertex(const MultiGraph& g, Vertex x, const char* flag) {
  if (!g.has_vertex(x))
    throw InvalidArgument(std::string(flag) + " " + std::to_string(x) + " is not a vertex (1.." +
                          std::to_string(g.vertex_count()) + ")");
}

const FamilySpec& require_spec(const Loaded& l) {
  if (!l.spec) throw UsageError("--method closed-form needs a --family input");
  return *l.spec;
}

bool is_corner_pair(Vertex a, Vertex b) { return a != b && a <= 3 && b <= 3; }

Count trees_closed(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::straight_2tree:
    case Family::bent_2tree:
      return straight_trees(spec.n);
    case Family::sierpinski:
      return sierpinski_trees(spec.n);
  }
  throw UsageError("unsupported family");
}

Count forests_closed(const FamilySpec& spec, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  switch (spec.family) {
    case Family::straight_2tree:
      return straight_forest_closed(a, b, spec.n);
    case Family::bent_2tree:
      return bent_forest(a, b, spec.n, spec.k);
    case Family::sierpinski:
      if (!is_corner_pair(a, b)) throw UsageError("sierpinski closed forms cover corner pairs (1,2,3) only");
      return sierpinski_corner_forests(spec.n);
  }
  throw UsageError("unsupported family");
}

Ratio resistance_closed(const FamilySpec& spec, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  switch (spec.family) {
    case Family::straight_2tree:
      return straight_resistance_closed(a, b - a, spec.n);
    case Family::bent_2tree:
      return Ratio(bent_forest(a, b, spec.n, spec.k), straight_trees(spec.n));
    case Family::sierpinski:
      if (!is_corner_pair(a, b)) throw UsageError("sierpinski closed forms cover corner pairs (1,2,3) only");
      return sierpinski_corner_resistance(spec.n);
  }
  throw UsageError("unsupported family");
}

Count count_with(const Loaded& l, const Query& q, Method m) {
  q.validate(l.graph);
  switch (m) {
    case Method::det:
      return count_det(l.graph, q);
    case Method::reduce:
      if (!connected(l.graph)) return count_det(l.graph, q);
      return solve(l.graph, q, SolveOptions{.record_trace = false}).value;
    case Method::enumerate:
      return enumerate(l.graph, q);
    case Method::closed_form:
      if (q.kind == Query::Kind::trees) return trees_closed(require_spec(l));
      if (q.kind == Query::Kind::two_forest) return forests_closed(require_spec(l), q.u, q.v);
      throw UsageError("no closed form for pair-set queries");
    case Method::pinv:
      throw UsageError("--method pinv applies to resistance only");
  }
  throw UsageError("unknown method");
}

struct Emitter {
  const Options& o;
  std::ostream& out;

  void operator()(const std::string& op, const Json& input, const std::string& method, const Json& result,
                  const std::string& text) const {
    if (o.format == "json") {
      Json j{{"op", op}, {"input", input}, {"method", method}, {"result", result}};
      out << j.dump(2) << '\n';
    } else {
      out << text << '\n';
    }
  }
};

int cmd_trees(const Options& o, std::istream& in, const Emitter& emit) {
  const Loaded l = load(o, in);
  const Count c = count_with(l, Query::trees(), parse_method(o.method));
  emit("trees", l.input, o.method, integer_result(c), c.get_str());
  return kOk;
}

int cmd_forests(const Options& o, std::istream& in, const Emitter& emit) {
  const Loaded l = load(o, in);
  require_vertex(l.graph, o.u, "-u");
  require_vertex(l.graph, o.v, "-v");
  Json input = l.input;
  input["u"] = o.u;
  input["v"] = o.v;
  Query q = Query::forests(o.u, o.v);
  if (o.w != 0) {
    require_vertex(l.graph, o.w, "-w");
    input["w"] = o.w;
    q = Query::forests_pair(o.u, o.v, o.w);
  }
  const Count c = count_with(l, q, parse_method(o.method));
  emit("forests", input, o.method, integer_result(c), c.get_str());
  return kOk;
}

int cmd_resistance(const Options& o, std::istream& in, const Emitter& emit) {
  const Loaded l = load(o, in);
  require_vertex(l.graph, o.u, "-u");
  require_vertex(l.graph, o.v, "-v");
  if (o.u == o.v) throw InvalidArgument("-u and -v must differ");
  Json input = l.input;
  input["u"] = o.u;
  input["v"] = o.v;
  const Method m = parse_method(o.method);

  if (m == Method::pinv) {
    const auto r = compute_resistance(l.graph, o.u, o.v, ResistanceMethod::pinv_float);
    emit("resistance", input, o.method, Json{{"decimal", r.float_value}}, r.float_value);
    return kOk;
  }
  if (m == Method::closed_form) {
    const Ratio r = resistance_closed(require_spec(l), o.u, o.v);
    emit("resistance", input, o.method, ratio_result(r), r.str() + " = " + r.decimal());
    return kOk;
  }

  Count forests, trees;
  if (m == Method::reduce && connected(l.graph)) {
    ReductionEngine engine(SolveOptions{.record_trace = false});
    forests = engine.solve(l.graph, Query::forests(o.u, o.v)).value;
    trees = engine.solve(l.graph, Query::trees()).value;
  } else {
    forests = count_with(l, Query::forests(o.u, o.v), m == Method::reduce ? Method::det : m);
    trees = count_with(l, Query::trees(), m == Method::reduce ? Method::det : m);
  }
  if (trees == 0) throw InvalidArgument("graph is disconnected; resistance is undefined");
  const Ratio r(forests, trees);
  emit("resistance", input, o.method, ratio_result(r),
       forests.get_str() + "/" + trees.get_str() + " = " + render_decimal(forests, trees));
  return kOk;
}

SeparatorOrder parse_order(const std::string& s) {
  if (s == "balanced") return SeparatorOrder::balanced;
  if (s == "lexicographic") return SeparatorOrder::lexicographic;
  throw UsageError("unknown order '" + s + "'");
}

int cmd_decompose(const Options& o, std::istream& in, const Emitter& emit) {
  const Loaded l = load(o, in);
  Json input = l.input;
  Query q = Query::trees();
  if (o.u != 0 || o.v != 0) {
    require_vertex(l.graph, o.u, "-u");
    require_vertex(l.graph, o.v, "-v");
    q = Query::forests(o.u, o.v);
    input["u"] = o.u;
    input["v"] = o.v;
  }
  input["threshold"] = o.threshold;
  input["order"] = o.order;
  if (!connected(l.graph)) throw InvalidArgument("decompose needs a connected graph");

  const auto cuts = find_cut_vertices(l.graph);
  const auto seps = find_2separators(l.graph);
  SolveOptions opts;
  opts.base_threshold = o.threshold;
  opts.order = parse_order(o.order);
  const SolveResult solved = solve(l.graph, q, opts);

  Json cut_json = Json::array();
  for (Vertex c : cuts) cut_json.push_back(c);
  Json sep_json = Json::array();
  for (const auto& [a, b] : seps) sep_json.push_back(Json::array({a, b}));
  Json result{{"cut_vertices", cut_json},
              {"separators", sep_json},
              {"query", q.str()},
              {"value", integer_result(solved.value)},
              {"stats",
               {{"calls", solved.stats.calls},
                {"determinant_leaves", solved.stats.determinant_leaves},
                {"memo_hits", solved.stats.memo_hits},
                {"cut_vertex_steps", solved.stats.cut_vertex_steps},
                {"separation_steps", solved.stats.separation_steps}}},
              {"trace", solved.trace.to_json()}};

  std::ostringstream text;
  text << "cut vertices:";
  if (cuts.empty()) text << " none";
  for (Vertex c : cuts) text << ' ' << c;
  text << "\n2-separators:";
  if (seps.empty()) text << " none";
  for (const auto& [a, b] : seps) text << " {" << a << ',' << b << '}';
  text << '\n' << q.str() << " = " << solved.value.get_str() << '\n';
  text << "trace:\n" << solved.trace.to_text();
  std::string t = text.str();
  while (!t.empty() && t.back() == '\n') t.pop_back();
  emit("decompose", input, "reduce", result, t);
  return kOk;
}

int cmd_gen(const Options& o, const Emitter& emit, std::ostream& out) {
  const FamilySpec spec = family_spec(o);
  const MultiGraph g = generate(spec);
  const std::string text = serialize_edge_list(g);
  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) throw InvalidArgument("cannot write '" + o.output + "'");
    file << text;
    if (!file) throw InvalidArgument("write to '" + o.output + "' failed");
  }
  if (o.format == "json") {
    Json result{{"vertices", g.vertex_count()}, {"pairs", g.pair_count()}, {"edge_list", text}};
    if (!o.output.empty()) result["file"] = o.output;
    emit("gen", family_json(spec), "generator", result, "");
  } else if (o.output.empty()) {
    out << text;
  }
  return kOk;
}

int cmd_closed_form(const Options& o, const Emitter& emit) {
  FamilySpec spec;
  spec.family = parse_family(o.family);
  spec.n = o.n;
  spec.k = o.k;
  if (spec.family != Family::sierpinski) spec.validate();
  Json input = family_json(spec);
  input["query"] = o.query;
  const auto& q = o.query;
  auto pair_input = [&] {
    if (o.u == 0 || o.v == 0) throw UsageError("query '" + q + "' needs -u and -v");
    input["u"] = o.u;
    input["v"] = o.v;
    return std::pair<std::size_t, std::size_t>{std::min(o.u, o.v), std::max(o.u, o.v)};
  };
  auto integer = [&](const Count& c) { emit("closed-form", input, "closed-form", integer_result(c), c.get_str()); };
  auto ratio = [&](const Ratio& r) { emit("closed-form", input, "closed-form", ratio_result(r), r.str()); };

  if (spec.family == Family::sierpinski) {
    if (q == "trees") integer(sierpinski_trees(spec.n));
    else if (q == "corner-resistance") ratio(sierpinski_corner_resistance(spec.n));
    else if (q == "corner-forests") integer(sierpinski_corner_forests(spec.n));
    else throw UsageError("sierpinski queries: trees, corner-resistance, corner-forests");
    return kOk;
  }
  if (q == "trees") {
    integer(straight_trees(spec.n));
  } else if (q == "forests") {
    const auto [a, b] = pair_input();
    integer(spec.family == Family::straight_2tree ? straight_forest_closed(a, b, spec.n)
                                                  : bent_forest(a, b, spec.n, spec.k));
  } else if (q == "forests-sum" && spec.family == Family::straight_2tree) {
    const auto [a, b] = pair_input();
    integer(straight_forest_sum(a, b, spec.n));
  } else if (q == "resistance") {
    const auto [a, b] = pair_input();
    ratio(resistance_closed(spec, static_cast<Vertex>(a), static_cast<Vertex>(b)));
  } else if (q == "end-resistance" && spec.family == Family::bent_2tree) {
    ratio(bent_end_resistance(spec.n, spec.k));
  } else {
    throw UsageError(spec.family == Family::straight_2tree
                         ? "straight queries: trees, forests, forests-sum, resistance"
                         : "bent queries: trees, forests, resistance, end-resistance");
  }
  return kOk;
}

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  void add(bool ok) { ++(ok ? pass : fail); }
  Json json() const { return Json{{"pass", pass}, {"fail", fail}}; }
};

int cmd_verify(const Options& o, const Emitter& emit) {
  if (o.max_n < 1 || o.max_n > 6) throw UsageError("--max-n must be between 1 and 6");
  std::vector<MultiGraph> corpus = simple_corpus(o.max_n);
  const std::size_t simple = corpus.size();
  const auto doubled = multiplicity2_corpus(std::min<std::size_t>(o.max_n, 5));
  corpus.insert(corpus.end(), doubled.begin(), doubled.end());
  const auto random = random_corpus(o.random_count, o.seed);
  corpus.insert(corpus.end(), random.begin(), random.end());

  const std::vector<SolveOptions> strategies{
      {.base_threshold = 2, .order = SeparatorOrder::lexicographic, .record_trace = false},
      {.base_threshold = 3, .order = SeparatorOrder::balanced, .record_trace = false}};

  Tally oracle, reduction;
  for (const MultiGraph& g : corpus) {
    std::vector<Query> queries{Query::trees()};
    for (Vertex a = 1; a <= g.vertex_count(); ++a)
      for (Vertex b = a + 1; b <= g.vertex_count(); ++b) queries.push_back(Query::forests(a, b));
    bool oracle_ok = true, reduction_ok = true;
    for (const Query& q : queries) {
      const Count det = count_det(g, q);
      oracle_ok = oracle_ok && enumerate(g, q) == det;
      for (const auto& s : strategies) reduction_ok = reduction_ok && solve(g, q, s).value == det;
    }
    oracle.add(oracle_ok);
    reduction.add(reduction_ok);
  }

  Json input{{"max_n", o.max_n}, {"random", o.random_count}, {"seed", o.seed}};
  Json result{{"graphs", corpus.size()},
              {"simple", simple},
              {"multiplicity2", doubled.size()},
              {"random", random.size()},
              {"oracle_vs_determinant", oracle.json()},
              {"reduction_vs_determinant", reduction.json()}};
  std::ostringstream text;
  text << "corpus: " << corpus.size() << " graphs (" << simple << " simple, " << doubled.size()
       << " with doubled edges, " << random.size() << " random)\n"
       << "oracle vs determinant: " << oracle.pass << " pass, " << oracle.fail << " fail\n"
       << "reduction vs determinant: " << reduction.pass << " pass, " << reduction.fail << " fail";
  emit("verify", input, "enumerate,det,reduce", result, text.str());
  return oracle.fail + reduction.fail == 0 ? kOk : kConsistency;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  auto num = [&](const std::string& part) -> std::size_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--n-range must look like A..B, got '" + s + "'");
    return std::stoul(part);
  };
  if (dots == std::string::npos) throw UsageError("--n-range must look like A..B, got '" + s + "'");
  const std::size_t a = num(s.substr(0, dots)), b = num(s.substr(dots + 2));
  if (a > b) throw UsageError("--n-range is empty");
  return {a, b};
}

int cmd_bench(const Options& o, const Emitter& emit) {
  using Clock = std::chrono::steady_clock;
  const auto [lo, hi] = parse_range(o.n_range);
  const std::string query = o.query.empty() ? "forests" : o.query;
  if (query != "trees" && query != "forests") throw UsageError("--query must be trees or forests");

  Json rows = Json::array();
  std::ostringstream text;
  const char sep = o.csv ? ',' : ' ';
  text << "n" << sep << "vertices" << sep << "det_ms" << sep << "det_mults" << sep << "reduce_ms" << sep
       << "reduce_mults" << sep << "equal";
  bool all_equal = true;
  for (std::size_t n = lo; n <= hi; ++n) {
    Options member = o;
    member.n = n;
    const FamilySpec spec = family_spec(member);
    const MultiGraph g = generate(spec);
    const Vertex far = spec.family == Family::sierpinski ? 2 : static_cast<Vertex>(g.vertex_count());
    const Query q = query == "trees" ? Query::trees() : Query::forests(1, far);

    stats::reset_bigint_multiplications();
    auto t0 = Clock::now();
    const Count det = count_det(g, q);
    const double det_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    const auto det_mults = stats::bigint_multiplications();

    stats::reset_bigint_multiplications();
    SolveOptions opts;
    opts.base_threshold = o.threshold;
    opts.order = parse_order(o.order);
    opts.record_trace = false;
    t0 = Clock::now();
    const Count red = solve(g, q, opts).value;
    const double red_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    const auto red_mults = stats::bigint_multiplications();

    const bool equal = det == red;
    all_equal = all_equal && equal;
    rows.push_back(Json{{"n", n},
                        {"vertices", g.vertex_count()},
                        {"query", q.str()},
                        {"det_ms", det_ms},
                        {"det_mults", det_mults},
                        {"reduce_ms", red_ms},
                        {"reduce_mults", red_mults},
                        {"equal", equal},
                        {"value", det.get_str()}});
    char det_buf[32], red_buf[32];
    std::snprintf(det_buf, sizeof det_buf, "%.3f", det_ms);
    std::snprintf(red_buf, sizeof red_buf, "%.3f", red_ms);
    text << '\n'
         << n << sep << g.vertex_count() << sep << det_buf << sep << det_mults << sep << red_buf << sep << red_mults
         << sep << (equal ? "yes" : "no");
  }
  Json input{{"family", family_name(parse_family(o.family))}, {"n_range", o.n_range}, {"query", query}};
  if (parse_family(o.family) == Family::bent_2tree) input["k"] = o.k;
  emit("bench", input, "det,reduce", Json{{"rows", rows}}, text.str());
  return all_equal ? kOk : kConsistency;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("file", o.file, "Edge-list file, or - for standard input");
  cmd->add_option("--family", o.family, "Generate the input: straight, bent or sierpinski");
  cmd->add_option("--n", o.n, "Family size parameter");
  cmd->add_option("--k", o.k, "Bend vertex of the bent family");
}

void add_method(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "det, reduce, enumerate, pinv or closed-form")
      ->check(CLI::IsMember(kMethods));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact spanning tree, 2-forest and resistance counts via 2-separations", "twosep"};
  app.require_subcommand(1);

  auto* trees = app.add_subcommand("trees", "Count spanning trees");
  add_source(trees, o);
  add_method(trees, o);
  add_format(trees, o);

  auto* forests = app.add_subcommand("forests", "Count spanning 2-forests separating u and v");
  add_source(forests, o);
  add_method(forests, o);
  add_format(forests, o);
  forests->add_option("-u", o.u, "First vertex")->required();
  forests->add_option("-v", o.v, "Second vertex")->required();
  forests->add_option("-w", o.w, "Count F(u,{v,w}) instead");

  auto* resistance = app.add_subcommand("resistance", "Effective resistance between u and v");
  add_source(resistance, o);
  add_method(resistance, o);
  add_format(resistance, o);
  resistance->add_option("-u", o.u, "First vertex")->required();
  resistance->add_option("-v", o.v, "Second vertex")->required();

  auto* decompose = app.add_subcommand("decompose", "List cut vertices and 2-separators, show the reduction");
  add_source(decompose, o);
  add_format(decompose, o);
  decompose->add_option("-u", o.u, "Reduce F(u,v) instead of T");
  decompose->add_option("-v", o.v, "Reduce F(u,v) instead of T");
  decompose->add_option("--threshold", o.threshold, "Determinant below this many vertices");
  decompose->add_option("--order", o.order, "Separator choice")
      ->check(CLI::IsMember({"balanced", "lexicographic"}));

  auto* gen = app.add_subcommand("gen", "Write a family member as an edge list");
  gen->add_option("--family", o.family, "straight, bent or sierpinski")->required();
  gen->add_option("--n", o.n, "Size parameter (vertices, or Sierpinski stage)")->required();
  gen->add_option("--k", o.k, "Bend vertex of the bent family");
  gen->add_option("-o,--output", o.output, "Output file");
  add_format(gen, o);

  auto* closed = app.add_subcommand("closed-form", "Evaluate a family closed form");
  closed->add_option("--family", o.family, "straight, bent or sierpinski")->required();
  closed->add_option("--query", o.query,
                     "trees, forests, forests-sum, resistance, end-resistance, corner-resistance, corner-forests")
      ->required();
  closed->add_option("--n", o.n, "Size parameter")->required();
  closed->add_option("--k", o.k, "Bend vertex of the bent family");
  closed->add_option("-u", o.u, "First vertex");
  closed->add_option("-v", o.v, "Second vertex");
  add_format(closed, o);

  auto* verify = app.add_subcommand("verify", "Oracle vs determinant vs reduction on the test corpus");
  verify->add_option("--max-n", o.max_n, "Largest exhaustive graph order (1..6)");
  verify->add_option("--random", o.random_count, "Number of random graphs");
  verify->add_option("--seed", o.seed, "Random seed");
  add_format(verify, o);

  auto* bench = app.add_subcommand("bench", "Time determinant vs reduction over a family");
  bench->add_option("--family", o.family, "straight, bent or sierpinski")->required();
  bench->add_option("--n-range", o.n_range, "A..B")->required();
  bench->add_option("--k", o.k, "Bend vertex of the bent family");
  bench->add_option("--query", o.query, "trees or forests (default forests between the end vertices)");
  bench->add_option("--threshold", o.threshold, "Determinant below this many vertices");
  bench->add_option("--order", o.order, "Separator choice")->check(CLI::IsMember({"balanced", "lexicographic"}));
  bench->add_flag("--csv", o.csv, "Comma-separated table");
  add_format(bench, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "twosep: " << e.what() << '\n';
    return kUsage;
  }

  const Emitter emit{o, out};
  try {
    if (*trees) return cmd_trees(o, in, emit);
    if (*forests) return cmd_forests(o, in, emit);
    if (*resistance) return cmd_resistance(o, in, emit);
    if (*decompose) return cmd_decompose(o, in, emit);
    if (*gen) return cmd_gen(o, emit, out);
    if (*closed) return cmd_closed_form(o, emit);
    if (*verify) return cmd_verify(o, emit);
    if (*bench) return cmd_bench(o, emit);
  } catch (const ParseError& e) {
    err << "twosep: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ConsistencyError& e) {
    err << "twosep: consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const UsageError& e) {
    err << "twosep: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "twosep: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "twosep: internal error: " << e.what() << '\n';
    return kConsistency;
  }
  return kUsage;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace twosep::cli
