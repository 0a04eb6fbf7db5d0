// mwr: generate instances, run reductions and solvers, verify chains, bench.
#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>

#include "mwr/array/intermediate.hpp"
#include "mwr/array/subarray.hpp"
#include "mwr/geometry/geometry.hpp"
#include "mwr/graph/solvers.hpp"
#include "mwr/harness/bench.hpp"
#include "mwr/harness/generate.hpp"
#include "mwr/harness/json_io.hpp"
#include "mwr/harness/verify.hpp"
#include "mwr/reductions/array_reductions.hpp"
#include "mwr/reductions/depth.hpp"
#include "mwr/reductions/graph_reductions.hpp"
#include "mwr/reductions/rectangle.hpp"
#include "mwr/reductions/subarray2d.hpp"

using namespace mwr;
using harness::Json;

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::int64_t v = 0;
    const char* b = text.data() + pos;
    const char* e = text.data() + comma;
    auto [end, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || end != e) throw UsageError("bad integer list '" + text + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  for (auto v : parse_list(text)) {
    if (v < 0) throw UsageError("negative value in '" + text + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

reductions::ReductionCertificate identity_cert(std::string id) {
  reductions::ReductionCertificate c;
  c.reduction_id = std::move(id);
  return c;
}

struct GenArgs {
  std::string kind;
  std::int64_t n = 0;
  std::size_t d = 2;
  std::uint64_t seed = 1;
  std::int64_t wmax = 10;
  std::string parts;
  std::int64_t span = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  Json j;
  if (a.kind == "graph") {
    std::optional<harness::PartSpec> parts;
    std::int64_t n = a.n;
    if (!a.parts.empty()) {
      parts = harness::parse_parts(a.parts);
      if (n == 0) n = static_cast<std::int64_t>(parts->count * parts->size);
    }
    if (n < 1) throw UsageError("--n must be positive");
    j = harness::to_json(harness::gen_graph(static_cast<std::size_t>(n), a.seed, a.wmax, parts));
  } else {
    if (a.n < 1) throw UsageError("--n must be positive");
    if (a.d < 1) throw UsageError("--d must be positive");
    const std::int64_t span = a.span > 0 ? a.span : a.n;
    if (a.kind == "array")
      j = harness::to_json(harness::gen_array(a.d, a.n, a.seed, a.wmax));
    else if (a.kind == "points")
      j = harness::to_json(harness::gen_points(a.d, static_cast<std::size_t>(a.n), a.seed, a.wmax, span));
    else if (a.kind == "boxes")
      j = harness::to_json(harness::gen_boxes(a.d, static_cast<std::size_t>(a.n), a.seed, a.wmax, span));
    else
      throw UsageError("gen kind must be graph, array, points or boxes");
  }
  write_json(j, a.out);
  return 0;
}

struct ReduceArgs {
  std::string id;
  std::string in, out, cert;
  std::string mode = "tight";
  std::string pad = "sentinel";
  std::size_t d = 0, k = 0, parts = 0;
  std::string same_vertex = "penalty";
  std::string bonus = "bound";
};

std::size_t need(std::size_t v, const char* flag) {
  if (v == 0) throw UsageError(std::string("this reduction needs ") + flag);
  return v;
}

template <class T>
std::pair<Json, Json> reduce_central(const ReduceArgs& a, const Json& in) {
  const auto src = harness::central_from_json<T>(in);
  if (a.id == "sign_flip_by_orthant")
    return {harness::to_json(reductions::sign_flip_by_orthant(src)), harness::to_json(identity_cert(a.id))};
  if (a.id == "build_difference_array")
    return {harness::to_json(reductions::build_difference_array(src)), harness::to_json(identity_cert(a.id))};
  BigInt bonus;
  if (a.bonus == "bound")
    bonus = reductions::orthant_bonus_bound(src);
  else if (a.bonus == "paper_subarray")
    bonus = reductions::paper_subarray_bonus(src);
  else if (a.bonus == "paper_square")
    bonus = reductions::paper_square_bonus(src);
  else
    bonus = harness::big_from_json(Json(a.bonus));
  auto r = reductions::add_orthant_bonus(src, bonus);
  return {harness::to_json(r.target), harness::to_json(r.cert)};
}

int run_reduce(const ReduceArgs& a) {
  const Json in = read_json(a.in);
  const auto mode = reductions::mode_from_string(a.mode);
  Json target, cert;
  auto emit = [&](const auto& r) {
    target = harness::to_json(r.target);
    cert = harness::to_json(r.cert);
  };
  const std::string& id = a.id;
  if (id == "clique_to_kpartite") {
    if (a.same_vertex != "penalty" && a.same_vertex != "zero") throw UsageError("--same-vertex must be penalty or zero");
    emit(reductions::clique_to_kpartite(harness::graph_from_json(in), need(a.parts, "--parts"),
                                        a.same_vertex == "zero" ? reductions::SameVertex::kZero
                                                                : reductions::SameVertex::kPenalty));
  } else if (id == "clique_to_subgraph_instance") {
    emit(reductions::clique_to_subgraph_instance(harness::graph_from_json(in), need(a.d, "--d"), mode));
  } else if (id == "kpartite_clique_to_rectangle") {
    emit(reductions::kpartite_clique_to_rectangle(harness::graph_from_json(in), need(a.k, "--k"), need(a.d, "--d")));
  } else if (id == "triangle_to_4comb") {
    emit(reductions::triangle_to_4comb(harness::graph_from_json(in), mode));
  } else if (id == "fourcomb_to_subarray") {
    emit(reductions::fourcomb_to_subarray(harness::dense_from_json<Int>(in), reductions::pad_from_string(a.pad)));
  } else if (id == "subgraph_to_central_sum") {
    if (mode == reductions::Mode::kPaper)
      emit(reductions::subgraph_to_central_sum<BigInt>(harness::graph_from_json(in), need(a.d, "--d"), mode));
    else
      emit(reductions::subgraph_to_central_sum<Int>(harness::graph_from_json(in), need(a.d, "--d"), mode));
  } else if (id == "clique_to_central_max_sum") {
    emit(reductions::clique_to_central_max_sum<BigInt>(harness::graph_from_json(in), need(a.d, "--d"), mode));
  } else if (id == "clique_to_weighted_depth") {
    emit(reductions::clique_to_weighted_depth(harness::graph_from_json(in), need(a.d, "--d")));
  } else if (id == "sign_flip_by_orthant" || id == "add_orthant_bonus" || id == "build_difference_array") {
    if (id == "build_difference_array" && !in.contains("halfwidth")) {
      const auto dense = harness::dense_from_json<BigInt>(in);
      target = harness::to_json(reductions::build_difference_array(dense));
      cert = harness::to_json(identity_cert(id));
    } else {
      std::tie(target, cert) = reduce_central<BigInt>(a, in);
    }
  } else {
    throw UsageError("unknown reduction '" + id + "'");
  }
  write_json(target, a.out);
  if (!a.cert.empty()) write_json(cert, a.cert);
  return 0;
}

struct SolveArgs {
  std::string problem;
  std::string in;
  std::size_t k = 0;
  bool strict = false;
  bool brute = false;
};

template <class T>
Json solve_array(const SolveArgs& a, const Json& in) {
  const std::string& p = a.problem;
  if (p == "subarray") {
    const auto arr = harness::dense_from_json<T>(in);
    return harness::solution_json(a.brute ? array::max_subarray_bruteforce(arr) : array::max_subarray(arr));
  }
  if (p == "square") return harness::solution_json(array::max_square_subarray(harness::dense_from_json<T>(in)));
  const auto kind = array::combination_from_string(p);
  if (kind == array::Combination::kMC && !in.contains("halfwidth"))
    return harness::solution_json(array::solve_intermediate(kind, harness::dense_from_json<T>(in)));
  return harness::solution_json(array::solve_intermediate(kind, harness::central_from_json<T>(in)));
}

int run_solve(const SolveArgs& a) {
  const Json in = read_json(a.in);
  const std::string& p = a.problem;
  Json out;
  if (p == "clique") {
    out = harness::solution_json(graph::max_weight_clique(harness::graph_from_json(in), need(a.k, "--k")));
  } else if (p == "triangle") {
    const auto r = graph::max_weight_triangle(harness::graph_from_json(in));
    out = harness::solution_json(r.max);
    out["has_negative"] = r.has_negative;
    out["has_positive"] = r.has_positive;
  } else if (p == "subgraph") {
    out = harness::solution_json(graph::max_weight_2k_subgraph(harness::graph_from_json(in)));
  } else if (p == "fourcomb") {
    out = harness::solution_json(array::max_4combination(harness::dense_from_json<Int>(in), a.strict));
  } else if (p == "rectangle") {
    out = harness::solution_json(geometry::max_weight_rectangle(harness::points_from_json(in)));
  } else if (p == "depth") {
    out = harness::solution_json(geometry::weighted_depth(harness::boxes_from_json(in)));
  } else if (p == "subarray" || p == "square" || p == "cmrs" || p == "cmrc" || p == "mrc" || p == "cms" || p == "cmc" ||
             p == "mc") {
    out = harness::fits_int64(in) ? solve_array<Int>(a, in) : solve_array<BigInt>(a, in);
  } else {
    throw UsageError("unknown problem '" + p + "'");
  }
  write_json(out, "");
  return 0;
}

struct VerifyArgs {
  std::string chain;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string d, k;
  std::int64_t n = 0, n_min = 0, n_max = 0;
  std::int64_t wmax = 10;
  std::string mode = "tight";
  std::string pad = "sentinel";
  bool inject_fault = false;
  std::optional<std::uint64_t> replay;
  bool detail = false;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  harness::ChainParams p;
  p.d = parse_sizes(a.d);
  p.k = parse_sizes(a.k);
  p.n_min = a.n != 0 ? a.n : a.n_min;
  p.n_max = a.n != 0 ? a.n : a.n_max;
  p.wmax = a.wmax;
  p.mode = reductions::mode_from_string(a.mode);
  p.pad = reductions::pad_from_string(a.pad);
  p.inject_fault = a.inject_fault;
  p.replay = a.replay;
  const auto report = harness::verify_chain(harness::chain_from_string(a.chain), p, a.trials, a.seed);
  write_json(harness::to_json(report, a.detail), a.out);
  return report.ok() ? 0 : 1;
}

struct BenchArgs {
  std::string op;
  std::string sizes;
  std::size_t reps = 5;
  double min_time = 0.02;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  const auto report = harness::bench(a.op, parse_list(a.sizes), a.reps, a.min_time);
  write_json(harness::to_json(report), a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductions from weighted clique problems to rectangle, subarray and depth problems"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a random instance");
  g->add_option("kind", gen.kind, "graph | array | points | boxes")->required();
  g->add_option("--n", gen.n, "Vertices, array side, or point/box count");
  g->add_option("--d", gen.d, "Dimension (array, points, boxes)");
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--wmax", gen.wmax, "Weights are uniform on [-wmax, wmax]");
  g->add_option("--parts", gen.parts, "COUNT,SIZE partition of a graph");
  g->add_option("--span", gen.span, "Coordinate range of points and boxes (default n)");
  g->add_option("-o,--out", gen.out, "Output file (default stdout)");

  ReduceArgs red;
  auto* r = app.add_subcommand("reduce", "Apply one reduction and write its certificate");
  r->add_option("reduction_id", red.id, "Reduction")->required();
  r->add_option("-i,--in", red.in, "Source instance")->required();
  r->add_option("-o,--out", red.out, "Target instance (default stdout)");
  r->add_option("--cert", red.cert, "Certificate output file");
  r->add_option("--mode", red.mode, "tight | paper");
  r->add_option("--pad", red.pad, "sentinel | zero");
  r->add_option("--d", red.d, "Dimension");
  r->add_option("--k", red.k, "Clique part size per axis");
  r->add_option("--parts", red.parts, "Part count (clique_to_kpartite)");
  r->add_option("--same-vertex", red.same_vertex, "penalty | zero");
  r->add_option("--bonus", red.bonus, "bound | paper_subarray | paper_square | <integer>");

  SolveArgs sol;
  auto* s = app.add_subcommand("solve", "Run an oracle and print {value, witness}");
  s->add_option("problem", sol.problem,
                "clique | triangle | subgraph | subarray | square | fourcomb | cmrs | cmrc | mrc | cms | cmc | mc | "
                "rectangle | depth")
      ->required();
  s->add_option("-i,--in", sol.in, "Instance")->required();
  s->add_option("--k", sol.k, "Clique size");
  s->add_flag("--strict", sol.strict, "Strict 4-combination (i < i', j < j')");
  s->add_flag("--brute", sol.brute, "Brute-force subarray enumeration");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a reduction chain against the oracles");
  v->add_option("--chain", ver.chain, "rectangle | subarray2d | subarray_hd | square | depth")->required();
  v->add_option("--trials", ver.trials, "Trial count");
  v->add_option("--seed", ver.seed, "Run seed");
  v->add_option("--d", ver.d, "Dimensions to sample, e.g. 2,3");
  v->add_option("--k", ver.k, "Rectangle k values to sample");
  v->add_option("--n", ver.n, "Fixed n");
  v->add_option("--n-min", ver.n_min, "Smallest n");
  v->add_option("--n-max", ver.n_max, "Largest n");
  v->add_option("--wmax", ver.wmax, "Weight bound");
  v->add_option("--mode", ver.mode, "tight | paper");
  v->add_option("--pad", ver.pad, "sentinel | zero (subarray2d)");
  v->add_flag("--inject-fault", ver.inject_fault, "Corrupt one target cell of trial 0");
  v->add_option("--replay", ver.replay, "Rerun a single trial from its recorded seed");
  v->add_flag("--detail", ver.detail, "Include per-trial step results");
  v->add_option("-o,--out", ver.out, "Report file (default stdout)");

  BenchArgs ben;
  auto* b = app.add_subcommand("bench", "Fit the runtime exponent of a solver");
  b->add_option("--op", ben.op, "subarray2d | kadane | square2d")->required();
  b->add_option("--sizes", ben.sizes, "Comma-separated size ladder")->required();
  b->add_option("--reps", ben.reps, "Repetitions per size");
  b->add_option("--min-time", ben.min_time, "Seconds per repetition");
  b->add_option("-o,--out", ben.out, "Report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*g) return run_gen(gen);
    if (*r) return run_reduce(red);
    if (*s) return run_solve(sol);
    if (*v) return run_verify(ver);
    if (*b) return run_bench(ben);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
