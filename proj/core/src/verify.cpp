#include "mwr/harness/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "mwr/array/intermediate.hpp"
#include "mwr/array/subarray.hpp"
#include "mwr/geometry/geometry.hpp"
#include "mwr/graph/solvers.hpp"
#include "mwr/harness/generate.hpp"
#include "mwr/harness/json_io.hpp"
#include "mwr/harness/rng.hpp"
#include "mwr/reductions/array_reductions.hpp"
#include "mwr/reductions/depth.hpp"
#include "mwr/reductions/graph_reductions.hpp"
#include "mwr/reductions/rectangle.hpp"

namespace mwr::harness {

using array::Combination;
using graph::EdgeWeightedGraph;
using reductions::Mode;
using reductions::Pad;

std::string_view to_string(Chain c) {
  switch (c) {
    case Chain::kRectangle: return "rectangle";
    case Chain::kSubarray2d: return "subarray2d";
    case Chain::kSubarrayHd: return "subarray_hd";
    case Chain::kSquare: return "square";
    case Chain::kDepth: return "depth";
  }
  return "?";
}

Chain chain_from_string(std::string_view s) {
  for (auto c : {Chain::kRectangle, Chain::kSubarray2d, Chain::kSubarrayHd, Chain::kSquare, Chain::kDepth})
    if (to_string(c) == s) return c;
  throw UsageError("unknown chain '" + std::string(s) + "' (rectangle, subarray2d, subarray_hd, square, depth)");
}

bool TrialResult::pass() const {
  return std::all_of(steps.begin(), steps.end(), [](const StepResult& s) { return s.holds || !s.asserted; });
}

namespace {

struct Limits {
  std::vector<std::size_t> d_default, d_allowed;
  std::vector<std::size_t> k_default, k_allowed;
  std::int64_t n_default_lo, n_default_hi;
};

Limits limits(Chain c) {
  switch (c) {
    case Chain::kRectangle: return {{2}, {2}, {2, 3}, {1, 2, 3}, 2, 4};
    case Chain::kSubarray2d: return {{}, {}, {}, {}, 5, 30};
    case Chain::kSubarrayHd: return {{2, 3}, {2, 3}, {}, {}, 2, 5};
    case Chain::kSquare: return {{3}, {2, 3}, {}, {}, 2, 4};
    case Chain::kDepth: return {{2, 3, 4}, {2, 3, 4}, {}, {}, 2, 8};
  }
  return {};
}

// Supported part size (or vertex count) range for one dimension.
std::pair<std::int64_t, std::int64_t> n_range(Chain c, std::size_t d) {
  switch (c) {
    case Chain::kRectangle: return {2, 5};
    case Chain::kSubarray2d: return {3, 40};
    case Chain::kSubarrayHd: return {2, d == 2 ? 6 : 3};
    case Chain::kSquare: return {2, d == 2 ? 6 : 4};
    case Chain::kDepth: return {static_cast<std::int64_t>(d), 8};
  }
  return {0, 0};
}

std::string list_text(const std::vector<std::size_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

// Sampled n range for dimension d.
std::pair<std::int64_t, std::int64_t> trial_n_range(Chain c, const ChainParams& p, std::size_t d) {
  auto [lo, hi] = n_range(c, d);
  return {std::max(lo, p.n_min), std::min(hi, p.n_max)};
}

}  // namespace

ChainParams resolve_params(Chain chain, const ChainParams& in) {
  const std::string name(to_string(chain));
  const Limits lim = limits(chain);
  ChainParams p = in;
  if (p.wmax < 0 || p.wmax > 1000000) throw UsageError("wmax must lie in [0, 1000000]");

  if (lim.d_allowed.empty()) {
    if (!p.d.empty()) throw UsageError(name + " chain takes no d");
  } else {
    if (p.d.empty()) p.d = lim.d_default;
    for (auto d : p.d)
      if (std::find(lim.d_allowed.begin(), lim.d_allowed.end(), d) == lim.d_allowed.end())
        throw UsageError(name + " chain supports d in " + list_text(lim.d_allowed) + ", got " + std::to_string(d));
  }
  if (lim.k_allowed.empty()) {
    if (!p.k.empty()) throw UsageError(name + " chain takes no k");
  } else {
    if (p.k.empty()) p.k = lim.k_default;
    for (auto k : p.k)
      if (std::find(lim.k_allowed.begin(), lim.k_allowed.end(), k) == lim.k_allowed.end())
        throw UsageError(name + " chain supports k in " + list_text(lim.k_allowed) + ", got " + std::to_string(k));
  }

  if (p.n_min == 0) p.n_min = lim.n_default_lo;
  if (p.n_max == 0) p.n_max = lim.n_default_hi;
  if (p.n_min > p.n_max) throw UsageError("n_min exceeds n_max");
  // Each dimension samples the intersection of [n_min, n_max] with its own
  // supported range; the union of those ranges bounds what can be asked for.
  const std::vector<std::size_t> dims = p.d.empty() ? std::vector<std::size_t>{2} : p.d;
  std::int64_t floor = std::numeric_limits<std::int64_t>::max(), ceiling = 0;
  for (auto d : dims) {
    auto [lo, hi] = n_range(chain, d);
    floor = std::min(floor, std::min<std::int64_t>(lo, 2));
    ceiling = std::max(ceiling, hi);
  }
  if (p.n_min < floor || p.n_max > ceiling)
    throw UsageError(name + " chain supports n in [" + std::to_string(floor) + ", " + std::to_string(ceiling) + "]");
  for (auto d : dims) {
    auto [tlo, thi] = trial_n_range(chain, p, d);
    auto [lo, hi] = n_range(chain, d);
    if (tlo > thi)
      throw UsageError(name + " chain supports n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] at d=" +
                       std::to_string(d) + "; requested [" + std::to_string(p.n_min) + ", " + std::to_string(p.n_max) + "]");
  }
  return p;
}

namespace {

class TrialRecorder {
 public:
  explicit TrialRecorder(TrialResult& t) : t_(t) {}

  void equal(std::string name, const BigInt& expected, const BigInt& actual, bool asserted = true) {
    t_.steps.push_back({std::move(name), "==", expected, actual, asserted, expected == actual, {}});
  }

  void less(std::string name, const BigInt& bound, const BigInt& actual, bool asserted = true) {
    t_.steps.push_back({std::move(name), "<", bound, actual, asserted, actual < bound, {}});
  }

  /// Witness check: `decode` returns the recomputed source value; decode
  /// failures count as a miss.
  template <class F>
  void witness(const BigInt& expected, F&& decode, bool asserted = true) {
    StepResult s{"witness", "==", expected, 0, asserted, false, {}};
    try {
      s.actual = decode();
      s.holds = s.actual == expected;
    } catch (const DecodeError& e) {
      s.note = std::string("decode failed: ") + e.what();
    }
    t_.steps.push_back(std::move(s));
  }

 private:
  TrialResult& t_;
};

template <class T>
BigInt mass(std::span<const T> xs) {
  BigInt total = 0;
  for (const auto& x : xs) total += to_big(abs_value(x));
  return total;
}

// One cell raised far above anything a box of the original array can reach.
template <class T>
void corrupt(DenseArray<T>& a) {
  const DTuple cell = a.lower();
  a[cell] = T(a[cell] + reductions::narrow<T>(2 * mass(a.data()) + 1));
}

Int weight_mass_bump(const std::vector<Int>& ws) {
  Int total{0};
  for (const auto& w : ws) total += abs(w);
  return Int{2} * total + 1;
}

WeightedPointSet corrupt(const WeightedPointSet& p) {
  std::vector<Int> ws;
  for (const auto& q : p.points()) ws.push_back(q.weight);
  auto pts = p.points();
  pts.front().weight += weight_mass_bump(ws);
  return WeightedPointSet(p.dim(), std::move(pts));
}

WeightedBoxSet corrupt(const WeightedBoxSet& b) {
  std::vector<Int> ws;
  for (const auto& q : b.boxes()) ws.push_back(q.weight);
  auto boxes = b.boxes();
  boxes.front().weight += weight_mass_bump(ws);
  return WeightedBoxSet(b.dim(), std::move(boxes));
}

struct TrialContext {
  const ChainParams& p;
  Rng rng;
  TrialResult& t;
  TrialRecorder rec;
  bool fault;
};

void run_rectangle(TrialContext& cx) {
  const std::size_t d = cx.t.d, k = cx.t.k;
  const auto n = static_cast<std::size_t>(cx.t.n);
  const auto g = gen_graph(d * k * n, cx.rng.next(), cx.p.wmax, PartSpec{d * k, n});
  cx.t.digest = digest(to_json(g));
  const auto clique = graph::max_weight_clique(g, d * k);

  auto red = reductions::kpartite_clique_to_rectangle(g, k, d);
  cx.rec.equal("census", reductions::rectangle_point_census(cx.t.n, k, d), red.target.size());
  if (cx.fault) red.target = corrupt(red.target);
  const auto rect = geometry::max_weight_rectangle(red.target);
  const BigInt opt = to_big(clique.value);
  cx.rec.equal("kpartite_clique_to_rectangle", red.cert.target_from_source(opt), to_big(rect.value));
  cx.rec.witness(opt, [&] { return to_big(graph::clique_weight(g, reductions::recover_clique_from_rectangle(red.cert, rect))); });
}

void run_subarray2d(TrialContext& cx) {
  const auto g = gen_graph(static_cast<std::size_t>(cx.t.n), cx.rng.next(), cx.p.wmax);
  cx.t.digest = digest(to_json(g));
  const bool tight = cx.p.mode == Mode::kTight;
  const bool sentinel = cx.p.pad == Pad::kSentinel;
  const auto tri = graph::max_weight_triangle(g).max;
  const BigInt x = to_big(tri.value);

  const auto r1 = reductions::triangle_to_4comb(g, cx.p.mode);
  const auto q = array::max_4combination(r1.target);
  cx.rec.equal("triangle_to_4comb", r1.cert.target_from_source(x), to_big(q.value), tight);

  auto r2 = reductions::fourcomb_to_subarray(r1.target, cx.p.pad);
  const auto strict = array::max_4combination(r1.target, true);
  if (cx.fault) corrupt(r2.target);
  const auto sub = array::max_subarray(r2.target);
  cx.rec.equal("fourcomb_to_subarray", to_big(strict.value), to_big(sub.value), sentinel);
  cx.rec.equal("end_to_end", r1.cert.target_from_source(x), to_big(sub.value), tight && sentinel);
  cx.rec.witness(
      x,
      [&] {
        const auto quad = reductions::fourcomb_from_subarray(sub, r1.target);
        return to_big(graph::clique_weight(g, reductions::triangle_from_4comb(r1.cert, quad)));
      },
      tight && sentinel);
}

template <class T>
void run_subarray_hd(TrialContext& cx) {
  const std::size_t d = cx.t.d, h = d / 2;
  const auto n = static_cast<std::size_t>(cx.t.n);
  const auto g = gen_graph((d + h) * n, cx.rng.next(), cx.p.wmax, PartSpec{d + h, n});
  cx.t.digest = digest(to_json(g));
  const BigInt opt = to_big(graph::max_weight_clique(g, d + h).value);

  const auto r1 = reductions::clique_to_subgraph_instance(g, d, cx.p.mode);
  const auto sub = graph::max_weight_2k_subgraph(r1.target);
  cx.rec.equal("clique_to_subgraph", opt, to_big(sub.value));

  const auto r2 = reductions::subgraph_to_central_sum<T>(r1.target, d, cx.p.mode);
  const auto cmrs = array::solve_intermediate(Combination::kCMRS, r2.target);
  cx.rec.equal("subgraph_to_central_sum", r2.cert.target_from_source(to_big(sub.value)), to_big(cmrs.value));

  const auto flipped = reductions::sign_flip_by_orthant(r2.target);
  const auto cmrc = array::solve_intermediate(Combination::kCMRC, flipped);
  cx.rec.equal("sign_flip", to_big(cmrs.value), to_big(cmrc.value));

  const BigInt bonus = cx.p.mode == Mode::kTight ? reductions::orthant_bonus_bound(flipped)
                                                  : reductions::paper_subarray_bonus(flipped);
  const auto r3 = reductions::add_orthant_bonus(flipped, bonus);
  const auto mrc = array::solve_intermediate(Combination::kMRC, r3.target);
  cx.rec.equal("orthant_bonus", r3.cert.target_from_source(to_big(cmrc.value)), to_big(mrc.value));

  auto diff = reductions::build_difference_array(r3.target);
  if (cx.fault) corrupt(diff);
  const auto best = array::max_subarray(diff);
  cx.rec.equal("difference_array", to_big(mrc.value), to_big(best.value));

  const BigInt end = r2.cert.target_from_source(opt) + bonus;
  cx.rec.equal("end_to_end", end, to_big(best.value));
  cx.rec.witness(opt, [&] {
    auto comb = reductions::combination_from_subarray(best, r3.target.halfwidth(), Combination::kMRC);
    comb.kind = Combination::kCMRS;
    const auto choice = reductions::subgraph_from_central_sum(r2.cert, comb);
    return to_big(graph::clique_weight(g, reductions::clique_from_subgraph(r1.cert, choice)));
  });
}

void run_square(TrialContext& cx) {
  const std::size_t d = cx.t.d;
  const auto g = gen_graph(static_cast<std::size_t>(cx.t.n), cx.rng.next(), cx.p.wmax);
  cx.t.digest = digest(to_json(g));
  const bool asserted = d >= 3;
  const bool feasible = g.size() >= d + 1;
  cx.t.infeasible = !feasible;
  std::optional<BigInt> opt;
  if (feasible) opt = to_big(graph::max_weight_clique(g, d + 1).value);

  const auto r1 = reductions::clique_to_central_max_sum<Int>(g, d, cx.p.mode);
  const BigInt c = r1.cert.param("c");
  // Without a (d+1)-clique every central sum picks up at least one more -c.
  const BigInt ceiling = r1.cert.offset - c / 2;
  const auto cms = array::solve_intermediate(Combination::kCMS, r1.target);
  if (opt)
    cx.rec.equal("clique_to_central_max_sum", r1.cert.target_from_source(*opt), to_big(cms.value), asserted);
  else
    cx.rec.less("clique_to_central_max_sum", ceiling, to_big(cms.value), asserted);

  const auto flipped = reductions::sign_flip_by_orthant(r1.target);
  const auto cmc = array::solve_intermediate(Combination::kCMC, flipped);
  cx.rec.equal("sign_flip", to_big(cms.value), to_big(cmc.value), asserted);

  const BigInt bonus = cx.p.mode == Mode::kTight ? reductions::orthant_bonus_bound(flipped)
                                                  : reductions::paper_square_bonus(flipped);
  const auto r3 = reductions::add_orthant_bonus(flipped, bonus);
  const auto mc = array::solve_intermediate(Combination::kMC, r3.target);
  cx.rec.equal("orthant_bonus", r3.cert.target_from_source(to_big(cmc.value)), to_big(mc.value), asserted);

  auto diff = reductions::build_difference_array(r3.target);
  if (cx.fault) corrupt(diff);
  const auto sq = array::max_square_subarray(diff);
  cx.rec.equal("difference_array", to_big(mc.value), to_big(sq.value), asserted);

  if (!opt) {
    cx.rec.less("end_to_end", ceiling + bonus, to_big(sq.value), asserted);
    return;
  }
  cx.rec.equal("end_to_end", r1.cert.target_from_source(*opt) + bonus, to_big(sq.value), asserted);
  cx.rec.witness(
      *opt,
      [&] {
        const auto h = r3.target.halfwidth();
        auto comb = reductions::combination_from_subarray(sq, h, Combination::kMC);
        comb.kind = Combination::kCMS;
        comb.anchor = DTuple(d, h + 1) - comb.anchor;
        return to_big(graph::clique_weight(g, reductions::clique_from_central_max_sum(r1.cert, comb)));
      },
      asserted);
}

void run_depth(TrialContext& cx) {
  const std::size_t d = cx.t.d;
  const auto g = gen_graph(static_cast<std::size_t>(cx.t.n), cx.rng.next(), cx.p.wmax);
  cx.t.digest = digest(to_json(g));
  const BigInt opt = to_big(graph::max_weight_clique(g, d).value);

  auto red = reductions::clique_to_weighted_depth(g, d);
  const auto n = cx.t.n;
  cx.rec.equal("census", BigInt(static_cast<std::int64_t>(d * (d - 1)) * n * (n - 1)), red.target.size());
  if (cx.fault) red.target = corrupt(red.target);
  const auto deep = geometry::weighted_depth(red.target);
  cx.rec.equal("clique_to_weighted_depth", red.cert.target_from_source(opt), to_big(deep.value));
  cx.rec.witness(opt, [&] { return to_big(graph::clique_weight(g, reductions::clique_from_depth_point(red.cert, deep.point))); });
}

TrialResult run_trial(Chain chain, const ChainParams& p, std::size_t index, std::uint64_t seed, bool fault) {
  TrialResult t;
  t.index = index;
  t.seed = seed;
  t.faulted = fault;
  TrialContext cx{p, Rng(seed), t, TrialRecorder(t), fault};
  t.d = p.d.empty() ? 2 : cx.rng.pick(p.d);
  if (!p.k.empty()) t.k = cx.rng.pick(p.k);
  auto [lo, hi] = trial_n_range(chain, p, t.d);
  t.n = cx.rng.uniform(lo, hi);

  const auto start = std::chrono::steady_clock::now();
  try {
    switch (chain) {
      case Chain::kRectangle: run_rectangle(cx); break;
      case Chain::kSubarray2d: run_subarray2d(cx); break;
      case Chain::kSubarrayHd:
        if (p.mode == Mode::kPaper)
          run_subarray_hd<BigInt>(cx);
        else
          run_subarray_hd<Int>(cx);
        break;
      case Chain::kSquare: run_square(cx); break;
      case Chain::kDepth: run_depth(cx); break;
    }
  } catch (const std::exception& e) {
    t.steps.push_back({"error", "==", 0, 0, true, false, e.what()});
  }
  t.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return t;
}

}  // namespace

VerificationReport verify_chain(Chain chain, const ChainParams& params, std::size_t trials, std::uint64_t seed) {
  VerificationReport r;
  r.chain = chain;
  r.params = resolve_params(chain, params);
  r.seed = seed;
  if (r.params.replay) trials = 1;
  r.trials = trials;

  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t ts = r.params.replay ? *r.params.replay : trial_seed(seed, i);
    auto t = run_trial(chain, r.params, i, ts, r.params.inject_fault && i == 0);
    if (t.infeasible) ++r.infeasible;
    for (const auto& s : t.steps) {
      auto& tally = r.steps[s.name];
      tally.asserted = s.asserted;
      ++tally.checked;
      if (s.holds) ++tally.held;
    }
    if (t.pass()) {
      ++r.passes;
    } else {
      const auto& s = *std::find_if(t.steps.begin(), t.steps.end(), [](const StepResult& s) { return s.asserted && !s.holds; });
      r.failures.push_back({t.index, t.seed, t.digest, s.name, s.relation, s.expected, s.actual, s.note});
    }
    r.max_trial_millis = std::max(r.max_trial_millis, t.millis);
    r.mean_trial_millis += t.millis;
    r.trial_results.push_back(std::move(t));
  }
  r.wall_millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (trials > 0) r.mean_trial_millis /= static_cast<double>(trials);
  return r;
}

}  // namespace mwr::harness
