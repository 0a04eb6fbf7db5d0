#include "mwr/harness/json_io.hpp"

#include <cstdio>
#include <limits>

namespace mwr::harness {
namespace {

DTuple tuple_from_json(const Json& j) { return DTuple(j.get<std::vector<std::int64_t>>()); }

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    require(s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos,
            "not an integer: " + s);
    return BigInt(s);
  }
  throw DomainError("expected an integer, got " + j.dump());
}

std::string digest(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

bool fits_int64(const Json& array_json) {
  for (const auto& x : array_json.at("data"))
    if (!x.is_number_integer() || (x.is_number_unsigned() && x.get<std::uint64_t>() > std::numeric_limits<std::int64_t>::max()))
      return false;
  return true;
}

Json to_json(const graph::EdgeWeightedGraph& g) {
  Json w = Json::array();
  for (const auto& x : g.upper_triangle()) w.push_back(x.get());
  Json j{{"n", g.size()}, {"weights", std::move(w)}};
  if (g.parts()) j["parts"] = *g.parts();
  return j;
}

graph::EdgeWeightedGraph graph_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("weights"), "graph needs n and weights");
  std::vector<Int> upper;
  for (const auto& x : j.at("weights")) upper.push_back(value_from_json<Int>(x));
  std::optional<std::vector<std::size_t>> parts;
  if (j.contains("parts") && !j.at("parts").is_null()) parts = j.at("parts").get<std::vector<std::size_t>>();
  return graph::EdgeWeightedGraph::from_upper_triangle(j.at("n").get<std::size_t>(), upper, std::move(parts));
}

Json to_json(const WeightedPointSet& p) {
  Json pts = Json::array();
  for (const auto& q : p.points()) pts.push_back(Json{{"x", q.coords.values()}, {"w", q.weight.get()}});
  return Json{{"d", p.dim()}, {"points", std::move(pts)}};
}

WeightedPointSet points_from_json(const Json& j) {
  require(j.is_object() && j.contains("d") && j.contains("points"), "point set needs d and points");
  std::vector<WeightedPoint> pts;
  for (const auto& q : j.at("points")) pts.push_back({tuple_from_json(q.at("x")), value_from_json<Int>(q.at("w"))});
  return WeightedPointSet(j.at("d").get<std::size_t>(), std::move(pts));
}

Json to_json(const WeightedBoxSet& b) {
  Json boxes = Json::array();
  for (const auto& q : b.boxes())
    boxes.push_back(Json{{"lo", q.lo.values()}, {"hi", q.hi.values()}, {"w", q.weight.get()}});
  return Json{{"d", b.dim()}, {"boxes", std::move(boxes)}};
}

WeightedBoxSet boxes_from_json(const Json& j) {
  require(j.is_object() && j.contains("d") && j.contains("boxes"), "box set needs d and boxes");
  std::vector<WeightedBox> boxes;
  for (const auto& q : j.at("boxes"))
    boxes.push_back({tuple_from_json(q.at("lo")), tuple_from_json(q.at("hi")), value_from_json<Int>(q.at("w"))});
  return WeightedBoxSet(j.at("d").get<std::size_t>(), std::move(boxes));
}

Json to_json(const reductions::ReductionCertificate& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = big_to_json(v);
  Json backmap = Json::object();
  for (const auto& [k, v] : c.backmap) backmap[k] = v;
  return Json{{"reduction_id", c.reduction_id},
              {"a", big_to_json(c.scale)},
              {"b", big_to_json(c.offset)},
              {"params", std::move(params)},
              {"backmap", std::move(backmap)}};
}

reductions::ReductionCertificate certificate_from_json(const Json& j) {
  require(j.is_object() && j.contains("reduction_id") && j.contains("a") && j.contains("b"),
          "certificate needs reduction_id, a and b");
  reductions::ReductionCertificate c;
  c.reduction_id = j.at("reduction_id").get<std::string>();
  c.scale = big_from_json(j.at("a"));
  c.offset = big_from_json(j.at("b"));
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) c.params[k] = big_from_json(v);
  if (j.contains("backmap"))
    for (const auto& [k, v] : j.at("backmap").items()) c.backmap[k] = v.get<std::vector<std::int64_t>>();
  return c;
}

Json solution_json(const graph::CliqueSolution& s) {
  return Json{{"value", s.value.get()}, {"witness", {{"vertices", s.vertices}}}};
}

Json solution_json(const graph::SubgraphSolution& s) {
  return Json{{"value", s.value.get()}, {"witness", {{"unprimed", s.unprimed}, {"primed", s.primed}}}};
}

Json solution_json(const geometry::RectangleSolution& s) {
  Json w{{"empty", s.empty}};
  if (!s.empty) {
    w["lo"] = s.lo.values();
    w["hi"] = s.hi.values();
  }
  return Json{{"value", s.value.get()}, {"witness", std::move(w)}};
}

Json solution_json(const geometry::DepthSolution& s) {
  return Json{{"value", s.value.get()}, {"witness", {{"point", s.point.values()}}}};
}

Json solution_json(const array::FourCombination<Int>& s) {
  return Json{{"value", s.value.get()}, {"witness", {{"i", s.i - 1}, {"j", s.j - 1}, {"i2", s.i2 - 1}, {"j2", s.j2 - 1}}}};
}

Json to_json(const ChainParams& p, Chain chain) {
  Json j{{"chain", to_string(chain)}, {"d", p.d}};
  if (chain == Chain::kRectangle) j["k"] = p.k;
  j["n_min"] = p.n_min;
  j["n_max"] = p.n_max;
  j["wmax"] = p.wmax;
  j["mode"] = reductions::to_string(p.mode);
  if (chain == Chain::kSubarray2d) j["pad"] = reductions::to_string(p.pad);
  j["inject_fault"] = p.inject_fault;
  if (p.replay) j["replay"] = *p.replay;
  return j;
}

namespace {

Json step_json(const StepResult& s) {
  Json j{{"name", s.name},       {"relation", s.relation}, {"expected", big_to_json(s.expected)},
         {"actual", big_to_json(s.actual)}, {"asserted", s.asserted}, {"holds", s.holds}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

}  // namespace

Json to_json(const VerificationReport& r, bool with_trials) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json j{{"trial", f.trial},       {"seed", f.seed},
           {"digest", f.digest},     {"step", f.step},
           {"relation", f.relation}, {"expected", big_to_json(f.expected)},
           {"actual", big_to_json(f.actual)}};
    if (!f.note.empty()) j["note"] = f.note;
    failures.push_back(std::move(j));
  }
  Json steps = Json::object();
  for (const auto& [name, t] : r.steps)
    steps[name] = Json{{"checked", t.checked}, {"held", t.held}, {"asserted", t.asserted}};
  Json j{{"chain", to_string(r.chain)},
         {"params", to_json(r.params, r.chain)},
         {"seed", r.seed},
         {"trials", r.trials},
         {"passes", r.passes},
         {"failed", r.failures.size()},
         {"infeasible", r.infeasible},
         {"failures", std::move(failures)},
         {"steps", std::move(steps)},
         {"timing", {{"wall_ms", r.wall_millis}, {"mean_trial_ms", r.mean_trial_millis}, {"max_trial_ms", r.max_trial_millis}}}};
  if (with_trials) {
    Json trials = Json::array();
    for (const auto& t : r.trial_results) {
      Json tj{{"index", t.index}, {"seed", t.seed}, {"digest", t.digest}, {"d", t.d}, {"n", t.n}};
      if (r.chain == Chain::kRectangle) tj["k"] = t.k;
      tj["pass"] = t.pass();
      if (t.infeasible) tj["infeasible"] = true;
      if (t.faulted) tj["faulted"] = true;
      Json steps_j = Json::array();
      for (const auto& s : t.steps) steps_j.push_back(step_json(s));
      tj["steps"] = std::move(steps_j);
      tj["ms"] = t.millis;
      trials.push_back(std::move(tj));
    }
    j["trial_results"] = std::move(trials);
  }
  return j;
}

Json to_json(const BenchReport& r) {
  return Json{{"op", r.op},
              {"sizes", r.sizes},
              {"reps", r.reps},
              {"median_seconds", r.median_seconds},
              {"slope", r.fit.slope},
              {"intercept", r.fit.intercept},
              {"slope_ci95", {r.fit.ci_low, r.fit.ci_high}},
              {"window", {r.window_low, r.window_high}},
              {"in_window", r.in_window()}};
}

}  // namespace mwr::harness
