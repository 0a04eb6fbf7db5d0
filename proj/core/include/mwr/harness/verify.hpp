#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwr/core/checked_int.hpp"
#include "mwr/reductions/certificate.hpp"
#include "mwr/reductions/subarray2d.hpp"

namespace mwr::harness {

enum class Chain { kRectangle, kSubarray2d, kSubarrayHd, kSquare, kDepth };

std::string_view to_string(Chain c);
Chain chain_from_string(std::string_view s);

/// Trial parameter ranges. Empty lists and zero bounds select the chain
/// defaults; every trial draws d, k and n from its own substream.
struct ChainParams {
  std::vector<std::size_t> d;
  std::vector<std::size_t> k;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::int64_t wmax = 10;
  reductions::Mode mode = reductions::Mode::kTight;
  reductions::Pad pad = reductions::Pad::kSentinel;
  /// Adds one large value to a single cell (or weight) of the final target
  /// of trial 0 after the reduction.
  bool inject_fault = false;
  /// Runs exactly one trial from this trial seed.
  std::optional<std::uint64_t> replay;
};

/// One certified relation, `actual relation expected`. Relation "==" or "<".
struct StepResult {
  std::string name;
  std::string relation = "==";
  BigInt expected;
  BigInt actual;
  bool asserted = true;
  bool holds = false;
  std::string note;
};

struct TrialResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string digest;  // FNV-1a 64 of the serialized source instance
  std::size_t d = 0, k = 0;
  std::int64_t n = 0;
  bool infeasible = false;
  bool faulted = false;
  std::vector<StepResult> steps;
  double millis = 0;

  bool pass() const;
};

struct Failure {
  std::size_t trial;
  std::uint64_t seed;
  std::string digest;
  std::string step;
  std::string relation;
  BigInt expected;
  BigInt actual;
  std::string note;
};

struct StepTally {
  std::size_t checked = 0;
  std::size_t held = 0;
  bool asserted = true;
};

struct VerificationReport {
  Chain chain;
  ChainParams params;  // resolved ranges
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t infeasible = 0;
  std::vector<Failure> failures;
  std::map<std::string, StepTally> steps;
  std::vector<TrialResult> trial_results;
  double wall_millis = 0;
  double mean_trial_millis = 0;
  double max_trial_millis = 0;

  bool ok() const { return failures.empty(); }
};

/// Generates, reduces and solves `trials` instances, checking each step's
/// certified relation and the end-to-end relation against the oracles.
/// Out-of-range parameters raise UsageError.
VerificationReport verify_chain(Chain chain, const ChainParams& params, std::size_t trials, std::uint64_t seed);

/// Ranges verify_chain would use, after defaults and validation.
ChainParams resolve_params(Chain chain, const ChainParams& params);

}  // namespace mwr::harness
