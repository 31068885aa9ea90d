#pragma once

// The acceptance suite: eleven fixed checks with pinned parameters, plus
// diagnostics that locate failures.  Shared by `heckecs verify all` and the
// acceptance test binary.

#include "heckecs/verify.hpp"

#include <functional>
#include <string>
#include <vector>

namespace heckecs::acceptance {

// All comparisons are exact; these are the only knobs.
inline constexpr int kAffineA1Depth = 6;
inline constexpr int kAffineA2Depth = 4;
inline constexpr int kMargin = 2;
inline constexpr int kHeckeSamples = 100;
inline constexpr int kDenominatorDepthA1 = 8;
inline constexpr int kDenominatorDepthA2 = 6;
inline constexpr int kRecursionMaxLength = 4;
inline constexpr int kSymmetrizerDepth = 6;
inline constexpr int kSymmetrizerBuffer = 3;
inline constexpr int kGkFiniteMaxHeight = 4;
inline constexpr int kGkMaxDoublings = 6;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Wall-clock budgets (seconds) for the criteria that state one.
inline constexpr double kFiniteCsBudget = 30.0;
inline constexpr double kHeckeBudget = 10.0;
inline constexpr double kAffineCsBudget = 600.0;

struct Outcome {
  int id = 0;  // criterion number; 0 for diagnostics
  std::string title;
  Verdict verdict = Verdict::Pass;
  std::string summary;  // one line: what ran, or the first witness
  double seconds = 0;
  std::vector<VerificationReport> reports;

  nlohmann::ordered_json to_json(bool with_timing = true) const;
};

struct Options {
  std::uint64_t seed = kDefaultSeed;
  SymmetrizerLimits limits;
};

struct Result {
  std::vector<Outcome> criteria;
  std::vector<Outcome> diagnostics;
  bool all_passed() const;
  nlohmann::ordered_json to_json(bool with_timing = true) const;
};

/// One printed line: "PASS  C3  title  [1.2 s]  summary".
std::string format_line(const Outcome& o);

/// Runs every criterion in order, then the diagnostics; `report` is called as
/// each outcome completes.
Result run(const Options& opts = {}, const std::function<void(const Outcome&)>& report = {});

}  // namespace heckecs::acceptance
