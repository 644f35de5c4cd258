#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tqftdef/moves.hpp"
#include "tqftdef/statesum.hpp"

namespace tqftdef {

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t steps = 100;
  std::size_t checkpoint_every = 10;  ///< 0: only after the last step
  std::size_t max_edges = 0;          ///< see WalkOptions
  Method method = Method::Auto;
  EvaluationOptions evaluation;
};

struct FuzzCheckpoint {
  std::size_t step = 0;
  std::size_t edges = 0;
  InvariantValue value;
  bool matched = true;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t steps_requested = 0;
  std::size_t steps_taken = 0;
  std::size_t max_edges = 0;
  InvariantValue initial;
  std::vector<FuzzCheckpoint> checkpoints;
  std::map<MoveKind, std::size_t> histogram;
  std::vector<MoveRecord> trace;
  std::optional<std::size_t> first_mismatch_step;

  bool passed() const noexcept { return !first_mismatch_step.has_value(); }
};

/// Random walk with the normalized invariant recomputed at checkpoints and
/// compared exactly with its initial value. Stops at the first mismatch.
FuzzReport run_fuzz(const ValidatedSystem& system, const CurveSurfaceComplex& complex,
                    const FuzzOptions& options);

}  // namespace tqftdef
