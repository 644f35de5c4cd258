#include "tqftdef/fuzz.hpp"

namespace tqftdef {

FuzzReport run_fuzz(const ValidatedSystem& system, const CurveSurfaceComplex& complex,
                    const FuzzOptions& options) {
  FuzzReport report;
  report.seed = options.seed;
  report.steps_requested = options.steps;
  report.initial = normalized_invariant(system, complex, options.method, options.evaluation);

  RandomWalker walker(complex, options.seed, WalkOptions{options.max_edges});
  report.max_edges = walker.max_edges();

  auto checkpoint = [&](std::size_t step) {
    FuzzCheckpoint cp;
    cp.step = step;
    cp.edges = count_edges(walker.complex());
    cp.value = normalized_invariant(system, walker.complex(), options.method, options.evaluation);
    cp.matched = cp.value.normalized == report.initial.normalized;
    if (!cp.matched && !report.first_mismatch_step) report.first_mismatch_step = step;
    report.checkpoints.push_back(std::move(cp));
    return report.checkpoints.back().matched;
  };

  for (std::size_t step = 1; step <= options.steps; ++step) {
    if (!walker.step()) {
      if (report.steps_taken > 0 &&
          (report.checkpoints.empty() || report.checkpoints.back().step != report.steps_taken)) {
        checkpoint(report.steps_taken);
      }
      break;
    }
    report.steps_taken = step;
    const MoveRecord& record = walker.records().back();
    ++report.histogram[record.kind];
    report.trace.push_back(record);
    const bool due = (options.checkpoint_every > 0 && step % options.checkpoint_every == 0) ||
                     step == options.steps;
    if (due && !checkpoint(step)) break;
  }
  return report;
}

}  // namespace tqftdef
