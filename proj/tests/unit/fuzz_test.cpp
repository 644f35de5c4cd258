#include "doctest.h"
#include "support/oracles.hpp"

#include "tqftdef/fuzz.hpp"

using namespace tqftdef;

TEST_CASE("fuzzing a valid system finds no mismatch") {
  auto system = ValidatedSystem::validate(oracle::load_system("example1_z2"));
  FuzzOptions options;
  options.seed = 3;
  options.steps = 100;
  options.checkpoint_every = 10;
  auto report = run_fuzz(system, seed_complex("sphere_equator"), options);
  CHECK(report.passed());
  CHECK(report.steps_taken == 100);
  CHECK(report.initial.normalized == Scalar(1, 2));
  REQUIRE(report.checkpoints.size() == 10);
  for (std::size_t i = 0; i < report.checkpoints.size(); ++i) {
    CHECK(report.checkpoints[i].step == 10 * (i + 1));
    CHECK(report.checkpoints[i].matched);
    CHECK(report.checkpoints[i].value.normalized == report.initial.normalized);
  }
  std::size_t total = 0;
  for (auto [kind, n] : report.histogram) total += n;
  CHECK(total == 100);
  CHECK(report.trace.size() == 100);
}

TEST_CASE("fuzz reports are reproducible") {
  auto system = ValidatedSystem::validate(oracle::load_system("example4_z2"));
  FuzzOptions options;
  options.seed = 9;
  options.steps = 40;
  options.checkpoint_every = 7;
  auto a = run_fuzz(system, oracle::load_complex("octahedron_equator"), options);
  auto b = run_fuzz(system, oracle::load_complex("octahedron_equator"), options);
  CHECK(a.trace == b.trace);
  CHECK(a.histogram == b.histogram);
  REQUIRE(a.checkpoints.size() == b.checkpoints.size());
  // every 7th step plus the last
  CHECK(a.checkpoints.size() == 6);
  CHECK(a.checkpoints.back().step == 40);
}

TEST_CASE("a wrong barred convention is caught and the walk stops there") {
  auto system = ValidatedSystem::validate(oracle::load_system("example1_s3"));
  FuzzOptions options;
  options.seed = 1;
  options.steps = 200;
  options.checkpoint_every = 5;
  options.evaluation.barred_order = BarredOrder::Reversed;
  auto report = run_fuzz(system, oracle::load_complex("octahedron_equator"), options);
  REQUIRE_FALSE(report.passed());
  CHECK(report.trace.size() == *report.first_mismatch_step);
  CHECK_FALSE(report.checkpoints.back().matched);
  CHECK(report.checkpoints.back().step == *report.first_mismatch_step);
}
