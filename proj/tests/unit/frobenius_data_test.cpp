#include <random>

#include "doctest.h"
#include "support/oracles.hpp"

#include "tqftdef/error.hpp"
#include "tqftdef/examples.hpp"
#include "tqftdef/frobenius_data.hpp"

using namespace tqftdef;

namespace {

const CheckResult* find_check(const std::vector<CheckResult>& results, const std::string& name) {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

bool some_equation_fails(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.equation_id != 0 && !r.passed && r.witness) return true;
  return false;
}

// K[x]/(x^2) with the Frobenius form counit(x) = 1.
AlgebraData dual_numbers() {
  AlgebraData alg;
  alg.basis = {"1", "x"};
  alg.mult = Tensor3(2, 2, 2);
  alg.mult(0, 0, 0) = 1;
  alg.mult(0, 1, 1) = 1;
  alg.mult(1, 0, 1) = 1;
  alg.comult = Tensor3(2, 2, 2);
  alg.comult(0, 0, 1) = 1;
  alg.comult(0, 1, 0) = 1;
  alg.comult(1, 1, 1) = 1;
  alg.unit = {1, 0};
  alg.counit = {0, 1};
  return alg;
}

}  // namespace

TEST_CASE("every shipped system passes every check") {
  for (const auto& name : shipped_system_names()) {
    CAPTURE(name);
    auto results = check_system(oracle::load_system(name));
    CHECK(all_passed(results));
    int equations = 0;
    for (const auto& r : results) equations += r.equation_id != 0;
    CHECK(equations == 35);
  }
}

TEST_CASE("equation table covers ids 2 to 36") {
  for (int id = kFirstEquation; id <= kLastEquation; ++id) CHECK(equation_info(id).id == id);
  CHECK(equation_info(36).scale == EquationScale::Lambda);
  CHECK_THROWS_AS(equation_info(1), Error);
  CHECK_THROWS_AS(equation_info(37), Error);
}

TEST_CASE("algebra equations agree with a vector-level reference, witnesses included") {
  std::mt19937_64 rng(2024);
  auto base = oracle::load_system("example1_z2");
  std::vector<AlgebraData> candidates{base.algebra, dual_numbers()};
  for (int i = 0; i < 5; ++i) {
    AlgebraData alg = base.algebra;
    std::uniform_int_distribution<int> pick(-1, 2);
    for (auto& x : alg.mult.data()) x = pick(rng);
    for (auto& x : alg.comult.data()) x = pick(rng);
    candidates.push_back(alg);
  }
  // single perturbations of the group algebra fail some axioms and keep others
  for (int i = 0; i < 5; ++i) {
    AlgebraData alg = base.algebra;
    auto& t = (i % 2 == 0) ? alg.mult : alg.comult;
    t.data()[rng() % t.size()] += 1;
    candidates.push_back(alg);
  }
  int failures = 0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    SystemData system = base;
    system.algebra = candidates[c];
    system.algebra.basis = base.algebra.basis;
    for (int id = 2; id <= 7; ++id) {
      CAPTURE(c);
      CAPTURE(id);
      auto mine = check_equation(system, id);
      auto ref = oracle::algebra_axiom(system.algebra, id);
      REQUIRE(mine.passed == !ref.has_value());
      if (!ref) continue;
      ++failures;
      REQUIRE(mine.witness.has_value());
      CHECK(mine.witness->values == ref->values);
      CHECK(mine.witness->lhs == ref->lhs);
      CHECK(mine.witness->rhs == ref->rhs);
    }
  }
  CHECK(failures > 10);
}

TEST_CASE("single-entry perturbations of shipped systems are caught") {
  std::mt19937_64 rng(99);
  for (const auto& name : shipped_system_names()) {
    CAPTURE(name);
    auto base = oracle::load_system(name);
    for (int trial = 0; trial < 4; ++trial) {
      SystemData system = base;
      auto tag = kAllCoefficients[rng() % 6];
      auto& t = system.coefficient(tag);
      std::vector<std::size_t> nonzero;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (!is_zero(t.data()[i])) nonzero.push_back(i);
      REQUIRE(!nonzero.empty());
      t.data()[nonzero[rng() % nonzero.size()]] += 1;
      CHECK(some_equation_fails(check_system(system)));
    }
  }
}

TEST_CASE("loop constants") {
  CHECK(compute_loop_constant(group_algebra(cyclic_group(2))) == 2);
  CHECK(compute_loop_constant(group_algebra(symmetric_group3())) == 6);
  CHECK(compute_loop_constant(group_algebra(cyclic_group(5))) == 5);
  CHECK(compute_loop_constant(matrix_algebra(2)) == 2);
  CHECK(compute_loop_constant(matrix_algebra(3)) == 3);
  CHECK(compute_loop_constant(*shipped_system("example4_z2").defect.algebra) == 1);
}

TEST_CASE("dual numbers are not projectively special") {
  auto alg = dual_numbers();
  try {
    compute_loop_constant(alg);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotProjectivelySpecial);
  }
  CHECK_FALSE(check_projective_specialness(alg, std::nullopt).passed);
}

TEST_CASE("zero loop constant is its own error") {
  auto alg = group_algebra(cyclic_group(2));
  for (auto& x : alg.comult.data()) x = 0;
  try {
    compute_loop_constant(alg);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroLoopConstant);
  }
}

TEST_CASE("a wrong cached loop constant is reported") {
  auto system = shipped_system("example1_z2");
  system.algebra.loop_constant = Scalar(3);
  auto results = check_system(system);
  CHECK_FALSE(all_passed(results));
  CHECK_FALSE(find_check(results, "projective_specialness")->passed);
}

TEST_CASE("asymmetric pairing fails the symmetry law") {
  auto alg = dual_numbers();
  alg.counit = {1, 1};
  CHECK(check_symmetric(alg).passed);
  // a counit reading off a non-central group element breaks symmetry
  auto s3 = group_algebra(symmetric_group3());
  s3.counit = {0, 1, 0, 0, 0, 0};
  auto r = check_symmetric(s3);
  CHECK_FALSE(r.passed);
  CHECK(r.witness.has_value());
}

TEST_CASE("module loop fails when the coaction is zeroed") {
  auto system = shipped_system("example1_z2");
  CHECK(verify_module_loop(system).passed);
  for (auto& x : system.module.coact.data()) x = 0;
  CHECK_FALSE(verify_module_loop(system).passed);
}

TEST_CASE("unit and counit laws") {
  auto alg = group_algebra(symmetric_group3());
  CHECK(check_unit_law(alg).passed);
  CHECK(check_counit_law(alg).passed);
  alg.unit[1] = 1;
  CHECK_FALSE(check_unit_law(alg).passed);
  alg = group_algebra(symmetric_group3());
  alg.counit[0] = 2;
  CHECK_FALSE(check_counit_law(alg).passed);
}

TEST_CASE("dimension mismatches are reported, not thrown, by check_system") {
  auto system = shipped_system("example1_z2");
  system.module.act = Tensor3(2, 3, 2);
  CHECK_THROWS_AS(check_dimensions(system), Error);
  auto results = check_system(system);
  CHECK_FALSE(all_passed(results));
}

TEST_CASE("validation is deterministic and throws InvalidSystem on failure") {
  auto system = shipped_system("example3_2x3");
  auto a = check_system(system);
  auto b = check_system(system);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].passed == b[i].passed);
  auto v = ValidatedSystem::validate(system);
  CHECK(v.rho() == 2);
  CHECK(v.lambda() == 3);
  system.algebra.mult(0, 0, 0) += 1;
  try {
    ValidatedSystem::validate(system);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSystem);
  }
}

TEST_CASE("missing lambda without defect algebra is a failure") {
  auto system = shipped_system("example4_z2");
  system.defect.algebra.reset();
  system.defect.loop_constant.reset();
  auto results = check_system(system);
  CHECK_FALSE(find_check(results, "eq36")->passed);
}
