#include "doctest.h"

#include "tqftdef/error.hpp"
#include "tqftdef/examples.hpp"
#include "tqftdef/frobenius_data.hpp"

using namespace tqftdef;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("group tables") {
  auto z4 = cyclic_group(4);
  validate_group(z4);
  CHECK(z4.order() == 4);
  CHECK(z4.table[1][3] == z4.identity);
  CHECK(z4.inverse(1) == 3);

  auto s3 = symmetric_group3();
  validate_group(s3);
  CHECK(s3.labels[0] == "012");
  bool commutative = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) commutative &= s3.table[a][b] == s3.table[b][a];
  CHECK_FALSE(commutative);
  // (pq)(i) = p(q(i))
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t q = 0; q < 6; ++q)
      for (int i = 0; i < 3; ++i) {
        int qi = s3.labels[q][i] - '0';
        CHECK(s3.labels[s3.table[p][q]][i] == s3.labels[p][qi]);
      }
}

TEST_CASE("parsing group tables") {
  auto g = parse_group_table("# Z/2 listed with the identity second\na e\ne a\na e\n");
  CHECK(g.identity == 1);
  CHECK(code_of([] { parse_group_table("e a\ne a\na a\n"); }) == ErrorCode::InvalidGroupTable);
  CHECK(code_of([] { parse_group_table("e a\ne a\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_group_table("e a\ne b\na e\n"); }) == ErrorCode::Parse);
  // not associative: a loop of order 5 that is no group
  CHECK(code_of([] {
          parse_group_table(
              "e a b c d\ne a b c d\na e c d b\nb d e a c\nc b d e a\nd c a b e\n");
        }) == ErrorCode::InvalidGroupTable);
}

TEST_CASE("group algebra loop constant is the group order") {
  for (std::size_t n = 1; n <= 7; ++n)
    CHECK(compute_loop_constant(group_algebra(cyclic_group(n))) == static_cast<long>(n));
  CHECK(compute_loop_constant(group_algebra(symmetric_group3())) == 6);
}

TEST_CASE("S3 acted on by Z2 through an embedding passes every check") {
  auto g = symmetric_group3();
  auto h = cyclic_group(2);
  // Z2 -> S3 sending the generator to the transposition 102
  std::vector<std::size_t> embedding{g.identity, 2};
  REQUIRE(g.labels[2] == "102");
  auto x = regular_action(g, h, embedding);
  validate_action(g, h, x);
  auto system = gset_system(g, h, x);
  CHECK(all_passed(check_system(system)));
  auto v = ValidatedSystem::validate(system);
  CHECK(v.rho() == 6);
  CHECK(v.lambda() == 2);
}

TEST_CASE("a non-homomorphic embedding is not an action") {
  auto g = symmetric_group3();
  auto h = cyclic_group(3);
  std::vector<std::size_t> embedding{g.identity, 2, 2};
  CHECK(code_of([&] { validate_action(g, h, regular_action(g, h, embedding)); }) ==
        ErrorCode::InvalidActionTable);
}

TEST_CASE("twisting by all-ones cocycles changes nothing") {
  auto g = symmetric_group3();
  auto x = regular_action(g, g, {0, 1, 2, 3, 4, 5});
  auto plain = gset_system(g, g, x);
  auto twisted = twisted_system(g, g, x, CocycleTables::ones(6, 6, 6));
  for (auto tag : kAllCoefficients) CHECK(plain.coefficient(tag) == twisted.coefficient(tag));
  CHECK(plain.algebra.unit == twisted.algebra.unit);
  CHECK(plain.algebra.counit == twisted.algebra.counit);
}

TEST_CASE("constant cocycles must be compatible between A and B") {
  auto g = cyclic_group(2);
  auto x = regular_action(g, g, {0, 1});
  auto cocycles = CocycleTables::ones(2, 2, 2);
  for (auto& r : cocycles.alpha)
    for (auto& v : r) v = 3;
  // module associativity needs beta(x,g) beta(xg,f) = alpha(g,f) beta(x,gf)
  CHECK_FALSE(all_passed(check_system(twisted_system(g, g, x, cocycles))));
  for (auto& r : cocycles.beta)
    for (auto& v : r) v = 3;
  auto system = twisted_system(g, g, x, cocycles);
  CHECK(system.algebra.mult(0, 0, 0) == 3);
  CHECK(system.algebra.comult(0, 0, 0) == Scalar(1, 3));
  auto results = check_system(system);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.passed);
  }
}

TEST_CASE("a sign pattern that is not a cocycle is rejected") {
  auto g = cyclic_group(3);
  auto x = regular_action(g, g, {0, 1, 2});
  auto cocycles = CocycleTables::ones(3, 3, 3);
  cocycles.alpha[1][1] = -1;
  CHECK_FALSE(all_passed(check_system(twisted_system(g, g, x, cocycles))));
}

TEST_CASE("zero cocycle values are refused") {
  auto g = cyclic_group(2);
  auto x = regular_action(g, g, {0, 1});
  auto cocycles = CocycleTables::ones(2, 2, 2);
  cocycles.beta[1][0] = 0;
  CHECK(code_of([&] { twisted_system(g, g, x, cocycles); }) == ErrorCode::ZeroCocycleValue);
}

TEST_CASE("matrix systems") {
  for (auto [n, m] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 1}, {1, 2}}) {
    CAPTURE(n);
    CAPTURE(m);
    auto system = matrix_system(n, m);
    CHECK(system.algebra.dim() == static_cast<std::size_t>(n * n));
    CHECK(system.module.dim() == static_cast<std::size_t>(m * n));
    CHECK(system.defect.dim() == static_cast<std::size_t>(m * m));
    auto v = ValidatedSystem::validate(system);
    CHECK(v.rho() == n);
    CHECK(v.lambda() == m);
  }
  CHECK(code_of([] { matrix_system(0, 1); }) == ErrorCode::SizeOutOfRange);
  CHECK(code_of([] { matrix_system(2, 7); }) == ErrorCode::SizeOutOfRange);
}

TEST_CASE("trivial defect over a group algebra") {
  auto a = group_algebra(symmetric_group3());
  auto system = trivial_defect_system(a, regular_module(a));
  auto v = ValidatedSystem::validate(system);
  CHECK(v.rho() == 6);
  CHECK(v.lambda() == 1);
  auto broken = regular_module(a);
  broken.act(0, 0, 0) = 5;
  CHECK(code_of([&] { trivial_defect_system(a, broken); }) == ErrorCode::InvalidModule);
}

TEST_CASE("shipped systems by name") {
  CHECK(shipped_system_names().size() == 6);
  for (const auto& name : shipped_system_names()) CHECK_NOTHROW(shipped_system(name));
  CHECK(code_of([] { shipped_system("example2"); }) == ErrorCode::InvalidArgument);
}
