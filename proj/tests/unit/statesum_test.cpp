#include <algorithm>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"

#include "tqftdef/error.hpp"
#include "tqftdef/examples.hpp"
#include "tqftdef/moves.hpp"
#include "tqftdef/statesum.hpp"

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

long count_on(const CurveSurfaceComplex& c, bool on) {
  return std::count_if(c.vertices.begin(), c.vertices.end(),
                       [&](const Vertex& v) { return v.on_curve == on; });
}

EvaluationOptions generous() {
  EvaluationOptions o;
  o.brute_force_cap = 1ULL << 40;
  return o;
}

}  // namespace

TEST_CASE("group-algebra state sums count flat connections") {
  struct Case {
    const char* system;
    const char* complex;
    bool trivial_curve;
    bool brute;
  };
  auto z2 = cyclic_group(2);
  auto s3 = symmetric_group3();
  for (auto x : {Case{"example1_z2", "plain_sphere", false, true},
                 Case{"example1_z2", "octahedron_equator", false, true},
                 Case{"example1_z2", "bipyramid_equator", false, true},
                 Case{"example1_z2", "sphere_equator", false, false},
                 Case{"example1_z2", "grid_torus", false, true},
                 Case{"example1_z2", "torus_meridian", false, false},
                 Case{"example4_z2", "octahedron_equator", true, true},
                 Case{"example4_z2", "sphere_equator", true, false},
                 Case{"example4_z2", "torus_meridian", true, false},
                 Case{"example1_s3", "plain_sphere", false, true},
                 Case{"example1_s3", "octahedron_equator", false, true},
                 Case{"example1_s3", "plain_torus", false, false}}) {
    CAPTURE(x.system);
    CAPTURE(x.complex);
    const auto& group = std::string(x.system) == "example1_s3" ? s3 : z2;
    auto complex = oracle::load_complex(x.complex);
    auto system = ValidatedSystem::validate(oracle::load_system(x.system));
    Scalar expected = oracle::flat_connections(complex, group, x.trivial_curve);
    if (x.brute)
      CHECK(expected == Scalar(static_cast<unsigned long>(
                            oracle::flat_connections_naive(complex, group, x.trivial_curve))));
    CHECK(evaluate_contraction(system.data(), complex) == expected);
    if (x.brute) CHECK(evaluate_bruteforce(system.data(), complex, generous()) == expected);

    auto value = normalized_invariant(system, complex);
    long n = static_cast<long>(group.order());
    Scalar scale = x.trivial_curve ? power(Scalar(n), -count_on(complex, false))
                                   : power(Scalar(n), -static_cast<long>(complex.vertices.size()));
    CHECK(value.normalized == expected * scale);
    CHECK(value.n_off_vertices == count_on(complex, false));
    CHECK(value.n_on_vertices == count_on(complex, true));
  }
}

TEST_CASE("brute force and contraction agree for every shipped system") {
  for (const auto& name : shipped_system_names()) {
    auto system = oracle::load_system(name);
    for (const char* cname : {"octahedron", "bipyramid_equator", "octahedron_equator"}) {
      CAPTURE(name);
      CAPTURE(cname);
      auto complex = oracle::load_complex(cname);
      auto brute = evaluate_bruteforce(system, complex, generous());
      CHECK(evaluate_contraction(system, complex) == brute);
      EvaluationOptions seq;
      seq.order = ContractionOrder::Sequential;
      CHECK(evaluate_contraction(system, complex, seq) == brute);
    }
  }
}

TEST_CASE("single moves scale the raw sum by rho, lambda or 1") {
  for (const auto& name : shipped_system_names()) {
    auto system = ValidatedSystem::validate(oracle::load_system(name));
    for (const char* cname : {"octahedron_equator", "bipyramid_equator"}) {
      auto complex = oracle::load_complex(cname);
      Scalar before = evaluate_contraction(system.data(), complex);
      for (const auto& m : applicable_moves(complex, 0)) {
        CAPTURE(name);
        CAPTURE(cname);
        CAPTURE(to_string(m.kind));
        auto after = evaluate_contraction(system.data(), apply_move(complex, m).complex);
        switch (m.kind) {
          case MoveKind::Flip22: CHECK(after == before); break;
          case MoveKind::Subdivide13: CHECK(after == before * system.rho()); break;
          case MoveKind::Merge31: CHECK(after * system.rho() == before); break;
          case MoveKind::Split24: CHECK(after == before * system.lambda()); break;
          case MoveKind::Merge42: CHECK(after * system.lambda() == before); break;
        }
      }
    }
  }
}

TEST_CASE("normalized value ignores the off-curve order") {
  std::mt19937_64 rng(17);
  for (const char* sname : {"example1_z2", "example3_2x2"}) {
    auto system = ValidatedSystem::validate(oracle::load_system(sname));
    for (const char* cname : {"plain_torus", "sphere_equator"}) {
      auto complex = seed_complex(cname);
      auto base = normalized_invariant(system, complex).normalized;
      for (int i = 0; i < 4; ++i) {
        auto order = complex.off_curve_order;
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(normalized_invariant(system, with_off_curve_order(complex, order)).normalized ==
              base);
      }
    }
  }
}

TEST_CASE("local weight reads the coefficient at the classified edges") {
  auto system = oracle::load_system("example3_2x2");
  auto complex = seed_complex("sphere_equator");
  Topology topo(complex);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    Coloring coloring(topo.num_edges());
    for (std::size_t e = 0; e < coloring.size(); ++e)
      coloring[e] = rng() % system.dim(topo.edges()[e].kind);
    for (std::size_t t = 0; t < complex.triangles.size(); ++t) {
      auto cls = classify_triangle(topo, t);
      const auto& coef = system.coefficient(cls.cls.tag);
      auto [i, j, k] = cls.edge_ids;
      CHECK(local_weight(system, topo, t, coloring) == coef(coloring[i], coloring[j], coloring[k]));
    }
  }
}

TEST_CASE("coloring count is the product of edge dimensions") {
  auto system = oracle::load_system("example3_2x3");
  auto complex = oracle::load_complex("bipyramid_equator");
  Topology topo(complex);
  // 3 curve edges (dim 9), 6 B-edges (dim 6)
  CHECK(coloring_count(system, topo) == 729ULL * 46656ULL);
  CHECK(class_counts(topo) == ClassCounts{0, 0, 0, 0, 3, 3});
}

TEST_CASE("limits raise their own errors") {
  auto system = oracle::load_system("example1_z2");
  auto complex = seed_complex("sphere_equator");
  CHECK(code_of([&] { evaluate_bruteforce(system, complex); }) == ErrorCode::TooLarge);
  EvaluationOptions tight;
  tight.memory_budget = 4;
  CHECK(code_of([&] { evaluate_contraction(system, complex, tight); }) ==
        ErrorCode::OutOfMemoryBudget);
  auto v = ValidatedSystem::validate(system);
  CHECK(code_of([&] { normalized_invariant(v, complex, Method::Brute); }) == ErrorCode::TooLarge);
  // Auto falls back to brute force when contraction is over budget
  auto small = oracle::load_complex("octahedron_equator");
  auto fallback = normalized_invariant(v, small, Method::Auto, tight);
  CHECK(fallback.method == Method::Brute);
  CHECK(fallback.normalized == normalized_invariant(v, small).normalized);
}

TEST_CASE("invalid complexes are refused") {
  auto v = ValidatedSystem::validate(oracle::load_system("example1_z2"));
  auto c = seed_complex("plain_sphere");
  c.triangles.pop_back();
  CHECK(code_of([&] { normalized_invariant(v, c); }) == ErrorCode::InvalidSurface);
}

TEST_CASE("reversed barred order") {
  // Z/2 data is blind to swapping arguments
  auto z2 = oracle::load_system("example1_z2");
  auto complex = seed_complex("sphere_equator");
  EvaluationOptions rev;
  rev.barred_order = BarredOrder::Reversed;
  CHECK(evaluate_contraction(z2, complex, rev) == evaluate_contraction(z2, complex));
  // with B and C of different size the swapped arguments do not even fit
  auto mat = oracle::load_system("example3_2x3");
  CHECK(code_of([&] { evaluate_contraction(mat, complex, rev); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("subdivision leaves the normalized value alone") {
  for (const char* sname : {"example1_z2", "example4_z2", "example3_1x1"}) {
    auto system = ValidatedSystem::validate(oracle::load_system(sname));
    for (const char* cname : {"plain_sphere", "sphere_equator"}) {
      CAPTURE(sname);
      CAPTURE(cname);
      auto c = seed_complex(cname);
      CHECK(normalized_invariant(system, barycentric_subdivide(c)).normalized ==
            normalized_invariant(system, c).normalized);
    }
  }
}
