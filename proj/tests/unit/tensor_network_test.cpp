#include <random>

#include "doctest.h"

#include "tqftdef/error.hpp"
#include "tqftdef/tensor_network.hpp"

using namespace tqftdef;

namespace {

LabeledTensor random_tensor(std::mt19937_64& rng, std::vector<int> labels,
                            std::vector<std::size_t> dims, int id) {
  LabeledTensor t{std::move(labels), std::move(dims), {}, id};
  std::size_t n = 1;
  for (auto d : t.dims) n *= d;
  std::uniform_int_distribution<int> pick(-2, 2);
  for (std::size_t i = 0; i < n; ++i) t.data.emplace_back(pick(rng) == 0 ? 0 : pick(rng));
  return t;
}

}  // namespace

TEST_CASE("pair contraction is a matrix product") {
  std::mt19937_64 rng(3);
  auto a = random_tensor(rng, {1, 2}, {3, 4}, 0);
  auto b = random_tensor(rng, {2, 3}, {4, 2}, 1);
  auto c = contract_pair(a, b, {}, 1000);
  REQUIRE(c.labels == std::vector<int>{1, 3});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      Scalar expected = 0;
      for (std::size_t j = 0; j < 4; ++j) expected += a.data[i * 4 + j] * b.data[j * 2 + k];
      CHECK(c.data[i * 2 + k] == expected);
    }
}

TEST_CASE("contraction refuses results above the budget") {
  std::mt19937_64 rng(4);
  auto a = random_tensor(rng, {1, 2}, {5, 5}, 0);
  auto b = random_tensor(rng, {3, 4}, {5, 5}, 1);
  CHECK_THROWS_AS(contract_pair(a, b, {}, 600), Error);
  CHECK(contract_pair(a, b, {}, 625).size() == 625);
}

TEST_CASE("greedy and sequential orders agree on random closed networks") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    CAPTURE(trial);
    // a ring of rank-3 tensors whose third legs pair opposite tensors
    int n = 4 + 2 * (trial % 3);
    std::vector<LabeledTensor> ts;
    for (int i = 0; i < n; ++i)
      ts.push_back(random_tensor(rng, {i, (i + 1) % n, 100 + i % (n / 2)}, {2, 2, 3}, i));
    auto g = contract_network(ts, {}, ContractionOrder::Greedy, 1 << 20);
    auto s = contract_network(ts, {}, ContractionOrder::Sequential, 1 << 20);
    REQUIRE(g.size() == 1);
    REQUIRE(s.size() == 1);
    CHECK(g.data[0] == s.data[0]);
  }
}

TEST_CASE("open labels come out in the requested order") {
  std::mt19937_64 rng(5);
  auto a = random_tensor(rng, {1, 2}, {2, 3}, 0);
  auto b = random_tensor(rng, {2, 3}, {3, 2}, 1);
  auto fwd = contract_network({a, b}, {1, 3}, ContractionOrder::Greedy, 100);
  auto rev = contract_network({a, b}, {3, 1}, ContractionOrder::Greedy, 100);
  REQUIRE(fwd.labels == std::vector<int>{1, 3});
  REQUIRE(rev.labels == std::vector<int>{3, 1});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) CHECK(fwd.data[i * 2 + k] == rev.data[k * 2 + i]);
}

TEST_CASE("a label used three times is rejected") {
  std::mt19937_64 rng(6);
  std::vector<LabeledTensor> ts{random_tensor(rng, {1}, {2}, 0), random_tensor(rng, {1}, {2}, 1),
                                random_tensor(rng, {1}, {2}, 2)};
  CHECK_THROWS_AS(contract_network(ts, {}, ContractionOrder::Greedy, 100), Error);
}
