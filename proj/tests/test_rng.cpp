// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "curio/rng.hpp"

using namespace curio;

namespace {
// Chi-square critical value at significance 0.01 for 3 degrees of freedom.
constexpr double kChi2Crit3 = 11.345;
}  // namespace

TEST_CASE("identical seeds give identical streams") {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derive_seed separates streams") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 1000; ++s) seeds.insert(derive_seed(42, s));
  CHECK(seeds.size() == 1000);
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("uniform01 stays in [0, 1) with mean one half") {
  Rng rng(7);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("below covers its range uniformly") {
  Rng rng(11);
  const int n = 40000;
  std::array<int, 4> counts{};
  for (int i = 0; i < n; ++i) {
    const std::uint64_t k = rng.below(4);
    REQUIRE(k < 4);
    ++counts[k];
  }
  double chi2 = 0.0;
  for (const int c : counts) {
    const double expected = n / 4.0;
    chi2 += (c - expected) * (c - expected) / expected;
  }
  CHECK(chi2 < kChi2Crit3);
  CHECK_THROWS_AS(rng.below(0), std::domain_error);
}

TEST_CASE("normal matches its first two moments") {
  Rng rng(5);
  const int n = 200000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal(1.5, 2.0);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(mean == doctest::Approx(1.5).epsilon(0.02));
  CHECK(var == doctest::Approx(4.0).epsilon(0.03));
  CHECK_THROWS_AS(rng.normal(0.0, -1.0), std::domain_error);
}

TEST_CASE("normal consumes exactly two engine draws") {
  Rng a(9);
  Rng b(9);
  (void)a.normal(0.0, 1.0);
  (void)b.next_u64();
  (void)b.next_u64();
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("exponential is non-negative with the requested mean") {
  Rng rng(13);
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.exponential(2.0);
    REQUIRE(x >= 0.0);
    sum += x;
  }
  CHECK(sum / n == doctest::Approx(2.0).epsilon(0.02));
  CHECK_THROWS_AS(rng.exponential(0.0), std::domain_error);
  CHECK_THROWS_AS(rng.exponential(-1.0), std::domain_error);
}

TEST_CASE("bernoulli hit rate tracks p") {
  Rng rng(17);
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += rng.bernoulli(0.3) ? 1 : 0;
  CHECK(static_cast<double>(hits) / n == doctest::Approx(0.3).epsilon(0.04));
  Rng edge(1);
  CHECK_FALSE(edge.bernoulli(0.0));
  CHECK(edge.bernoulli(1.0));
}

TEST_CASE("categorical respects weights and skips zeros") {
  Rng rng(19);
  const std::vector<double> weights = {0.0, 1.0, 0.0, 3.0};
  const int n = 40000;
  std::array<int, 4> counts{};
  for (int i = 0; i < n; ++i) ++counts[rng.categorical(weights)];
  CHECK(counts[0] == 0);
  CHECK(counts[2] == 0);
  CHECK(static_cast<double>(counts[3]) / n == doctest::Approx(0.75).epsilon(0.02));

  CHECK_THROWS_AS(rng.categorical(std::vector<double>{1.0, -0.5}), std::domain_error);
  CHECK_THROWS_AS(rng.categorical(std::vector<double>{0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(rng.categorical(std::vector<double>{}), std::domain_error);
}

TEST_CASE("shuffle permutes without loss and is seed deterministic") {
  std::vector<int> items = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::vector<int> copy = items;
  Rng a(23);
  Rng b(23);
  a.shuffle(items);
  b.shuffle(copy);
  CHECK(items == copy);
  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

  bool moved = false;
  for (int trial = 0; trial < 20 && !moved; ++trial) {
    std::vector<int> again = sorted;
    Rng c(100 + trial);
    c.shuffle(again);
    moved = again != sorted;
  }
  CHECK(moved);
}

TEST_CASE("sample_without_replacement draws distinct weighted indices") {
  Rng rng(29);
  const std::vector<double> equal(10, 1.0);
  const std::vector<std::size_t> picked = sample_without_replacement(equal, 4, rng);
  CHECK(picked.size() == 4);
  std::set<std::size_t> unique(picked.begin(), picked.end());
  CHECK(unique.size() == 4);
  for (const std::size_t k : picked) CHECK(k < 10);

  const std::vector<double> gappy = {1.0, 0.0, 1.0, 0.0, 1.0};
  const std::vector<std::size_t> positives = sample_without_replacement(gappy, 3, rng);
  const std::set<std::size_t> expected = {0, 2, 4};
  CHECK(std::set<std::size_t>(positives.begin(), positives.end()) == expected);

  CHECK_THROWS_AS(sample_without_replacement(equal, 11, rng), std::domain_error);
  // More draws than positive weights cannot be satisfied.
  CHECK_THROWS_AS(sample_without_replacement(std::vector<double>{1.0, 0.0}, 2, rng),
                  std::domain_error);
}

TEST_CASE("equal-weight sampling without replacement is exchangeable") {
  const std::vector<double> equal(5, 1.0);
  const int trials = 5000;
  std::array<int, 5> inclusion{};
  Rng rng(31);
  for (int t = 0; t < trials; ++t) {
    for (const std::size_t k : sample_without_replacement(equal, 2, rng)) ++inclusion[k];
  }
  // Each index is included with probability 2/5.
  for (const int count : inclusion) {
    CHECK(static_cast<double>(count) / trials == doctest::Approx(0.4).epsilon(0.05));
  }
}
