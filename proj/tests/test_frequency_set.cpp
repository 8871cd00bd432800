#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <settune/frequency_set.hpp>

#include "support/oracles.hpp"

using settune::FrequencySet;
using settune::Interval;
using settune::Ratio;

namespace {

FrequencySet random_set(std::mt19937_64& rng, int max_size = 6) {
  std::uniform_int_distribution<int> size(1, max_size);
  std::uniform_int_distribution<long long> num(1, 400);
  std::uniform_int_distribution<long long> den(1, 8);
  std::vector<Ratio> out;
  const int n = size(rng);
  for (int i = 0; i < n; ++i) out.emplace_back(settune::BigInt(num(rng)), settune::BigInt(den(rng)));
  return FrequencySet(out);
}

Interval random_interval(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> v(1, 30);
  return Interval(Ratio(settune::BigInt(v(rng)), settune::BigInt(v(rng))));
}

}  // namespace

TEST_CASE("FrequencySet sorts, deduplicates and rejects non-positive frequencies", "[set]") {
  const FrequencySet s{550, 440, Ratio(880, 2), 110};
  CHECK(s.size() == 3);
  CHECK(s.min() == Ratio(110));
  CHECK(s.max() == Ratio(550));
  CHECK(s.str() == "{110/1, 440/1, 550/1}");
  CHECK_THROWS_AS((FrequencySet{1, 0}), settune::DomainError);
  CHECK_THROWS_AS((FrequencySet{Ratio(-3, 2)}), settune::DomainError);
  CHECK_THROWS_WITH(FrequencySet{}.max(), "empty frequency set");
}

TEST_CASE("set operations", "[set]") {
  const FrequencySet a{1, 2, 3};
  const FrequencySet b{3, 4};
  CHECK(settune::set_union(a, b) == FrequencySet{1, 2, 3, 4});
  CHECK(settune::set_intersection(a, b) == FrequencySet{3});
  CHECK(settune::intersection_size(a, b) == 1);
  CHECK(settune::is_subset(FrequencySet{1, 2}, a));
  CHECK_FALSE(settune::is_subset(b, a));
}

TEST_CASE("gcd_set finds the fundamental", "[set]") {
  CHECK(settune::gcd_set(FrequencySet{440, 550}) == Ratio(110));
  CHECK(settune::gcd_set(FrequencySet{10, 6, 4}) == Ratio(2));
  CHECK(settune::gcd_set(FrequencySet{Ratio(3, 2), Ratio(9, 4)}) == Ratio(3, 4));
  CHECK_THROWS_WITH(settune::gcd_set(FrequencySet{}), "empty frequency set");
}

TEST_CASE("total_period is 1/gcd and matches the lcm of partial periods", "[set]") {
  CHECK(settune::total_period(settune::harmonic_set(110, 4)) == Ratio(1, 110));
  CHECK(settune::total_period(settune::harmonic_set(110, 4)).to_double() * 1000.0 == Catch::Approx(9.09).margin(0.01));
  CHECK(settune::total_period(FrequencySet{Ratio(7, 3)}) == Ratio(3, 7));
  CHECK(settune::total_period(FrequencySet{440, 550}) == Ratio(1, 110));
  CHECK(oracle::lcm_of_periods({440, 550}) == oracle::Frac(1, 110));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> num(1, 200);
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  for (int i = 0; i < 100; ++i) {
    oracle::FracSet s{oracle::Frac(num(rng), den(rng)), oracle::Frac(num(rng), den(rng)),
                      oracle::Frac(num(rng), den(rng))};
    REQUIRE(settune::total_period(oracle::to_set(s)) == oracle::lcm_of_periods(s).to_ratio());
  }
}

TEST_CASE("transpose multiplies every element", "[set]") {
  CHECK(settune::transpose(FrequencySet{1, 2, 3}, Interval(2)) == FrequencySet{2, 4, 6});
  const FrequencySet c4 = settune::harmonic_set(262, 6);
  CHECK(settune::transpose(c4, Interval(1)) == c4);
  const FrequencySet g4 = settune::transpose(c4, Interval(Ratio(3, 2)));
  CHECK(g4 == FrequencySet{393, 786, 1179, 1572, 1965, 2358});
  CHECK(settune::set_intersection(c4, g4) == FrequencySet{786, 1572});
}

TEST_CASE("harmonic_set builds f * N_k", "[set]") {
  CHECK(settune::harmonic_set(110, 4) == FrequencySet{110, 220, 330, 440});
  CHECK(settune::harmonic_set(262, 1) == FrequencySet{262});
  CHECK(settune::harmonic_set(262, 6) == FrequencySet{262, 524, 786, 1048, 1310, 1572});
  CHECK(settune::gcd_set(settune::harmonic_set(Ratio(7, 3), 9)) == Ratio(7, 3));
  CHECK(settune::is_harmonic(settune::harmonic_set(Ratio(7, 3), 9)));
  CHECK_FALSE(settune::is_harmonic(FrequencySet{2, 4, 8}));
  CHECK_THROWS_AS(settune::harmonic_set(262, 0), settune::DomainError);
  CHECK_THROWS_AS(settune::harmonic_set(0, 3), settune::DomainError);
}

TEST_CASE("fundamental and transposition laws", "[set][property]") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const FrequencySet f = random_set(rng);
    const Interval a = random_interval(rng);
    const Interval b = random_interval(rng);
    const Ratio g = settune::gcd_set(f);
    REQUIRE(settune::gcd_set(settune::transpose(f, a)) == a.value() * g);
    for (const auto& x : f) {
      const Ratio multiple = x / g;
      REQUIRE(multiple.is_integer());
      REQUIRE(multiple.sign() > 0);
    }
    REQUIRE(settune::transpose(settune::transpose(f, a), b) == settune::transpose(f, a * b));
    REQUIRE(settune::transpose(f, Interval(1)) == f);
  }
}
