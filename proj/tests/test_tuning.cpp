#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <settune/tuning.hpp>

#include "support/oracles.hpp"

using settune::EnumerationBounds;
using settune::FrequencySet;
using settune::Interval;
using settune::Ratio;

namespace {

const FrequencySet c4 = settune::harmonic_set(262, 6);

std::vector<Interval> parse_all(std::initializer_list<const char*> items) {
  std::vector<Interval> out;
  for (auto s : items) out.push_back(Interval::parse(s));
  return out;
}

FrequencySet random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(1, 60);
  std::uniform_int_distribution<long long> den(1, 4);
  std::uniform_int_distribution<int> size(1, 4);
  std::vector<Ratio> out;
  for (int k = size(rng); k > 0; --k) out.emplace_back(settune::BigInt(num(rng)), settune::BigInt(den(rng)));
  return FrequencySet(out);
}

}  // namespace

TEST_CASE("affinitive intervals of C4_6 against itself", "[tuning]") {
  const auto expected =
      parse_all({"1/6", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "5/6", "1",
                 "6/5", "5/4", "4/3", "3/2", "5/3", "2", "5/2", "3", "4", "5", "6"});
  CHECK(settune::affinitive_intervals(c4, c4) == expected);
  const auto table = settune::affinitive_tuning(c4, c4);
  REQUIRE(table.entries.size() == 23);
  CHECK_NOTHROW(settune::validate(table, true));
  for (const auto& e : table.entries) CHECK(e.score.affinity() > Ratio(0));
}

TEST_CASE("affinitive intervals are exactly the transpositions with shared partials", "[tuning][property]") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const FrequencySet f = random_set(rng);
    const FrequencySet g = random_set(rng);
    const auto found = settune::affinitive_intervals(f, g);
    const std::set<Interval> lookup(found.begin(), found.end());
    for (const auto& t : settune::enumerate_rationals(Interval(Ratio(1, 240)), Interval(240), 8)) {
      const bool shared = settune::intersection_size(f, settune::transpose(g, t)) > 0;
      REQUIRE(shared == lookup.contains(t));
    }
  }
}

TEST_CASE("enumerate_rationals matches a double loop", "[tuning]") {
  for (std::size_t n : {1u, 2u, 5u, 12u, 60u}) {
    const auto got = settune::enumerate_rationals(Interval(Ratio(1, 8)), Interval(8), n);
    const auto want = oracle::brute_force_rationals(oracle::Frac(1, 8), oracle::Frac(8), static_cast<std::int64_t>(n));
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i].value() == want[i].to_ratio());
  }
  const auto third = settune::enumerate_rationals(Interval(Ratio(1, 3)), Interval(Ratio(2, 3)), 4);
  CHECK(third == parse_all({"1/3", "1/2", "2/3"}));
  CHECK(settune::enumerate_rationals(Interval(Ratio(7, 5)), Interval(Ratio(10, 7)), 3).empty());
  CHECK_THROWS_AS(settune::enumerate_rationals(Interval(1), Interval(2), 0), settune::DomainError);
  CHECK_THROWS_AS(settune::enumerate_rationals(Interval(2), Interval(1), 5), settune::DomainError);
}

TEST_CASE("harmonic tuning keeps candidates strictly above the threshold", "[tuning]") {
  const FrequencySet f = settune::transpose(FrequencySet{1, 2, 4}, Interval(262));
  const auto all = settune::harmonic_tuning(f, f, Ratio(0));
  const auto strict = settune::harmonic_tuning(f, f, Ratio(23, 100));
  CHECK_NOTHROW(settune::validate(all, true));
  CHECK_NOTHROW(settune::validate(strict, true));
  CHECK(strict.entries.size() < all.entries.size());
  for (const auto& e : strict.entries) CHECK(e.score.harmonicity() > Ratio(23, 100));
  CHECK(all.entries.size() == settune::enumerate_rationals(Interval(Ratio(1, 8)), Interval(8), 60).size());
  CHECK_THROWS_AS(settune::harmonic_tuning(f, f, Ratio(1)), settune::DomainError);
  CHECK_THROWS_AS(settune::harmonic_tuning(f, f, Ratio(-1, 10)), settune::DomainError);
}

TEST_CASE("superset intervals match affinitive intervals of the materialised supersets", "[tuning]") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> num(1, 30);
  std::uniform_int_distribution<long long> den(1, 3);
  auto small = [&] {
    return FrequencySet{Ratio(settune::BigInt(num(rng)), settune::BigInt(den(rng))),
                        Ratio(settune::BigInt(num(rng)), settune::BigInt(den(rng)))};
  };
  for (int i = 0; i < 20; ++i) {
    const FrequencySet f = small();
    const FrequencySet g = small();
    for (std::size_t n : {0u, 2u}) {
      for (std::size_t m : {0u, 3u}) {
        const auto fast = settune::superset_intervals(f, g, n, m);
        const auto slow = settune::affinitive_intervals(settune::harmonic_superset(f, n),
                                                        settune::harmonic_superset(g, m));
        REQUIRE(fast == slow);
      }
    }
  }
}

TEST_CASE("superset tuning of a single partial", "[tuning]") {
  const FrequencySet one{262};
  CHECK(settune::superset_intervals(one, one, 0, 0) == parse_all({"1"}));
  CHECK(settune::superset_intervals(one, one, 2, 2) ==
        parse_all({"1/3", "1/2", "2/3", "1", "3/2", "2", "3"}));
  const auto table = settune::superset_tuning(one, one, 2, 2);
  CHECK_NOTHROW(settune::validate(table, true));
  CHECK(table.entries[0].score.affinity() == Ratio(0));
}

TEST_CASE("affinitive tuning is a subset of superset tuning", "[tuning]") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const FrequencySet f = random_set(rng);
    const FrequencySet g = random_set(rng);
    const auto aff = settune::affinitive_intervals(f, g);
    const auto sup = settune::superset_intervals(f, g, 0, 0);
    REQUIRE(std::includes(sup.begin(), sup.end(), aff.begin(), aff.end()));
  }
}

TEST_CASE("octave reduction folds into [1, 2) and rescores", "[tuning]") {
  CHECK(settune::octave_reduce(Interval(Ratio(4, 5))) == Interval(Ratio(8, 5)));
  CHECK(settune::octave_reduce(Interval(6)) == Interval(Ratio(3, 2)));
  CHECK(settune::octave_reduce(Interval(2)) == Interval(1));
  CHECK(settune::octave_reduce(Interval(Ratio(1, 6))) == Interval(Ratio(4, 3)));

  const auto reduced = settune::octave_reduce(settune::affinitive_tuning(c4, c4));
  CHECK(reduced.octave_reduced);
  CHECK(reduced.intervals() == parse_all({"1", "6/5", "5/4", "4/3", "3/2", "8/5", "5/3"}));
  CHECK_NOTHROW(settune::validate(reduced, true));
  const auto it = std::find_if(reduced.entries.begin(), reduced.entries.end(),
                               [](const auto& e) { return e.interval == Interval(Ratio(8, 5)); });
  REQUIRE(it != reduced.entries.end());
  CHECK(it->score.affinity() == Ratio(0));
}

TEST_CASE("by_consonance orders by total descending", "[tuning]") {
  const auto sorted = settune::by_consonance(settune::affinitive_tuning(c4, c4));
  CHECK(sorted.front().interval == Interval(1));
  for (std::size_t i = 1; i < sorted.size(); ++i) REQUIRE(sorted[i - 1].score.total() >= sorted[i].score.total());
}

TEST_CASE("describe records generator parameters", "[tuning]") {
  const auto table = settune::harmonic_tuning(FrequencySet{262}, FrequencySet{262}, Ratio(1, 10),
                                              EnumerationBounds{Interval(1), Interval(2), 4});
  CHECK(settune::describe(table) ==
        "generator=harmonic; F={262/1}; G={262/1}; h=1/10; lo=1/1; hi=2/1; max_den=4");
  CHECK(settune::describe(settune::superset_tuning(FrequencySet{262}, FrequencySet{262}, 1, 2)) ==
        "generator=superset; F={262/1}; G={262/1}; n=1; m=2");
}

TEST_CASE("validate rejects broken tables", "[tuning]") {
  auto table = settune::affinitive_tuning(c4, c4);
  auto swapped = table;
  std::swap(swapped.entries[0], swapped.entries[1]);
  CHECK_THROWS_AS(settune::validate(swapped), settune::InvariantError);

  auto tampered = table;
  tampered.entries[3].score = settune::ConsonanceScore(Ratio(1), Ratio(1));
  CHECK_NOTHROW(settune::validate(tampered));
  CHECK_THROWS_AS(settune::validate(tampered, true), settune::InvariantError);

  auto harmonic = settune::harmonic_tuning(c4, c4, Ratio(0), EnumerationBounds{Interval(1), Interval(2), 4});
  harmonic.parameters.threshold.reset();
  CHECK_THROWS_AS(settune::validate(harmonic), settune::InvariantError);

  auto superset = settune::superset_tuning(c4, c4, 0, 0);
  superset.parameters.context_extra.reset();
  CHECK_THROWS_AS(settune::validate(superset), settune::InvariantError);

  auto reduced = settune::octave_reduce(table);
  reduced.entries.back().interval = Interval(2);
  CHECK_THROWS_AS(settune::validate(reduced), settune::InvariantError);
}

TEST_CASE("generator names round-trip", "[tuning]") {
  for (auto g : {settune::Generator::affinitive, settune::Generator::harmonic, settune::Generator::superset}) {
    CHECK(settune::parse_generator(settune::to_string(g)) == g);
  }
  CHECK_THROWS_AS(settune::parse_generator("random"), settune::ParseError);
}
