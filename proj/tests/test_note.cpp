#include <catch2/catch_amalgamated.hpp>

#include <settune/note.hpp>

using settune::NoteName;
using settune::Ratio;

TEST_CASE("note names parse and print", "[note]") {
  CHECK(NoteName::parse("C4_6").str() == "C4_6");
  CHECK(NoteName::parse("A2").str() == "A2");
  CHECK(NoteName::parse("C#5_3").str() == "C#5_3");
  CHECK(NoteName::parse("Bb4_6").str() == "Bb4_6");
  CHECK(NoteName::parse("Bb4") == NoteName::parse("A#4"));
  CHECK(NoteName::parse("A4").index() == 0);
  CHECK(NoteName::parse("C0").index() == NoteName::lowest_index);
  CHECK(NoteName::parse("D#8").index() == NoteName::highest_index);
  CHECK(*NoteName::parse("A2_4").partials() == 4);
}

TEST_CASE("malformed note names are rejected with the token", "[note]") {
  for (const char* bad : {"", "H4", "E#4", "Fb4", "Cb4", "C", "C4_", "C4_0", "C04", "C4_06", "c4", "C4x"}) {
    INFO(bad);
    try {
      (void)NoteName::parse(bad);
      FAIL("accepted malformed note");
    } catch (const settune::ParseError& e) {
      CHECK(e.token() == bad);
    }
  }
}

TEST_CASE("note_name maps frequencies to the 12-tet grid", "[note]") {
  CHECK(settune::note_name(Ratio(440)).str() == "A4");
  CHECK(settune::note_name(Ratio(110)).str() == "A2");
  CHECK(settune::note_name(Ratio(554)).str() == "C#5");
  CHECK(settune::note_name(Ratio(262)).str() == "C4");
  CHECK(settune::note_name(Ratio(393)).str() == "G4");
  CHECK(settune::note_name(Ratio(Ratio(262) * Ratio(5, 4))).str() == "E4");
  CHECK(settune::note_name(Ratio(Ratio(262) * Ratio(7, 4))).str() == "A#4");
}

TEST_CASE("window edges are exact and half-open", "[note]") {
  // A4's window opens at 440 * 2^(-1/24); test rationals either side of it.
  const double edge = 440.0 * std::exp2(-1.0 / 24.0);  // 427.47...
  CHECK(settune::note_name(Ratio(42747, 100)).str() == "G#4");
  CHECK(settune::note_name(Ratio(42748, 100)).str() == "A4");
  CHECK(edge > 427.47);
  CHECK(edge < 427.48);
  // A5 sits exactly on a grid point; A4.5 (one quarter-tone up) is the upper edge.
  CHECK(settune::note_name(Ratio(880)).str() == "A5");
}

TEST_CASE("every nameable grid pitch round-trips", "[note]") {
  for (int i = NoteName::lowest_index; i <= NoteName::highest_index; ++i) {
    const NoteName n = NoteName::from_index(i);
    REQUIRE(n.index() == i);
    REQUIRE(settune::note_name(settune::default_reference(n)) == n);
    REQUIRE(NoteName::parse(n.str()) == n);
  }
}

TEST_CASE("frequencies outside C0..D#8 are domain errors naming the span", "[note]") {
  CHECK_THROWS_WITH(settune::note_name(Ratio(15)), Catch::Matchers::ContainsSubstring("C0-D#8"));
  CHECK_THROWS_WITH(settune::note_name(Ratio(5200)), Catch::Matchers::ContainsSubstring("C0-D#8"));
  CHECK_NOTHROW(settune::note_name(Ratio(17)));
  CHECK_NOTHROW(settune::note_name(Ratio(5000)));
  CHECK_THROWS_AS(settune::note_name(Ratio(0)), settune::DomainError);
}

TEST_CASE("note_set builds the harmonic set and checks the reference", "[note]") {
  CHECK(settune::note_set(NoteName::parse("A2_4"), Ratio(110)) == settune::harmonic_set(110, 4));
  CHECK(settune::note_set(NoteName::parse("C4_6"), Ratio(262)) == settune::harmonic_set(262, 6));
  CHECK(settune::note_set(NoteName::parse("A4_2")) == settune::harmonic_set(440, 2));
  CHECK(settune::note_set(NoteName::parse("C4_1")) == settune::FrequencySet{Ratio(26163, 100)});
  CHECK_THROWS_WITH(settune::note_set(NoteName::parse("A2_4"), Ratio(440)),
                    Catch::Matchers::ContainsSubstring("frequency/name mismatch"));
  CHECK_THROWS_AS(settune::note_set(NoteName::parse("A2"), Ratio(110)), settune::DomainError);
}
