#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "settune/error.hpp"
#include "settune/frequency_set.hpp"
#include "settune/ratio.hpp"

namespace settune {

enum class Spelling { sharp, flat };

/// Pitch class, octave and optional partial count, written "C#5_3".
class NoteName {
 public:
  // Semitone index relative to A4 of the lowest and highest nameable notes (C0, D#8).
  static constexpr int lowest_index = -57;
  static constexpr int highest_index = 42;

  NoteName(int semitone, int octave, std::optional<std::size_t> partials = std::nullopt,
           Spelling spelling = Spelling::sharp)
      : semitone_(semitone), octave_(octave), partials_(partials), spelling_(spelling) {
    if (semitone < 0 || semitone > 11) throw DomainError("semitone must be in 0..11");
    if (partials && *partials == 0) throw DomainError("partial count must be positive");
    if (!has_accidental(semitone)) spelling_ = Spelling::sharp;
  }

  /// Note whose semitone offset from A4 is `index`.
  static NoteName from_index(int index, std::optional<std::size_t> partials = std::nullopt) {
    const int from_c0 = index - lowest_index;
    const int octave = from_c0 >= 0 ? from_c0 / 12 : -((-from_c0 + 11) / 12);
    return NoteName(from_c0 - octave * 12, octave, partials);
  }

  static NoteName parse(std::string_view text) {
    const std::string token(text);
    static constexpr std::array<int, 7> letter_semitones = {9, 11, 0, 2, 4, 5, 7};  // A..G
    if (text.empty() || text[0] < 'A' || text[0] > 'G') throw ParseError("note must start with A-G", token);
    int semitone = letter_semitones[static_cast<std::size_t>(text[0] - 'A')];
    std::size_t pos = 1;
    Spelling spelling = Spelling::sharp;
    if (pos < text.size() && (text[pos] == '#' || text[pos] == 'b')) {
      const bool sharp = text[pos] == '#';
      const int altered = (semitone + (sharp ? 1 : 11)) % 12;
      if (!has_accidental(altered)) throw ParseError("unsupported accidental", token);
      semitone = altered;
      spelling = sharp ? Spelling::sharp : Spelling::flat;
      ++pos;
    }
    const auto underscore = text.find('_', pos);
    const auto octave_text = text.substr(pos, underscore == std::string_view::npos ? std::string_view::npos
                                                                                     : underscore - pos);
    if (!canonical_digits(octave_text)) throw ParseError("malformed octave in note", token);
    std::optional<std::size_t> partials;
    if (underscore != std::string_view::npos) {
      const auto partial_text = text.substr(underscore + 1);
      if (!canonical_digits(partial_text) || partial_text == "0") throw ParseError("malformed partial count", token);
      partials = std::stoul(std::string(partial_text));
    }
    return NoteName(semitone, std::stoi(std::string(octave_text)), partials, spelling);
  }

  int semitone() const { return semitone_; }
  int octave() const { return octave_; }
  const std::optional<std::size_t>& partials() const { return partials_; }
  Spelling spelling() const { return spelling_; }

  /// Semitones above (positive) or below A4.
  int index() const { return octave_ * 12 + semitone_ + lowest_index; }

  NoteName with_partials(std::optional<std::size_t> partials) const {
    return NoteName(semitone_, octave_, partials, spelling_);
  }

  std::string pitch_class() const {
    static constexpr std::array<std::string_view, 12> sharps = {"C",  "C#", "D",  "D#", "E",  "F",
                                                                "F#", "G",  "G#", "A",  "A#", "B"};
    static constexpr std::array<std::string_view, 12> flats = {"C",  "Db", "D",  "Eb", "E",  "F",
                                                               "Gb", "G",  "Ab", "A",  "Bb", "B"};
    const auto& names = spelling_ == Spelling::flat ? flats : sharps;
    return std::string(names[static_cast<std::size_t>(semitone_)]);
  }

  std::string str() const {
    std::string out = pitch_class() + std::to_string(octave_);
    if (partials_) out += "_" + std::to_string(*partials_);
    return out;
  }

  /// Same pitch and partial count; spelling is cosmetic.
  friend bool operator==(const NoteName& a, const NoteName& b) {
    return a.semitone_ == b.semitone_ && a.octave_ == b.octave_ && a.partials_ == b.partials_;
  }

  friend std::ostream& operator<<(std::ostream& os, const NoteName& n) { return os << n.str(); }

 private:
  static bool has_accidental(int semitone) {
    return semitone == 1 || semitone == 3 || semitone == 6 || semitone == 8 || semitone == 10;
  }

  static bool canonical_digits(std::string_view s) {
    return detail::all_digits(s) && (s.size() == 1 || s[0] != '0');
  }

  int semitone_;
  int octave_;
  std::optional<std::size_t> partials_;
  Spelling spelling_;
};

/// 12-tet grid pitch of the note, A4 = 440 Hz.
inline double grid_frequency(const NoteName& note) { return 440.0 * std::exp2(note.index() / 12.0); }

/// Grid pitch rounded to 0.01 Hz, as an exact decimal. Used when a note is
/// given without an explicit reference frequency.
inline Ratio default_reference(const NoteName& note) {
  const auto hundredths = static_cast<long long>(std::llround(grid_frequency(note) * 100.0));
  return Ratio(BigInt(hundredths), BigInt(100));
}

/// 12-tet note whose half-open +-50 cent window [g * 2^(-1/24), g * 2^(1/24))
/// contains f. The window test is exact: f belongs to grid index m iff
/// 2^(2m-1) <= (f/440)^24 < 2^(2m+1).
inline NoteName note_name(const Ratio& frequency) {
  if (frequency.sign() <= 0) throw DomainError("frequency must be positive, got " + frequency.str());
  const long j = floor_log2(pow(frequency / Ratio(440), 24));
  const long m = (j + 1) >= 0 ? (j + 1) / 2 : -((-(j + 1) + 1) / 2);  // floor((j+1)/2)
  if (m < NoteName::lowest_index || m > NoteName::highest_index) {
    const double lo = 440.0 * std::exp2((2.0 * NoteName::lowest_index - 1.0) / 24.0);
    const double hi = 440.0 * std::exp2((2.0 * NoteName::highest_index + 1.0) / 24.0);
    throw DomainError("frequency " + std::to_string(frequency.to_double()) +
                      " Hz outside the nameable span C0-D#8 [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + ") Hz");
  }
  return NoteName::from_index(static_cast<int>(m));
}

/// Harmonic set of the named note built on `reference`, e.g. A2_4 @ 110.
inline FrequencySet note_set(const NoteName& name, const Ratio& reference) {
  if (!name.partials()) throw DomainError("note " + name.str() + " carries no partial count");
  const NoteName actual = note_name(reference);
  if (actual.semitone() != name.semitone() || actual.octave() != name.octave()) {
    throw DomainError("frequency/name mismatch: " + reference.str() + " Hz is " + actual.str() + ", not " +
                      name.with_partials(std::nullopt).str());
  }
  return harmonic_set(reference, *name.partials());
}

inline FrequencySet note_set(const NoteName& name) { return note_set(name, default_reference(name)); }

}  // namespace settune
