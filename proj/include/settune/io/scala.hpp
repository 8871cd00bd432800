#pragma once

#include <string>
#include <vector>

#include "settune/error.hpp"
#include "settune/io/format.hpp"
#include "settune/tuning.hpp"

namespace settune::io {

enum class PitchFormat { ratio, cents };

/// Scala scale file:
///
///   ! <name>.scl
///   <description>
///   <note count>
///   <pitch>...
///
/// Pitches are the entries strictly between 1/1 and 2/1 in ascending order,
/// followed by the octave. Ratios are always written with a denominator.
/// The table must already lie in [1, 2]; reduce it first otherwise.
inline std::string export_scl(const TuningTable& table, const std::string& name, const std::string& description,
                              PitchFormat format = PitchFormat::ratio) {
  if (description.find('\n') != std::string::npos || name.find('\n') != std::string::npos) {
    throw DomainError("scale name and description must be single lines");
  }
  std::vector<Interval> pitches;
  for (const auto& e : table.entries) {
    const Ratio& v = e.interval.value();
    if (v < Ratio(1) || v > Ratio(2)) {
      throw DomainError("interval " + e.interval.str() + " lies outside [1/1, 2/1]; run reduce-octave first");
    }
    if (v > Ratio(1) && v < Ratio(2)) pitches.push_back(e.interval);
  }
  if (pitches.empty() && !(table.entries.size() && table.entries.back().interval.value() == Ratio(2))) {
    throw DomainError("scale has no pitches besides 1/1");
  }
  pitches.emplace_back(2);

  std::string out = "! " + name + ".scl\n" + description + "\n" + std::to_string(pitches.size()) + "\n";
  for (const auto& p : pitches) {
    out += format == PitchFormat::ratio ? p.str() : fixed(cents(p), 4);
    out += "\n";
  }
  return out;
}

inline std::string export_scl(const TuningTable& table, const std::string& name,
                              PitchFormat format = PitchFormat::ratio) {
  return export_scl(table, name, describe(table), format);
}

}  // namespace settune::io
