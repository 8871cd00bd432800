#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "settune/consonance.hpp"
#include "settune/dissonance.hpp"
#include "settune/error.hpp"
#include "settune/frequency_set.hpp"
#include "settune/io/csv.hpp"
#include "settune/io/document.hpp"
#include "settune/io/format.hpp"
#include "settune/tuning.hpp"

namespace settune::io {

struct FigureOptions {
  std::optional<std::size_t> max_den;  // overrides each figure's enumeration default
  std::size_t curve_steps = 4000;      // dissonance sidecar resolution
};

struct FigureData {
  CsvTable table;
  std::optional<CsvTable> sidecar;  // dissonance sweep, where the figure overlays one
};

namespace figures {

inline FrequencySet c4(std::size_t partials) { return harmonic_set(Ratio(262), partials); }
inline FrequencySet above_c4(const Ratio& t, std::size_t partials) { return transpose(c4(partials), Interval(t)); }

/// 262 * {1, 2.76, 5.41, 8.94, 13.35, 18.65}
inline FrequencySet inharmonic() {
  std::vector<Ratio> out;
  for (auto s : {"1", "2.76", "5.41", "8.94", "13.35", "18.65"}) out.push_back(Ratio(262) * Ratio::parse(s));
  return FrequencySet(out);
}

/// The same partials with the last digit rounded off.
inline FrequencySet inharmonic_rounded() {
  std::vector<Ratio> out;
  for (auto s : {"1", "2.8", "5.4", "8.8", "13.4", "18.6"}) out.push_back(Ratio(262) * Ratio::parse(s));
  return FrequencySet(out);
}

inline CsvTable tuning_csv() {
  CsvTable t;
  t.header = {"panel",          "interval_ratio",    "cents",      "affinity", "harmonicity", "total",
              "affinity_exact", "harmonicity_exact", "total_exact", "note"};
  return t;
}

inline void append(CsvTable& csv, const std::string& panel, const TuningTable& table) {
  for (const auto& e : table.entries) {
    const auto note = entry_note(table, e.interval);
    csv.add_row({panel, e.interval.str(), fixed(display_cents(e.interval), 4),
                 consonance_text(e.score.affinity()), consonance_text(e.score.harmonicity()),
                 consonance_text(e.score.total()), e.score.affinity().str(), e.score.harmonicity().str(),
                 e.score.total().str(), note ? note->str() : ""});
  }
}

inline CsvTable single(const std::string& panel, const TuningTable& table) {
  CsvTable csv = tuning_csv();
  append(csv, panel, table);
  return csv;
}

inline CsvTable curve_csv(const std::vector<CurvePoint>& curve) {
  CsvTable csv;
  csv.header = {"t", "cents", "dissonance"};
  for (const auto& p : curve) {
    csv.add_row({fixed(p.t, 8), fixed(1200.0 * std::log2(p.t), 4), fixed(p.dissonance, 8)});
  }
  return csv;
}

/// Tuning table for an explicit interval list, e.g. a figure's hand-picked pairs.
inline TuningTable scored(const FrequencySet& f, const FrequencySet& g, std::vector<Interval> intervals) {
  TuningTable table;
  table.context = f;
  table.complement = g;
  for (auto& t : intervals) table.entries.push_back({t, total_consonance(f, transpose(g, t))});
  return table;
}

inline EnumerationBounds bounds(const FigureOptions& o, std::size_t default_den = 60) {
  return EnumerationBounds{Interval(Ratio(1, 8)), Interval(8), o.max_den.value_or(default_den)};
}

using Builder = std::function<FigureData(const FigureOptions&)>;

inline const std::vector<std::pair<std::string_view, Builder>>& registry() {
  static const std::vector<std::pair<std::string_view, Builder>> figures = {
      {"fig4_1",
       [](const FigureOptions&) {
         // Rows carry the affinity of N6 against 1.2 N4, 2 N3 and 1.5 N6.
         const FrequencySet n6 = harmonic_set(Ratio(1), 6);
         CsvTable csv = tuning_csv();
         append(csv, "a", scored(n6, harmonic_set(Ratio(1), 4), {Interval(Ratio(6, 5))}));
         append(csv, "b", scored(n6, harmonic_set(Ratio(1), 3), {Interval(2)}));
         append(csv, "c", scored(n6, n6, {Interval(Ratio(3, 2))}));
         return FigureData{csv, std::nullopt};
       }},
      {"fig4_4",
       [](const FigureOptions&) {
         const FrequencySet a4 = harmonic_set(Ratio(440), 5);
         return FigureData{single("a", scored(a4, a4, {Interval(Ratio(4, 5))})), std::nullopt};
       }},
      {"fig5_1",
       [](const FigureOptions& o) {
         const FrequencySet c = c4(6);
         auto curve = dissonance_curve(c, c, 1.0 / 6.5, 6.5, o.curve_steps);
         return FigureData{single("a", affinitive_tuning(c, c)), curve_csv(curve)};
       }},
      {"fig5_2",
       [](const FigureOptions&) {
         return FigureData{single("a", octave_reduce(affinitive_tuning(c4(6), c4(6)))), std::nullopt};
       }},
      {"fig5_3",
       [](const FigureOptions&) {
         const FrequencySet c = c4(6);
         const FrequencySet g = above_c4(Ratio(3, 2), 6);
         const FrequencySet e = above_c4(Ratio(5, 4), 6);
         CsvTable csv = tuning_csv();
         append(csv, "a", affinitive_tuning(c, c));
         append(csv, "b", affinitive_tuning(set_union(c, g), c));
         append(csv, "c", affinitive_tuning(set_union(set_union(c, e), g), c));
         return FigureData{csv, std::nullopt};
       }},
      {"fig5_4",
       [](const FigureOptions&) {
         const FrequencySet f = inharmonic();
         return FigureData{single("a", affinitive_tuning(f, f)), std::nullopt};
       }},
      {"fig5_5",
       [](const FigureOptions& o) {
         return FigureData{single("a", harmonic_tuning(c4(1), c4(1), Ratio(0), bounds(o))), std::nullopt};
       }},
      {"fig5_6",
       [](const FigureOptions& o) {
         const TuningTable table = harmonic_tuning(c4(1), c4(1), Ratio(0), bounds(o));
         CsvTable csv;
         csv.header = {"panel", "interval_ratio", "cents", "total", "thomae_modified", "total_exact",
                       "thomae_modified_exact"};
         for (const auto& e : table.entries) {
           const Ratio tm = thomae_modified(e.interval);
           csv.add_row({"a", e.interval.str(), fixed(display_cents(e.interval), 4), consonance_text(e.score.total()),
                        consonance_text(tm), e.score.total().str(), tm.str()});
         }
         return FigureData{csv, std::nullopt};
       }},
      {"fig5_7",
       [](const FigureOptions& o) {
         CsvTable csv = tuning_csv();
         append(csv, "a", harmonic_tuning(c4(1), c4(1), Ratio(0), bounds(o)));
         append(csv, "b", harmonic_tuning(c4(6), c4(6), Ratio(0), bounds(o)));
         append(csv, "c", harmonic_tuning(c4(256), c4(256), Ratio(0), bounds(o)));
         return FigureData{csv, std::nullopt};
       }},
      {"fig5_8",
       [](const FigureOptions& o) {
         const FrequencySet c = c4(6);
         const FrequencySet g = above_c4(Ratio(3, 2), 6);
         const FrequencySet e = above_c4(Ratio(5, 4), 6);
         const FrequencySet bb = above_c4(Ratio(7, 4), 6);
         const FrequencySet triad = set_union(set_union(c, e), g);
         CsvTable csv = tuning_csv();
         append(csv, "a", harmonic_tuning(c, c, Ratio(0), bounds(o)));
         append(csv, "b", harmonic_tuning(set_union(c, g), c, Ratio(0), bounds(o)));
         append(csv, "c", harmonic_tuning(triad, c, Ratio(0), bounds(o)));
         append(csv, "d", harmonic_tuning(set_union(triad, bb), c, Ratio(0), bounds(o)));
         return FigureData{csv, std::nullopt};
       }},
      {"fig5_9",
       [](const FigureOptions& o) {
         constexpr std::size_t k = 60;
         const FrequencySet c = c4(k);
         const FrequencySet g = above_c4(Ratio(3, 2), k);
         const FrequencySet e = above_c4(Ratio(5, 4), k);
         CsvTable csv = tuning_csv();
         append(csv, "a", harmonic_tuning(set_union(c, g), c, Ratio(0), bounds(o)));
         append(csv, "b", harmonic_tuning(set_union(set_union(c, e), g), c, Ratio(0), bounds(o)));
         return FigureData{csv, std::nullopt};
       }},
      {"fig5_10",
       [](const FigureOptions& o) {
         const FrequencySet a = inharmonic();
         const FrequencySet b = inharmonic_rounded();
         CsvTable csv = tuning_csv();
         append(csv, "a", harmonic_tuning(a, a, Ratio(0), bounds(o)));
         append(csv, "b", harmonic_tuning(b, b, Ratio(0), bounds(o)));
         return FigureData{csv, std::nullopt};
       }},
      {"fig5_11",
       [](const FigureOptions& o) {
         const FrequencySet f = transpose(FrequencySet{1, 2, 4}, Interval(262));
         CsvTable csv = tuning_csv();
         append(csv, "a", affinitive_tuning(f, f));
         append(csv, "b", harmonic_tuning(f, f, Ratio(0), bounds(o)));
         append(csv, "c", harmonic_tuning(f, f, Ratio(23, 100), bounds(o)));
         return FigureData{csv, std::nullopt};
       }},
      {"fig5_12",
       [](const FigureOptions&) {
         const FrequencySet f = c4(1);
         CsvTable csv = tuning_csv();
         append(csv, "a", affinitive_tuning(f, f));
         append(csv, "b", superset_tuning(f, f, 2, 2));
         append(csv, "c", superset_tuning(f, f, 4, 4));
         return FigureData{csv, std::nullopt};
       }},
      {"fig5_13",
       [](const FigureOptions&) {
         const FrequencySet c = c4(6);
         const FrequencySet g = above_c4(Ratio(3, 2), 6);
         const FrequencySet e = above_c4(Ratio(5, 4), 6);
         CsvTable csv = tuning_csv();
         append(csv, "a", superset_tuning(c, c, 0, 0));
         append(csv, "b", superset_tuning(set_union(c, g), c, 0, 0));
         append(csv, "c", superset_tuning(set_union(set_union(c, e), g), c, 0, 0));
         return FigureData{csv, std::nullopt};
       }},
      {"fig5_14",
       [](const FigureOptions& o) {
         const FrequencySet f = inharmonic_rounded();
         CsvTable csv = tuning_csv();
         append(csv, "a", harmonic_tuning(f, f, Ratio(0), bounds(o, 30)));
         append(csv, "b", superset_tuning(f, f, 0, 0));
         return FigureData{csv, std::nullopt};
       }},
      {"fig8_1",
       [](const FigureOptions& o) {
         const EnumerationBounds b = bounds(o);
         CsvTable csv;
         csv.header = {"panel", "interval_ratio", "cents", "thomae", "thomae_modified"};
         for (const auto& t : enumerate_rationals(b.lo, b.hi, b.max_den)) {
           csv.add_row({"a", t.str(), fixed(display_cents(t), 4), thomae(t.value()).str(),
                        thomae_modified(t).str()});
         }
         return FigureData{csv, std::nullopt};
       }},
  };
  return figures;
}

}  // namespace figures

inline std::vector<std::string> supported_figures() {
  std::vector<std::string> out;
  for (const auto& [id, _] : figures::registry()) out.emplace_back(id);
  return out;
}

/// CSV rows behind the named figure. Unknown ids are rejected with the list
/// of supported ones.
inline FigureData emit_figure_data(std::string_view id, const FigureOptions& options = {}) {
  for (const auto& [name, build] : figures::registry()) {
    if (name == id) return build(options);
  }
  std::string known;
  for (const auto& s : supported_figures()) known += (known.empty() ? "" : ", ") + s;
  throw ParseError("unknown figure id (supported: " + known + ")", std::string(id));
}

}  // namespace settune::io
