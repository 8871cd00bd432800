#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "settune/consonance.hpp"
#include "settune/error.hpp"
#include "settune/frequency_set.hpp"
#include "settune/ratio.hpp"

namespace settune {

enum class Generator { affinitive, harmonic, superset };

inline std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::affinitive: return "affinitive";
    case Generator::harmonic: return "harmonic";
    case Generator::superset: return "superset";
  }
  return "?";
}

inline Generator parse_generator(std::string_view text) {
  if (text == "affinitive") return Generator::affinitive;
  if (text == "harmonic") return Generator::harmonic;
  if (text == "superset") return Generator::superset;
  throw ParseError("unknown generator", std::string(text));
}

/// Candidate window for harmonic tuning: reduced p/q with q <= max_den in [lo, hi].
/// Defaults span +-3 octaves with denominators up to 60.
struct EnumerationBounds {
  Interval lo{Ratio(1, 8)};
  Interval hi{8};
  std::size_t max_den = 60;

  friend bool operator==(const EnumerationBounds&, const EnumerationBounds&) = default;
};

/// Generator inputs recorded exactly as used. Unused fields stay empty.
struct TuningParameters {
  std::optional<Ratio> threshold;             // h, harmonic tuning
  std::optional<EnumerationBounds> bounds;    // harmonic tuning
  std::optional<std::size_t> context_extra;     // n, superset tuning
  std::optional<std::size_t> complement_extra;  // m, superset tuning

  friend bool operator==(const TuningParameters&, const TuningParameters&) = default;
};

struct TuningEntry {
  Interval interval;
  ConsonanceScore score;

  friend bool operator==(const TuningEntry&, const TuningEntry&) = default;
};

/// Ordered pairs <t, sigma(F, tG)> sorted by t, plus the provenance needed to
/// regenerate or rescore them.
struct TuningTable {
  Generator generator = Generator::affinitive;
  FrequencySet context;     // F
  FrequencySet complement;  // G, the sound transposed against F
  TuningParameters parameters;
  bool octave_reduced = false;
  std::vector<TuningEntry> entries;

  std::vector<Interval> intervals() const {
    std::vector<Interval> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.interval);
    return out;
  }

  friend bool operator==(const TuningTable&, const TuningTable&) = default;
};

namespace detail {

/// Scores F against tG, caching what does not depend on t.
class PairScorer {
 public:
  PairScorer(const FrequencySet& context, const FrequencySet& complement)
      : context_(context),
        complement_(complement),
        context_gcd_(gcd_set(context)),
        complement_gcd_(gcd_set(complement)) {}

  Ratio harmonicity(const Interval& t) const { return evaluate(t).second; }

  ConsonanceScore score(const Interval& t) const {
    auto [a, h] = evaluate(t);
    return ConsonanceScore(std::move(a), std::move(h));
  }

 private:
  std::pair<Ratio, Ratio> evaluate(const Interval& t) const {
    const FrequencySet moved = transpose(complement_, t);
    const auto shared = static_cast<long long>(intersection_size(context_, moved));
    const auto smaller = static_cast<long long>(std::min(context_.size(), moved.size()));
    const auto united = static_cast<long long>(context_.size() + moved.size()) - shared;
    const Ratio fundamental = gcd(context_gcd_, complement_gcd_ * t.value());
    const Ratio& top = std::max(context_.max(), moved.max());
    return {Ratio(shared) / Ratio(smaller), fundamental * Ratio(united) / top};
  }

  const FrequencySet& context_;
  const FrequencySet& complement_;
  Ratio context_gcd_;
  Ratio complement_gcd_;
};

inline std::vector<Interval> sorted_unique(std::vector<Ratio> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Interval> out;
  out.reserve(values.size());
  for (auto& v : values) out.emplace_back(std::move(v));
  return out;
}

inline std::vector<TuningEntry> score_all(const FrequencySet& f, const FrequencySet& g,
                                          const std::vector<Interval>& intervals) {
  const PairScorer scorer(f, g);
  std::vector<TuningEntry> out;
  out.reserve(intervals.size());
  for (const auto& t : intervals) out.push_back(TuningEntry{t, scorer.score(t)});
  return out;
}

}  // namespace detail

/// All pairwise ratios f/g: exactly the transpositions t with F n tG non-empty.
inline std::vector<Interval> affinitive_intervals(const FrequencySet& f, const FrequencySet& g) {
  f.require_non_empty();
  g.require_non_empty();
  std::vector<Ratio> ratios;
  ratios.reserve(f.size() * g.size());
  for (const auto& a : f) {
    for (const auto& b : g) ratios.push_back(a / b);
  }
  return detail::sorted_unique(std::move(ratios));
}

inline TuningTable affinitive_tuning(const FrequencySet& f, const FrequencySet& g) {
  TuningTable table;
  table.generator = Generator::affinitive;
  table.context = f;
  table.complement = g;
  table.entries = detail::score_all(f, g, affinitive_intervals(f, g));
  return table;
}

/// Every reduced p/q with q <= max_den and lo <= p/q <= hi, ascending.
///
/// Walks the Farey-type sequence of all fractions with bounded denominator
/// using the neighbour recurrence: after a/b < c/d the next term is
/// (k c - a)/(k d - b) with k = floor((N + b) / d).
inline std::vector<Interval> enumerate_rationals(const Interval& lo, const Interval& hi, std::size_t max_den) {
  if (max_den == 0) throw DomainError("max_den must be at least 1");
  if (!(lo < hi)) throw DomainError("invalid range: lo " + lo.str() + " must be below hi " + hi.str());

  const BigInt n_max(max_den);
  const Ratio& low = lo.value();
  const Ratio& high = hi.value();
  const BigInt start = low.numerator() / low.denominator();

  std::vector<Interval> out;
  auto in_range = [&](const BigInt& p, const BigInt& q) {
    // lo <= p/q <= hi, cross-multiplied.
    return p * low.denominator() >= low.numerator() * q && p * high.denominator() <= high.numerator() * q;
  };
  auto past_end = [&](const BigInt& p, const BigInt& q) { return p * high.denominator() > high.numerator() * q; };

  BigInt a = start, b = 1;
  BigInt c = start * n_max + 1, d = n_max;
  if (in_range(a, b)) out.emplace_back(Ratio(a, b));
  while (!past_end(c, d)) {
    if (in_range(c, d)) out.emplace_back(Ratio(c, d));
    const BigInt k = (n_max + b) / d;
    BigInt e = k * c - a;
    BigInt f = k * d - b;
    a = std::move(c);
    b = std::move(d);
    c = std::move(e);
    d = std::move(f);
  }
  return out;
}

/// Candidates t from `bounds` whose union F u tG has harmonicity strictly above h.
inline std::vector<Interval> harmonic_intervals(const FrequencySet& f, const FrequencySet& g, const Ratio& h,
                                                const EnumerationBounds& bounds = {}) {
  if (h.sign() < 0 || h >= Ratio(1)) throw DomainError("threshold h must satisfy 0 <= h < 1, got " + h.str());
  f.require_non_empty();
  g.require_non_empty();
  const detail::PairScorer scorer(f, g);
  std::vector<Interval> out;
  for (auto& t : enumerate_rationals(bounds.lo, bounds.hi, bounds.max_den)) {
    if (scorer.harmonicity(t) > h) out.push_back(std::move(t));
  }
  return out;
}

inline TuningTable harmonic_tuning(const FrequencySet& f, const FrequencySet& g, const Ratio& h,
                                   const EnumerationBounds& bounds = {}) {
  TuningTable table;
  table.generator = Generator::harmonic;
  table.context = f;
  table.complement = g;
  table.parameters.threshold = h;
  table.parameters.bounds = bounds;
  table.entries = detail::score_all(f, g, harmonic_intervals(f, g, h, bounds));
  return table;
}

/// Affinitive intervals of H_n(F) and H_m(G), without materialising the
/// supersets: (gcd F / gcd G) * { p/q : p <= kF + n, q <= kG + m, gcd(p, q) = 1 }.
inline std::vector<Interval> superset_intervals(const FrequencySet& f, const FrequencySet& g, std::size_t n,
                                                std::size_t m) {
  const Ratio gf = gcd_set(f);
  const Ratio gg = gcd_set(g);
  constexpr std::uint64_t limit = 1ULL << 24;
  const BigInt kf = (f.max() / gf).numerator() + n;
  const BigInt kg = (g.max() / gg).numerator() + m;
  if (kf > limit || kg > limit) throw DomainError("harmonic superset too large for interval generation");
  const auto top_p = kf.convert_to<std::uint64_t>();
  const auto top_q = kg.convert_to<std::uint64_t>();

  std::vector<std::pair<std::uint64_t, std::uint64_t>> fractions;
  for (std::uint64_t q = 1; q <= top_q; ++q) {
    for (std::uint64_t p = 1; p <= top_p; ++p) {
      if (std::gcd(p, q) == 1) fractions.emplace_back(p, q);
    }
  }
  std::sort(fractions.begin(), fractions.end(),
            [](const auto& x, const auto& y) { return x.first * y.second < y.first * x.second; });

  const Ratio scale = gf / gg;
  std::vector<Interval> out;
  out.reserve(fractions.size());
  for (const auto& [p, q] : fractions) {
    out.emplace_back(scale * Ratio(BigInt(p), BigInt(q)));
  }
  return out;
}

/// Intervals from the harmonic supersets, scored on the original sets.
/// Entries with zero affinity are kept.
inline TuningTable superset_tuning(const FrequencySet& f, const FrequencySet& g, std::size_t n, std::size_t m) {
  f.require_non_empty();
  g.require_non_empty();
  TuningTable table;
  table.generator = Generator::superset;
  table.context = f;
  table.complement = g;
  table.parameters.context_extra = n;
  table.parameters.complement_extra = m;
  table.entries = detail::score_all(f, g, superset_intervals(f, g, n, m));
  return table;
}

/// t * 2^k in [1, 2).
inline Interval octave_reduce(const Interval& t) {
  return Interval(t.value() * power_of_two(-floor_log2(t.value())));
}

/// Folds every interval into [1, 2) and rescores against F and G; scores of
/// the unreduced intervals are not carried over.
inline TuningTable octave_reduce(const TuningTable& table, const FrequencySet& f, const FrequencySet& g) {
  std::vector<Ratio> reduced;
  reduced.reserve(table.entries.size());
  for (const auto& e : table.entries) reduced.push_back(octave_reduce(e.interval).value());
  TuningTable out = table;
  out.context = f;
  out.complement = g;
  out.octave_reduced = true;
  out.entries = detail::score_all(f, g, detail::sorted_unique(std::move(reduced)));
  return out;
}

inline TuningTable octave_reduce(const TuningTable& table) {
  return octave_reduce(table, table.context, table.complement);
}

/// Presentation order: total consonance descending, ties by interval.
inline std::vector<TuningEntry> by_consonance(const TuningTable& table) {
  std::vector<TuningEntry> out = table.entries;
  std::stable_sort(out.begin(), out.end(),
                   [](const TuningEntry& x, const TuningEntry& y) { return x.score.total() > y.score.total(); });
  return out;
}

/// Textual record of F, G and the generator parameters.
inline std::string describe(const TuningTable& table) {
  std::string out = "generator=" + std::string(to_string(table.generator));
  out += "; F=" + table.context.str();
  out += "; G=" + table.complement.str();
  const auto& p = table.parameters;
  if (p.threshold) out += "; h=" + p.threshold->str();
  if (p.bounds) {
    out += "; lo=" + p.bounds->lo.str() + "; hi=" + p.bounds->hi.str() +
           "; max_den=" + std::to_string(p.bounds->max_den);
  }
  if (p.context_extra) out += "; n=" + std::to_string(*p.context_extra);
  if (p.complement_extra) out += "; m=" + std::to_string(*p.complement_extra);
  if (table.octave_reduced) out += "; octave_reduced";
  return out;
}

/// Throws InvariantError unless the table is well formed: intervals strictly
/// increasing, generator parameters present, generator-specific guarantees
/// hold. With `rescore`, every stored score must also equal sigma(F, tG).
inline void validate(const TuningTable& table, bool rescore = false) {
  if (table.context.empty() || table.complement.empty()) throw InvariantError("table has an empty source set");
  for (std::size_t i = 1; i < table.entries.size(); ++i) {
    if (!(table.entries[i - 1].interval < table.entries[i].interval)) {
      throw InvariantError("intervals not strictly increasing at " + table.entries[i].interval.str());
    }
  }
  const auto& p = table.parameters;
  switch (table.generator) {
    case Generator::affinitive:
      if (!table.octave_reduced) {
        for (const auto& e : table.entries) {
          if (e.score.affinity().sign() == 0) {
            throw InvariantError("affinitive entry with zero affinity at " + e.interval.str());
          }
        }
      }
      break;
    case Generator::harmonic:
      if (!p.threshold || !p.bounds) throw InvariantError("harmonic table missing h or enumeration bounds");
      if (!table.octave_reduced) {
        for (const auto& e : table.entries) {
          if (!(e.score.harmonicity() > *p.threshold)) {
            throw InvariantError("harmonic entry at or below threshold at " + e.interval.str());
          }
        }
      }
      break;
    case Generator::superset:
      if (!p.context_extra || !p.complement_extra) throw InvariantError("superset table missing n or m");
      break;
  }
  if (table.octave_reduced) {
    for (const auto& e : table.entries) {
      if (e.interval.value() < Ratio(1) || e.interval.value() >= Ratio(2)) {
        throw InvariantError("octave-reduced entry outside [1, 2): " + e.interval.str());
      }
    }
  }
  if (rescore) {
    const detail::PairScorer scorer(table.context, table.complement);
    for (const auto& e : table.entries) {
      if (!(scorer.score(e.interval) == e.score)) {
        throw InvariantError("stored score disagrees with recomputed score at " + e.interval.str());
      }
    }
  }
}

}  // namespace settune
