#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "settune/error.hpp"
#include "settune/ratio.hpp"

namespace settune {

/// Finite set of positive frequencies (Hz), kept sorted ascending and
/// free of duplicates. Amplitude and phase are deliberately not modelled.
class FrequencySet {
 public:
  using const_iterator = std::vector<Ratio>::const_iterator;

  FrequencySet() = default;

  explicit FrequencySet(std::vector<Ratio> elements) : elements_(std::move(elements)) {
    for (const auto& f : elements_) {
      if (f.sign() <= 0) throw DomainError("frequency must be positive, got " + f.str());
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  FrequencySet(std::initializer_list<Ratio> elements) : FrequencySet(std::vector<Ratio>(elements)) {}

  /// Caller guarantees sorted, unique and positive input.
  static FrequencySet from_canonical(std::vector<Ratio> elements) {
    FrequencySet s;
    s.elements_ = std::move(elements);
    return s;
  }

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }
  const std::vector<Ratio>& elements() const { return elements_; }
  const Ratio& operator[](std::size_t i) const { return elements_[i]; }

  const Ratio& min() const {
    require_non_empty();
    return elements_.front();
  }
  const Ratio& max() const {
    require_non_empty();
    return elements_.back();
  }

  bool contains(const Ratio& f) const { return std::binary_search(elements_.begin(), elements_.end(), f); }

  void require_non_empty() const {
    if (elements_.empty()) throw DomainError("empty frequency set");
  }

  friend bool operator==(const FrequencySet&, const FrequencySet&) = default;

  /// "{a, b, c}" with exact "p/q" elements.
  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i) out += ", ";
      out += elements_[i].str();
    }
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const FrequencySet& s) { return os << s.str(); }

 private:
  std::vector<Ratio> elements_;
};

inline FrequencySet set_union(const FrequencySet& a, const FrequencySet& b) {
  std::vector<Ratio> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FrequencySet::from_canonical(std::move(out));
}

inline FrequencySet set_intersection(const FrequencySet& a, const FrequencySet& b) {
  std::vector<Ratio> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FrequencySet::from_canonical(std::move(out));
}

inline std::size_t intersection_size(const FrequencySet& a, const FrequencySet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

inline bool is_subset(const FrequencySet& sub, const FrequencySet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

/// Fundamental of the set: the largest g with every element an integer multiple of g.
inline Ratio gcd_set(const FrequencySet& set) {
  set.require_non_empty();
  Ratio g = set[0];
  for (std::size_t i = 1; i < set.size(); ++i) g = gcd(g, set[i]);
  return g;
}

/// Period of the summed waveform in seconds, 1 / gcd(F).
inline Ratio total_period(const FrequencySet& set) { return gcd_set(set).reciprocal(); }

/// tF = { t f | f in F }. Scaling by a positive factor keeps the order.
inline FrequencySet transpose(const FrequencySet& set, const Interval& t) {
  std::vector<Ratio> out;
  out.reserve(set.size());
  for (const auto& f : set) out.push_back(f * t.value());
  return FrequencySet::from_canonical(std::move(out));
}

/// f * N_k = {f, 2f, ..., kf}.
inline FrequencySet harmonic_set(const Ratio& fundamental, std::size_t partials) {
  if (partials == 0) throw DomainError("harmonic set needs at least one partial");
  if (fundamental.sign() <= 0) throw DomainError("fundamental must be positive, got " + fundamental.str());
  std::vector<Ratio> out;
  out.reserve(partials);
  for (std::size_t i = 1; i <= partials; ++i) out.push_back(fundamental * Ratio(static_cast<long long>(i)));
  return FrequencySet::from_canonical(std::move(out));
}

/// True iff the set equals gcd(F) * N_k for some k.
inline bool is_harmonic(const FrequencySet& set) {
  const Ratio g = gcd_set(set);
  return set.max() / g == Ratio(static_cast<long long>(set.size()));
}

}  // namespace settune
