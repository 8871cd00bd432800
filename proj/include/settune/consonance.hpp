#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>

#include "settune/error.hpp"
#include "settune/frequency_set.hpp"
#include "settune/ratio.hpp"

namespace settune {

/// Affinity, harmonicity and their exact mean (total consonance).
class ConsonanceScore {
 public:
  ConsonanceScore(Ratio affinity, Ratio harmonicity)
      : affinity_(std::move(affinity)), harmonicity_(std::move(harmonicity)) {
    check_unit(affinity_, "affinity");
    check_unit(harmonicity_, "harmonicity");
    total_ = (affinity_ + harmonicity_) / Ratio(2);
  }

  const Ratio& affinity() const { return affinity_; }
  const Ratio& harmonicity() const { return harmonicity_; }
  const Ratio& total() const { return total_; }

  friend bool operator==(const ConsonanceScore&, const ConsonanceScore&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ConsonanceScore& s) {
    return os << "alpha=" << s.affinity_ << " chi=" << s.harmonicity_ << " sigma=" << s.total_;
  }

 private:
  static void check_unit(const Ratio& r, const char* what) {
    if (r.sign() < 0 || r > Ratio(1)) throw InvariantError(std::string(what) + " outside [0,1]: " + r.str());
  }

  Ratio affinity_;
  Ratio harmonicity_;
  Ratio total_;
};

/// |F n G| / min(|F|, |G|).
inline Ratio affinity(const FrequencySet& f, const FrequencySet& g) {
  f.require_non_empty();
  g.require_non_empty();
  return Ratio(static_cast<long long>(intersection_size(f, g))) /
         Ratio(static_cast<long long>(std::min(f.size(), g.size())));
}

/// gcd(F u G) * |F u G| / max(F u G). Rational input always has a gcd, so
/// the zero branch for incommensurable sets never arises here.
inline Ratio harmonicity(const FrequencySet& f, const FrequencySet& g) {
  f.require_non_empty();
  g.require_non_empty();
  const Ratio fundamental = gcd(gcd_set(f), gcd_set(g));
  const auto united = static_cast<long long>(f.size() + g.size() - intersection_size(f, g));
  const Ratio& top = std::max(f.max(), g.max());
  return fundamental * Ratio(united) / top;
}

/// Single-set form |F| / |H(F)|.
inline Ratio harmonicity(const FrequencySet& f) { return harmonicity(f, f); }

/// gcd(F) * N_(k + extra) with k = max(F) / gcd(F); extra = 0 is the
/// smallest harmonic set containing F.
inline FrequencySet harmonic_superset(const FrequencySet& f, std::size_t extra = 0) {
  const Ratio fundamental = gcd_set(f);
  const Ratio k = f.max() / fundamental;
  constexpr long long max_partials = 1LL << 24;
  const BigInt total = k.numerator() + extra;
  if (total > max_partials) {
    throw DomainError("harmonic superset would hold " + total.str() + " partials (limit " +
                      std::to_string(max_partials) + ")");
  }
  return harmonic_set(fundamental, total.convert_to<std::size_t>());
}

inline ConsonanceScore total_consonance(const FrequencySet& f, const FrequencySet& g) {
  return ConsonanceScore(affinity(f, g), harmonicity(f, g));
}

/// 1 / max(p, q) for t = p/q in lowest terms.
inline Ratio thomae_modified(const Interval& t) {
  const Ratio& v = t.value();
  return Ratio(BigInt(1), std::max(v.numerator(), v.denominator()));
}

/// Classical Thomae function at a rational: 1/q for p/q in lowest terms.
inline Ratio thomae(const Ratio& t) { return Ratio(BigInt(1), t.denominator()); }

}  // namespace settune
