#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "settune/error.hpp"
#include "settune/frequency_set.hpp"

namespace settune {

/// Constants of Sethares' parameterisation of the Plomp-Levelt roughness
/// curve. chi_star places the point of maximum roughness as a fraction of
/// the critical bandwidth; lowering it models coarser frequency resolution.
/// Every partial carries the same amplitude and a pair is weighted by the
/// smaller of its two amplitudes.
struct DissonanceParams {
  double chi_star = 0.24;
  double b1 = 3.51;
  double b2 = 5.75;
  double s1 = 0.0207;
  double s2 = 18.96;
  double scale = 5.0;
  double amplitude = 1.0;

  void validate() const {
    if (!(chi_star > 0.0)) throw DomainError("chi_star must be positive");
    if (!(b2 > b1 && b1 > 0.0)) throw DomainError("roughness decay rates must satisfy 0 < b1 < b2");
    if (!(amplitude >= 0.0)) throw DomainError("partial amplitude must be non-negative");
  }
};

struct CurvePoint {
  double t;
  double dissonance;
};

using Spectrum = std::vector<double>;

inline Spectrum to_spectrum(const FrequencySet& set) {
  Spectrum out;
  out.reserve(set.size());
  for (const auto& f : set) out.push_back(f.to_double());
  return out;
}

/// Roughness of two unit partials. Zero at coincidence, one interior
/// maximum, decays to zero with growing separation.
inline double pair_roughness(double f1, double f2, const DissonanceParams& params = {}) {
  if (!(f1 > 0.0) || !(f2 > 0.0)) throw DomainError("partial frequencies must be positive");
  const double s = params.chi_star / (params.s1 * std::min(f1, f2) + params.s2);
  const double x = s * std::abs(f2 - f1);
  return params.amplitude * params.scale * (std::exp(-params.b1 * x) - std::exp(-params.b2 * x));
}

/// Frequency separation at which pair_roughness peaks above `f_low`.
inline double roughness_peak_offset(double f_low, const DissonanceParams& params = {}) {
  const double s = params.chi_star / (params.s1 * f_low + params.s2);
  return std::log(params.b2 / params.b1) / ((params.b2 - params.b1) * s);
}

/// Total roughness of F sounding with tG: every unordered pair of partials
/// in the combined spectrum, within-set pairs included.
inline double dissonance_at(std::span<const double> f, std::span<const double> g, double t,
                            const DissonanceParams& params = {}) {
  std::vector<double> all(f.begin(), f.end());
  for (double x : g) all.push_back(t * x);
  double sum = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) sum += pair_roughness(all[i], all[j], params);
  }
  return sum;
}

/// Geometric sweep of t over [t_lo, t_hi] with `steps` samples, endpoints included.
inline std::vector<CurvePoint> dissonance_curve(std::span<const double> f, std::span<const double> g, double t_lo,
                                                double t_hi, std::size_t steps, const DissonanceParams& params = {}) {
  params.validate();
  if (!(t_lo > 0.0) || !(t_lo < t_hi)) throw DomainError("invalid sweep range: need 0 < lo < hi");
  if (steps < 2) throw DomainError("a sweep needs at least 2 steps");
  if (f.empty() || g.empty()) throw DomainError("empty frequency set");
  std::vector<CurvePoint> out;
  out.reserve(steps);
  const double ratio = std::log(t_hi / t_lo);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = i + 1 == steps ? t_hi : t_lo * std::exp(ratio * static_cast<double>(i) / (steps - 1));
    out.push_back({t, dissonance_at(f, g, t, params)});
  }
  return out;
}

inline std::vector<CurvePoint> dissonance_curve(const FrequencySet& f, const FrequencySet& g, double t_lo,
                                                double t_hi, std::size_t steps, const DissonanceParams& params = {}) {
  const Spectrum a = to_spectrum(f);
  const Spectrum b = to_spectrum(g);
  return dissonance_curve(a, b, t_lo, t_hi, steps, params);
}

/// Indices of samples lower than the left neighbour and not above the
/// right one. Endpoints count when they undercut their single neighbour.
inline std::vector<std::size_t> local_minima(std::span<const CurvePoint> curve) {
  std::vector<std::size_t> out;
  const std::size_t n = curve.size();
  if (n < 2) return out;
  if (curve[0].dissonance < curve[1].dissonance) out.push_back(0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (curve[i].dissonance < curve[i - 1].dissonance && curve[i].dissonance <= curve[i + 1].dissonance) {
      out.push_back(i);
    }
  }
  if (curve[n - 1].dissonance < curve[n - 2].dissonance) out.push_back(n - 1);
  return out;
}

/// max - min over the sampled curve.
inline double curve_range(std::span<const CurvePoint> curve) {
  if (curve.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(curve.begin(), curve.end(), [](const auto& a, const auto& b) {
    return a.dissonance < b.dissonance;
  });
  return hi->dissonance - lo->dissonance;
}

/// Depth of the notch at t with the local slope removed: the mean of the
/// curve `window_cents` either side of t, minus the curve at t.
inline double notch_depth(std::span<const double> f, std::span<const double> g, double t, double window_cents,
                          const DissonanceParams& params = {}) {
  const double w = std::exp2(window_cents / 1200.0);
  const double sides = 0.5 * (dissonance_at(f, g, t / w, params) + dissonance_at(f, g, t * w, params));
  return sides - dissonance_at(f, g, t, params);
}

}  // namespace settune
