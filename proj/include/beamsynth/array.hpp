// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0
//
// Uniform linear array core: geometry, excitations, far-field array factor
// and pattern metrics. Angle convention: theta is measured from the array
// axis, broadside = 90 deg, u = cos(theta). Degrees at every public
// interface, radians internally.

#ifndef BEAMSYNTH_ARRAY_HPP
#define BEAMSYNTH_ARRAY_HPP

#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

namespace beamsynth {

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Wrap an angle in degrees to (-180, 180].
double wrap_deg(double deg);

/// Element count and spacing of a uniform linear array.
struct ArrayGeometry {
  int n_elements;
  double spacing_wl;  // d / lambda

  ArrayGeometry(int n, double spacing);

  /// k*d = 2*pi*spacing_wl (radians of electrical length per element).
  double kd() const { return 2.0 * kPi * spacing_wl; }
};

/// Per-element complex weights. Amplitudes are linear magnitudes (>= 0);
/// phases live in the complex argument.
class Excitation {
 public:
  explicit Excitation(std::vector<std::complex<double>> weights);

  static Excitation uniform(int n_elements);
  static Excitation from_polar(const std::vector<double>& amplitudes,
                               const std::vector<double>& phases_deg);

  const std::vector<std::complex<double>>& weights() const { return w_; }
  int size() const { return static_cast<int>(w_.size()); }
  const std::complex<double>& operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }

  std::vector<double> amplitudes() const;
  /// Phases in degrees, wrapped to (-180, 180]. Zero-amplitude elements report 0.
  std::vector<double> phases_deg() const;

  /// Elementwise complex scaling.
  Excitation scaled(std::complex<double> factor) const;

 private:
  std::vector<std::complex<double>> w_;
};

/// Strictly increasing polar angles in degrees within [0, 180].
struct AngleGrid {
  std::vector<double> theta_deg;

  explicit AngleGrid(std::vector<double> angles);

  /// Inclusive uniform grid. The default 0.05 deg step resolves -3 dB
  /// crossings for N=16 patterns with interpolation error far below 0.1 deg.
  static AngleGrid uniform(double start_deg = 0.0, double stop_deg = 180.0,
                           double step_deg = 0.05);

  int size() const { return static_cast<int>(theta_deg.size()); }
};

/// Optional per-angle element-pattern multiplier EF(theta_deg).
/// Default (empty) is the isotropic element, EF = 1.
using ElementPattern = std::function<double(double theta_deg)>;

/// Sampled far-field pattern. af_db is normalized so the peak is exactly 0 dB
/// (all -inf for an identically zero excitation).
struct Pattern {
  AngleGrid grid;
  std::vector<std::complex<double>> af_complex;
  std::vector<double> af_db;
};

struct NullDepth {
  double theta_deg;
  double depth_db;
};

/// Derived beam metrics. sll_db is empty when the main lobe spans the whole
/// grid (no sidelobe). In text output that case prints as -inf.
struct PatternMetrics {
  double peak_deg = 0.0;
  std::optional<double> sll_db;
  double hpbw_deg = 0.0;
  std::vector<NullDepth> null_depths_db;
};

/// AF(theta) = sum_{n=0}^{N-1} w_n * exp(j * kd * n * cos(theta)), times the
/// element pattern when one is supplied.
Pattern array_factor(const ArrayGeometry& geom, const Excitation& exc,
                     const AngleGrid& grid, const ElementPattern& ef = {});

/// Unit-amplitude progressive phase beta_n = -n * kd * cos(steer), which puts
/// psi = kd*cos(theta) + beta at zero in the steer direction.
Excitation steering_phases(const ArrayGeometry& geom, double steer_deg);

/// Peak direction, sidelobe level, half-power beamwidth and detected nulls.
/// The main lobe is bounded by the first local minimum on each side of the
/// peak (a -60 dB crossing counts as a null when no strict minimum exists);
/// HPBW interpolates the -3 dB crossings linearly in dB.
PatternMetrics pattern_metrics(const Pattern& p);

struct ParsevalCheck {
  double lhs;  // sum |w_n|^2
  double rhs;  // (1/2pi) * integral over one psi period of |AF(psi)|^2
};

/// Self-check of the Fourier-series relation behind the array factor.
/// Valid only at half-wave spacing, where one psi period covers the visible
/// region exactly once. Quadrature uses 2^14 nodes.
ParsevalCheck parseval_check(const ArrayGeometry& geom, const Excitation& exc);

}  // namespace beamsynth

#endif  // BEAMSYNTH_ARRAY_HPP
