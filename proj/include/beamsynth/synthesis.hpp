// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0
//
// Classical excitaton synthesis: weighted Fourier, Woodward-Lawson,
// Schelkunoff, Dolph-Chebyshev and Taylor n-bar.

#ifndef BEAMSYNTH_SYNTHESIS_HPP
#define BEAMSYNTH_SYNTHESIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beamsynth/array.hpp"

namespace beamsynth {

enum class SectorShape {
  kSector,            // hard-edged indicator in u
  kRaisedCosineEdge,  // flat core with cos^2 edges
};

/// Default full sector width in u. Chosen so the Fourier-synthesized
/// broadside beam (N=16, d=0.5wl) has HPBW 15.2 deg with sidelobes at
/// -20.7 dB and its maximum exactly on the steer direction; a hard sector
/// cannot reach -20 dB at this aperture and wider shapes split the beam.
inline constexpr double kDefaultWidthU = 0.44;

/// Fraction of the sector half-width covered by the cos^2 edge taper.
inline constexpr double kDefaultEdgeTaper = 0.45;

/// Target magnitude profile: a beam sector in u = cos(theta).
struct DesiredPattern {
  double steer_deg;
  double width_u;
  SectorShape shape;
  double edge_taper;  // fraction of the half-width, raised-cosine shape only

  DesiredPattern(double steer, double width = kDefaultWidthU,
                 SectorShape s = SectorShape::kRaisedCosineEdge,
                 double taper = kDefaultEdgeTaper);

  double steer_u() const;
  /// D(u) in [0, 1], equal to 1 at u = cos(steer_deg).
  double magnitude(double u) const;
};

struct WlSample {
  int m;
  double theta_deg;
  double b;
};

/// Woodward-Lawson sample set: directions cos(theta_m) = m * lambda / (N*d)
/// restricted to the visible region, with the aliased endpoint dropped when
/// u = -1 and u = +1 coincide electrically (half-wave spacing).
struct WlSampleSet {
  std::vector<WlSample> samples;
  int m_max;
};

struct ChebyshevSpec {
  double sll_db;
  explicit ChebyshevSpec(double sll);
};

struct TaylorSpec {
  double sll_db;
  int n_bar;
  TaylorSpec(double sll, int nbar);
};

/// Truncated Fourier-series weights for the desired sector, computed by
/// trapezoidal quadrature (2^14 nodes) over one psi period and returned
/// centered on the array midpoint with unit amplitude sum.
/// Requires half-wave spacing.
Excitation fourier_weights(const ArrayGeometry& geom, const DesiredPattern& desired);

/// Sum of composing beams, one per pattern sample:
///   w_n = (1/N) * sum_m b_m * exp(-j * kd * (n - (N-1)/2) * cos(theta_m)).
/// The composing beams share the array midpoint as phase reference so their
/// sidelobes cancel the way the sampled envelope dictates. |AF(theta_m)|
/// reproduces b_m exactly (the excitation is deliberately not rescaled).
std::pair<Excitation, WlSampleSet> woodward_lawson(const ArrayGeometry& geom,
                                                   const DesiredPattern& desired);

/// Polynomial null placement: weights are the coefficients of
/// prod_i (z - exp(j*kd*cos(theta_null_i))), unit amplitude sum.
/// Requires exactly N-1 null angles, each inside (0, 180).
Excitation schelkunoff_weights(const ArrayGeometry& geom,
                               const std::vector<double>& null_angles_deg);

/// Dolph-Chebyshev broadside taper built from the T_{N-1} equal-ripple zeros
/// (cosh/arccosh for the |x| > 1 branch), expanded as a root product.
Excitation chebyshev_weights(const ArrayGeometry& geom, const ChebyshevSpec& spec);

/// Pattern null directions of the Dolph-Chebyshev design, in degrees.
/// Needs the full period visible (half-wave spacing).
std::vector<double> chebyshev_null_angles(const ArrayGeometry& geom, const ChebyshevSpec& spec);

/// Taylor n-bar one-parameter line-source taper sampled at element centers.
Excitation taylor_weights(const ArrayGeometry& geom, const TaylorSpec& spec);

/// Per-method design inputs for compare_methods. The Schelkunoff row defaults
/// to the Chebyshev design's nulls; the Woodward-Lawson row defaults to a
/// full-taper raised cosine (width 0.70) whose sampled envelope keeps the
/// composite sidelobes below the -30 dB comparison line.
struct CompareSpecs {
  ChebyshevSpec chebyshev{-30.0};
  TaylorSpec taylor{-30.0, 5};
  std::optional<std::vector<double>> schelkunoff_nulls;
  std::optional<DesiredPattern> wl_desired;
};

inline constexpr double kCompareWlWidthU = 0.70;

struct MethodRow {
  std::string method;
  PatternMetrics metrics;
};

/// Runs the five methods at identical geometry/grid; rows are ordered
/// fourier, woodward-lawson, schelkunoff, chebyshev, taylor.
std::vector<MethodRow> compare_methods(const ArrayGeometry& geom, const DesiredPattern& desired,
                                       const CompareSpecs& specs, const AngleGrid& grid);

}  // namespace beamsynth

#endif  // BEAMSYNTH_SYNTHESIS_HPP
