// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamsynth/array.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "beamsynth/error.hpp"

namespace beamsynth {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

double wrap_deg(double deg) {
  double y = std::fmod(-deg + 180.0, 360.0);
  if (y < 0.0) y += 360.0;
  return -(y - 180.0);
}

ArrayGeometry::ArrayGeometry(int n, double spacing) : n_elements(n), spacing_wl(spacing) {
  if (n < 2) throw ArgumentError("ArrayGeometry: n_elements must be >= 2");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw ArgumentError("ArrayGeometry: spacing_wl must be positive and finite");
  }
}

Excitation::Excitation(std::vector<std::complex<double>> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw ArgumentError("Excitation: empty weight list");
  for (const auto& w : w_) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw ArgumentError("Excitation: non-finite weight");
    }
  }
}

Excitation Excitation::uniform(int n_elements) {
  if (n_elements < 1) throw ArgumentError("Excitation::uniform: need at least one element");
  return Excitation(std::vector<std::complex<double>>(static_cast<std::size_t>(n_elements),
                                                      {1.0, 0.0}));
}

Excitation Excitation::from_polar(const std::vector<double>& amplitudes,
                                  const std::vector<double>& phases_deg) {
  if (amplitudes.size() != phases_deg.size()) {
    throw DimensionError("Excitation::from_polar: amplitude/phase length mismatch");
  }
  std::vector<std::complex<double>> w(amplitudes.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (amplitudes[i] < 0.0) throw ArgumentError("Excitation::from_polar: negative amplitude");
    w[i] = std::polar(amplitudes[i], deg2rad(phases_deg[i]));
  }
  return Excitation(std::move(w));
}

std::vector<double> Excitation::amplitudes() const {
  std::vector<double> a(w_.size());
  std::transform(w_.begin(), w_.end(), a.begin(),
                 [](const std::complex<double>& w) { return std::abs(w); });
  return a;
}

std::vector<double> Excitation::phases_deg() const {
  std::vector<double> p(w_.size());
  std::transform(w_.begin(), w_.end(), p.begin(), [](const std::complex<double>& w) {
    return std::abs(w) == 0.0 ? 0.0 : wrap_deg(rad2deg(std::arg(w)));
  });
  return p;
}

Excitation Excitation::scaled(std::complex<double> factor) const {
  std::vector<std::complex<double>> w(w_);
  for (auto& v : w) v *= factor;
  return Excitation(std::move(w));
}

AngleGrid::AngleGrid(std::vector<double> angles) : theta_deg(std::move(angles)) {
  if (theta_deg.empty()) throw ArgumentError("AngleGrid: empty grid");
  double prev = -1.0;
  for (double t : theta_deg) {
    if (!(t >= 0.0 && t <= 180.0)) throw ArgumentError("AngleGrid: angle outside [0, 180]");
    if (t <= prev) throw ArgumentError("AngleGrid: angles must be strictly increasing");
    prev = t;
  }
}

AngleGrid AngleGrid::uniform(double start_deg, double stop_deg, double step_deg) {
  if (!(step_deg > 0.0)) throw ArgumentError("AngleGrid::uniform: step must be positive");
  if (!(stop_deg >= start_deg)) throw ArgumentError("AngleGrid::uniform: stop < start");
  const int count = static_cast<int>(std::floor((stop_deg - start_deg) / step_deg + 1e-9)) + 1;
  std::vector<double> theta(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) theta[static_cast<std::size_t>(i)] = start_deg + i * step_deg;
  // Keep the endpoint exact when the step divides the span.
  if (std::abs(theta.back() - stop_deg) < step_deg * 1e-6) theta.back() = stop_deg;
  return AngleGrid(std::move(theta));
}

Pattern array_factor(const ArrayGeometry& geom, const Excitation& exc, const AngleGrid& grid,
                     const ElementPattern& ef) {
  if (exc.size() != geom.n_elements) {
    throw DimensionError("array_factor: excitation length does not match geometry");
  }
  const double kd = geom.kd();
  const int n = geom.n_elements;
  const int ng = grid.size();

  std::vector<std::complex<double>> af(static_cast<std::size_t>(ng));
  for (int g = 0; g < ng; ++g) {
    const double u = std::cos(deg2rad(grid.theta_deg[static_cast<std::size_t>(g)]));
    // Recurrence on exp(j*kd*u) keeps the inner loop free of trig calls.
    const std::complex<double> step = std::polar(1.0, kd * u);
    std::complex<double> phasor{1.0, 0.0};
    std::complex<double> acc{0.0, 0.0};
    for (int e = 0; e < n; ++e) {
      acc += exc[e] * phasor;
      phasor *= step;
    }
    if (ef) acc *= ef(grid.theta_deg[static_cast<std::size_t>(g)]);
    af[static_cast<std::size_t>(g)] = acc;
  }

  double peak = 0.0;
  for (const auto& v : af) peak = std::max(peak, std::abs(v));

  std::vector<double> db(static_cast<std::size_t>(ng));
  for (int g = 0; g < ng; ++g) {
    const double mag = std::abs(af[static_cast<std::size_t>(g)]);
    db[static_cast<std::size_t>(g)] = peak == 0.0 ? -kInf : 20.0 * std::log10(mag / peak);
  }
  return Pattern{grid, std::move(af), std::move(db)};
}

Excitation steering_phases(const ArrayGeometry& geom, double steer_deg) {
  if (!(steer_deg > 0.0 && steer_deg < 180.0)) {
    throw ArgumentError("steering_phases: steer angle must lie in (0, 180)");
  }
  const double beta = -geom.kd() * std::cos(deg2rad(steer_deg));
  std::vector<std::complex<double>> w(static_cast<std::size_t>(geom.n_elements));
  for (int e = 0; e < geom.n_elements; ++e) {
    w[static_cast<std::size_t>(e)] = std::polar(1.0, beta * e);
  }
  return Excitation(std::move(w));
}

PatternMetrics pattern_metrics(const Pattern& p) {
  const auto& db = p.af_db;
  const auto& th = p.grid.theta_deg;
  const int ng = static_cast<int>(db.size());
  if (ng < 3) throw ArgumentError("pattern_metrics: need at least 3 samples");

  auto val = [&](int i) { return db[static_cast<std::size_t>(i)]; };
  auto ang = [&](int i) { return th[static_cast<std::size_t>(i)]; };

  int ipk = 0;
  for (int i = 1; i < ng; ++i) {
    if (val(i) > val(ipk)) ipk = i;
  }
  if (!std::isfinite(val(ipk))) {
    throw ArgumentError("pattern_metrics: pattern is identically zero");
  }

  // Main-lobe boundary: first local minimum walking away from the peak; a
  // -60 dB sample counts as a null when the descent never turns around.
  auto boundary = [&](int dir) {
    int i = ipk;
    while (true) {
      const int j = i + dir;
      if (j < 0 || j >= ng) return i;
      if (val(j) > val(i) || val(i) <= -60.0) return i;
      i = j;
    }
  };
  const int lb = boundary(-1);
  const int rb = boundary(+1);

  PatternMetrics m;
  m.peak_deg = ang(ipk);

  double sll = -kInf;
  for (int i = 0; i < ng; ++i) {
    if (i >= lb && i <= rb) continue;
    sll = std::max(sll, val(i));
  }
  if (lb > 0 || rb < ng - 1) m.sll_db = sll;

  // -3 dB crossings, linear interpolation in dB.
  auto crossing = [&](int dir) -> double {
    int i = ipk;
    while (true) {
      const int j = i + dir;
      if (j < 0 || j >= ng) {
        throw ResolutionError("pattern_metrics: -3 dB crossing not bracketed by the grid");
      }
      if (val(j) <= -3.0) {
        const double denom = val(j) - val(i);
        const double t = denom == 0.0 ? 0.0 : (-3.0 - val(i)) / denom;
        return ang(i) + t * (ang(j) - ang(i));
      }
      i = j;
    }
  };
  const double left = crossing(-1);
  const double right = crossing(+1);
  m.hpbw_deg = right - left;

  for (int i = 1; i + 1 < ng; ++i) {
    if (val(i) < val(i - 1) && val(i) <= val(i + 1)) {
      m.null_depths_db.push_back({ang(i), val(i)});
    }
  }
  return m;
}

ParsevalCheck parseval_check(const ArrayGeometry& geom, const Excitation& exc) {
  if (std::abs(geom.spacing_wl - 0.5) > 1e-12) {
    throw UnsupportedConfigError(
        "parseval_check: the per-period identity requires spacing_wl = 0.5");
  }
  if (exc.size() != geom.n_elements) {
    throw DimensionError("parseval_check: excitation length does not match geometry");
  }

  double lhs = 0.0;
  for (const auto& w : exc.weights()) lhs += std::norm(w);

  // |AF(psi)|^2 is a trigonometric polynomial of degree < N, so the uniform
  // rule over one period is exact to roundoff for node counts beyond 2N.
  const int nodes = 1 << 14;
  double rhs = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double psi = 2.0 * kPi * k / nodes;
    const std::complex<double> step = std::polar(1.0, psi);
    std::complex<double> phasor{1.0, 0.0};
    std::complex<double> acc{0.0, 0.0};
    for (int e = 0; e < geom.n_elements; ++e) {
      acc += exc[e] * phasor;
      phasor *= step;
    }
    rhs += std::norm(acc);
  }
  rhs /= nodes;
  return ParsevalCheck{lhs, rhs};
}

}  // namespace beamsynth
