// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamsynth/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "beamsynth/error.hpp"

namespace beamsynth {

namespace {

constexpr int kQuadratureNodes = 1 << 14;

std::vector<std::complex<double>> normalize_unit_amplitude_sum(
    std::vector<std::complex<double>> w) {
  double s = 0.0;
  for (const auto& v : w) s += std::abs(v);
  if (s == 0.0) throw ArgumentError("synthesis: excitation is identically zero");
  for (auto& v : w) v /= s;
  return w;
}

/// Coefficients of prod_i (z - roots[i]), ascending powers of z.
std::vector<std::complex<double>> expand_roots(const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

DesiredPattern::DesiredPattern(double steer, double width, SectorShape s, double taper)
    : steer_deg(steer), width_u(width), shape(s), edge_taper(taper) {
  if (!(steer > 0.0 && steer < 180.0)) {
    throw ArgumentError("DesiredPattern: steer_deg must lie in (0, 180)");
  }
  if (!(width > 0.0 && width <= 2.0)) {
    throw ArgumentError("DesiredPattern: width_u must lie in (0, 2]");
  }
  if (s == SectorShape::kRaisedCosineEdge && !(taper > 0.0 && taper <= 1.0)) {
    throw ArgumentError("DesiredPattern: edge_taper must lie in (0, 1]");
  }
}

double DesiredPattern::steer_u() const { return std::cos(deg2rad(steer_deg)); }

double DesiredPattern::magnitude(double u) const {
  const double half = width_u / 2.0;
  const double x = std::abs(u - steer_u());
  if (shape == SectorShape::kSector) {
    return x <= half ? 1.0 : 0.0;
  }
  const double taper_len = edge_taper * half;
  const double flat = half - taper_len;
  if (x <= flat) return 1.0;
  if (x <= half) {
    const double c = std::cos(0.5 * kPi * (x - flat) / taper_len);
    return c * c;
  }
  return 0.0;
}

Excitation fourier_weights(const ArrayGeometry& geom, const DesiredPattern& desired) {
  if (std::abs(geom.spacing_wl - 0.5) > 1e-12) {
    throw UnsupportedConfigError(
        "fourier_weights: Fourier-series inversion requires spacing_wl = 0.5");
  }
  const int n = geom.n_elements;
  const double kd = geom.kd();
  const double center = (n - 1) / 2.0;

  // w_m = (1/2pi) * integral over [-pi, pi] of D(psi/kd) * exp(-j*m*psi),
  // with m centered on the array midpoint (half-integers for even N).
  std::vector<std::complex<double>> w(static_cast<std::size_t>(n), 0.0);
  const double h = 2.0 * kPi / kQuadratureNodes;
  for (int k = 0; k <= kQuadratureNodes; ++k) {
    const double psi = -kPi + h * k;
    const double d = desired.magnitude(psi / kd);
    if (d == 0.0) continue;
    const double weight = (k == 0 || k == kQuadratureNodes) ? 0.5 : 1.0;
    for (int e = 0; e < n; ++e) {
      const double m = e - center;
      w[static_cast<std::size_t>(e)] += weight * d * std::polar(1.0, -m * psi);
    }
  }
  for (auto& v : w) v *= h / (2.0 * kPi);
  return Excitation(normalize_unit_amplitude_sum(std::move(w)));
}

std::pair<Excitation, WlSampleSet> woodward_lawson(const ArrayGeometry& geom,
                                                   const DesiredPattern& desired) {
  const int n = geom.n_elements;
  const double nd = geom.n_elements * geom.spacing_wl;  // aperture length in wavelengths
  const double kd = geom.kd();
  const double center = (n - 1) / 2.0;

  const int m_max = static_cast<int>(std::floor(nd + 1e-9));
  WlSampleSet set;
  set.m_max = m_max;
  for (int m = -m_max; m <= m_max; ++m) {
    const double u = m / nd;
    if (u < -1.0 - 1e-12 || u > 1.0 + 1e-12) continue;
    // u = -1 aliases u = +1 at half-wave spacing; keep the +m representative.
    if (m == -m_max && std::abs(u + 1.0) < 1e-12 && std::abs(m_max / nd - 1.0) < 1e-12) continue;
    const double uc = std::clamp(u, -1.0, 1.0);
    set.samples.push_back({m, rad2deg(std::acos(uc)), desired.magnitude(uc)});
  }

  std::vector<std::complex<double>> w(static_cast<std::size_t>(n), 0.0);
  for (int e = 0; e < n; ++e) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& s : set.samples) {
      const double u = std::cos(deg2rad(s.theta_deg));
      acc += s.b * std::polar(1.0, -kd * (e - center) * u);
    }
    w[static_cast<std::size_t>(e)] = acc / static_cast<double>(n);
  }
  return {Excitation(std::move(w)), std::move(set)};
}

Excitation schelkunoff_weights(const ArrayGeometry& geom,
                               const std::vector<double>& null_angles_deg) {
  if (static_cast<int>(null_angles_deg.size()) != geom.n_elements - 1) {
    throw ArgumentError("schelkunoff_weights: need exactly N-1 null angles");
  }
  std::vector<std::complex<double>> roots;
  roots.reserve(null_angles_deg.size());
  for (double a : null_angles_deg) {
    if (!(a > 0.0 && a < 180.0)) {
      throw ArgumentError("schelkunoff_weights: null angles must lie in (0, 180)");
    }
    roots.push_back(std::polar(1.0, geom.kd() * std::cos(deg2rad(a))));
  }
  return Excitation(normalize_unit_amplitude_sum(expand_roots(roots)));
}

ChebyshevSpec::ChebyshevSpec(double sll) : sll_db(sll) {
  if (!(sll <= -10.0)) throw ArgumentError("ChebyshevSpec: sll_db must be <= -10");
}

TaylorSpec::TaylorSpec(double sll, int nbar) : sll_db(sll), n_bar(nbar) {
  if (!(sll <= -10.0)) throw ArgumentError("TaylorSpec: sll_db must be <= -10");
  if (nbar < 2) throw ArgumentError("TaylorSpec: n_bar must be >= 2");
}

namespace {

/// psi-space zeros of the Dolph-Chebyshev pattern T_{N-1}(x0 cos(psi/2)).
std::vector<double> chebyshev_psi_zeros(int n, double sll_db) {
  const double ratio = std::pow(10.0, -sll_db / 20.0);
  const double x0 = std::cosh(std::acosh(ratio) / (n - 1));
  std::vector<double> psi;
  psi.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    const double xk = std::cos((2.0 * k - 1.0) * kPi / (2.0 * (n - 1)));
    psi.push_back(2.0 * std::acos(std::clamp(xk / x0, -1.0, 1.0)));
  }
  return psi;  // in (0, 2pi), conjugate-paired about pi
}

}  // namespace

Excitation chebyshev_weights(const ArrayGeometry& geom, const ChebyshevSpec& spec) {
  const int n = geom.n_elements;
  if (n < 3) throw ArgumentError("chebyshev_weights: need N >= 3");
  std::vector<std::complex<double>> roots;
  for (double psi : chebyshev_psi_zeros(n, spec.sll_db)) {
    roots.push_back(std::polar(1.0, psi));
  }
  auto coeff = expand_roots(roots);
  // Conjugate-paired roots make the coefficients real; drop the residual
  // imaginary roundoff so downstream symmetry checks are exact.
  std::vector<std::complex<double>> w(coeff.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) w[i] = coeff[i].real();
  // Enforce the exact even symmetry of the Dolph taper.
  const std::size_t sz = w.size();
  for (std::size_t i = 0; i < sz / 2; ++i) {
    const double avg = 0.5 * (w[i].real() + w[sz - 1 - i].real());
    w[i] = avg;
    w[sz - 1 - i] = avg;
  }
  return Excitation(normalize_unit_amplitude_sum(std::move(w)));
}

std::vector<double> chebyshev_null_angles(const ArrayGeometry& geom, const ChebyshevSpec& spec) {
  std::vector<double> out;
  for (double psi : chebyshev_psi_zeros(geom.n_elements, spec.sll_db)) {
    const double principal = psi <= kPi ? psi : psi - 2.0 * kPi;
    const double u = principal / geom.kd();
    if (u < -1.0 || u > 1.0) {
      throw UnsupportedConfigError(
          "chebyshev_null_angles: design nulls fall outside the visible region");
    }
    out.push_back(rad2deg(std::acos(u)));
  }
  return out;
}

Excitation taylor_weights(const ArrayGeometry& geom, const TaylorSpec& spec) {
  const int n = geom.n_elements;
  if (n < 3) throw ArgumentError("taylor_weights: need N >= 3");
  if (spec.n_bar >= n / 2) throw ArgumentError("taylor_weights: n_bar must be < N/2");

  const double ratio = std::pow(10.0, -spec.sll_db / 20.0);
  const double a = std::acosh(ratio) / kPi;
  const int nbar = spec.n_bar;
  const double sigma2 = nbar * nbar / (a * a + (nbar - 0.5) * (nbar - 0.5));

  auto space_factor = [&](int mm) {
    double num = 1.0;
    for (int k = 1; k < nbar; ++k) {
      num *= 1.0 - mm * mm / (sigma2 * (a * a + (k - 0.5) * (k - 0.5)));
    }
    double den = 1.0;
    for (int k = 1; k < nbar; ++k) {
      if (k != mm) den *= 1.0 - static_cast<double>(mm * mm) / (k * k);
    }
    return (mm % 2 == 1 ? 0.5 : -0.5) * num / den;
  };

  std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    const double p = (2.0 * e - n + 1.0) / n;  // element center in [-1, 1]
    double g = 1.0;
    for (int mm = 1; mm < nbar; ++mm) {
      g += 2.0 * space_factor(mm) * std::cos(kPi * mm * p);
    }
    w[static_cast<std::size_t>(e)] = g;
  }
  return Excitation(normalize_unit_amplitude_sum(std::move(w)));
}

std::vector<MethodRow> compare_methods(const ArrayGeometry& geom, const DesiredPattern& desired,
                                       const CompareSpecs& specs, const AngleGrid& grid) {
  std::vector<MethodRow> rows;
  auto add = [&](const std::string& name, const Excitation& exc) {
    rows.push_back({name, pattern_metrics(array_factor(geom, exc, grid))});
  };

  add("fourier", fourier_weights(geom, desired));

  const DesiredPattern wl_desired =
      specs.wl_desired.value_or(DesiredPattern(desired.steer_deg, kCompareWlWidthU,
                                               SectorShape::kRaisedCosineEdge, 1.0));
  add("woodward-lawson", woodward_lawson(geom, wl_desired).first);

  const std::vector<double> nulls =
      specs.schelkunoff_nulls.value_or(chebyshev_null_angles(geom, specs.chebyshev));
  add("schelkunoff", schelkunoff_weights(geom, nulls));

  add("chebyshev", chebyshev_weights(geom, specs.chebyshev));
  add("taylor", taylor_weights(geom, specs.taylor));
  return rows;
}

}  // namespace beamsynth
