// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BEAMSYNTH_RNG_HPP
#define BEAMSYNTH_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace beamsynth {

/// Deterministic RNG wrapper. std::mt19937_64 output is specified by the
/// standard, but the distribution adapters are not, so the mappings to
/// doubles and index ranges are done explicitly to keep every seeded run
/// bit-reproducible across toolchains.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1), 53-bit resolution.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  /// Uniform index in [0, n). Modulo bias is irrelevant here; determinism is not.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace beamsynth

#endif  // BEAMSYNTH_RNG_HPP
