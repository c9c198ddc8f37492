// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BEAMSYNTH_ERROR_HPP
#define BEAMSYNTH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace beamsynth {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched vector/matrix sizes (excitation vs geometry, input vs layer, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument value (empty grid, out-of-range angle, bad null count, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a configuration it does not support (e.g. spacing != 0.5 wl).
class UnsupportedConfigError : public Error {
 public:
  using Error::Error;
};

/// Sampling grid too coarse to resolve the requested quantity.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Bundled data failed a checksum or invariant check.
class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

/// Query outside the trained/steerable domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace beamsynth

#endif  // BEAMSYNTH_ERROR_HPP
