#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multireg {

/// Bad run configuration (CLI arguments, desk-scale caps, malformed input files).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A randomized search for a generic object exhausted its retry budget.
/// Carries the field modulus and seed so the failure is reproducible.
class GenericityError : public std::runtime_error {
 public:
  GenericityError(const std::string& what, std::uint32_t p, std::uint64_t seed)
      : std::runtime_error(what + " (p=" + std::to_string(p) +
                           ", seed=" + std::to_string(seed) + ")"),
        p_(p),
        seed_(seed) {}

  std::uint32_t p() const { return p_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint32_t p_;
  std::uint64_t seed_;
};

/// The Hilbert function had not yet agreed with its interpolant at the
/// verification degree, so the fitted polynomial cannot be trusted.
class StabilizationError : public std::runtime_error {
 public:
  explicit StabilizationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace multireg
