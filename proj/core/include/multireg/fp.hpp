#pragma once

#include <cstdint>

namespace multireg {

/// Prime field F_p with a runtime modulus. Elements are canonical
/// representatives in [0, p). The modulus is capped below 2^31 so that
/// sums and products stay inside uint64_t arithmetic.
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime with 2 <= p < 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// a^e by binary exponentiation.
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Multiplicative inverse; throws std::invalid_argument on 0.
  std::uint32_t inv(std::uint32_t a) const;
  /// Canonical representative of an arbitrary signed value.
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

/// Deterministic trial-division primality test for 32-bit inputs.
bool is_prime_u32(std::uint32_t n);

}  // namespace multireg
