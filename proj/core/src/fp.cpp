#include "multireg/fp.hpp"

#include <stdexcept>
#include <string>

namespace multireg {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime_u32(p)) {
    throw std::invalid_argument("field modulus must be a prime < 2^31, got " +
                                std::to_string(p));
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t base = a % p_;
  std::uint64_t acc = 1;
  while (e > 0) {
    if (e & 1) acc = (acc * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("inverse of 0 in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

}  // namespace multireg
