#pragma once

#include <cstdint>
#include <vector>

#include "qci/error.hpp"

namespace qci {

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

/// Order of a in (Z/p)^x; 0 when a is not a unit.
constexpr std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  std::uint64_t x = a;
  for (std::uint64_t k = 1; k < p; ++k) {
    if (x == 1) return k;
    x = x * a % p;
  }
  return 0;
}

constexpr std::uint64_t least_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidParameters, "primitive root requested for a non-prime");
  for (std::uint64_t g = 1; g < p; ++g)
    if (multiplicative_order(g, p) == p - 1) return g;
  return 0;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace qci
