#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qci/error.hpp"

namespace qci {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A coefficient domain is a small value object that owns the arithmetic;
// scalars are plain values and carry no back-pointer to their domain.
template <typename F>
concept Field = std::equality_comparable<F> && requires(const F& f, const typename F::value_type& a,
                                                        long long n) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

/// The prime field F_p, residues stored in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    require(p >= 2 && p < (1u << 31), ErrorKind::InvalidParameters, "modulus out of range");
  }

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }

  value_type from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }

  value_type pow(value_type a, std::uint64_t e) const noexcept {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  value_type inv(value_type a) const {
    require(a != 0, ErrorKind::DomainMismatch, "inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  bool is_zero(value_type a) const noexcept { return a == 0; }
  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Exact rationals, always normalised (lowest terms, positive denominator).
class RationalField {
 public:
  using value_type = Rational;

  std::uint64_t characteristic() const noexcept { return 0; }

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type from_int(long long n) const { return Rational(n); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    require(a != 0, ErrorKind::DomainMismatch, "inverse of zero in Q");
    return 1 / a;
  }

  bool is_zero(const value_type& a) const { return a == 0; }
  std::string to_string(const value_type& a) const { return a.str(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

}  // namespace qci
