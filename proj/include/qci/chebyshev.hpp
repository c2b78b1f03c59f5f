#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qci/field.hpp"

namespace qci {

/// Dense integer polynomial, coefficient k at index k, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

  static IntPolynomial monomial(std::size_t k, BigInt c = 1) {
    std::vector<BigInt> v(k + 1, 0);
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }
  const std::vector<BigInt>& coefficients() const { return c_; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + IntPolynomial::monomial(0, -1) * b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(v));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  double evaluate(double u) const {
    double acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * u + c_[i].convert_to<double>();
    return acc;
  }

  std::string to_string(const std::string& var = "u") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      BigInt a = abs(c_[i]);
      out += out.empty() ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + ");
      if (a != 1 || i == 0) out += a.str();
      if (i > 0) out += var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// T_n with T_n(cos t) = cos(nt): T_0 = 1, T_1 = u, T_{n+1} = 2u T_n - T_{n-1}.
inline IntPolynomial chebyshev_T(std::size_t n) {
  IntPolynomial prev = IntPolynomial::monomial(0), cur = IntPolynomial::monomial(1);
  if (n == 0) return prev;
  const IntPolynomial two_u = IntPolynomial::monomial(1, 2);
  for (std::size_t k = 1; k < n; ++k) {
    IntPolynomial next = two_u * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// f_n(u) = 2 T_n(u/2): coefficient k of T_n scaled by 2^{1-k}.
inline IntPolynomial normalized_f(std::size_t n) {
  IntPolynomial t = chebyshev_T(n);
  std::vector<BigInt> c(t.coefficients().size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    BigInt v = t.coeff(k) * 2;
    BigInt scale = BigInt(1) << k;
    require(v % scale == 0, ErrorKind::PreconditionFailed, "2 T_n(u/2) is not integral");
    c[k] = v / scale;
  }
  return IntPolynomial(std::move(c));
}

}  // namespace qci
