#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "finq/rational.hpp"

namespace finq {

/// Euler's totient.
std::uint32_t totient(std::uint32_t n);

/// Coefficients of the n-th cyclotomic polynomial in ascending powers.
/// The result is monic of degree totient(n). Requires n >= 1.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

/// An exact element of the cyclotomic field Q(r), r a primitive n-th root of
/// unity, stored as the residue of a polynomial in r modulo the n-th
/// cyclotomic polynomial. `coeffs()[k]` is the coefficient of r^k.
///
/// Arithmetic results are returned at their minimal conductor. Values built by
/// `root_of_unity` or `lifted_to` keep the conductor they were asked for;
/// equality compares values, not representations.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT: integers embed implicitly
  Cyclotomic(const Rational& value);  // NOLINT

  /// Value of sum_k coeffs[k] r_n^k for any number of coefficients; exponents
  /// are taken mod n and the result reduced mod the cyclotomic polynomial.
  /// The conductor stays n.
  static Cyclotomic from_powers(std::uint32_t conductor,
                                const std::vector<Rational>& coeffs);

  /// Direct construction from an already reduced coefficient vector of
  /// length totient(conductor). Throws InputError otherwise.
  static Cyclotomic from_reduced(std::uint32_t conductor,
                                 std::vector<Rational> coeffs);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws DomainError when the value is not rational.
  Rational rational_value() const;

  /// The same value expressed at conductor `n`, a multiple of conductor().
  Cyclotomic lifted_to(std::uint32_t n) const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  Cyclotomic(std::uint32_t conductor, std::vector<Rational> coeffs);

  std::uint32_t conductor_ = 1;
  std::vector<Rational> coeffs_;

  friend class CyclotomicSum;
};

/// Accumulates sums of products at a common conductor and reduces once.
/// Matrix kernels use this to avoid reducing every intermediate term.
class CyclotomicSum {
 public:
  CyclotomicSum() = default;

  void add(const Cyclotomic& a);
  void add_product(const Cyclotomic& a, const Cyclotomic& b);
  /// Adds conj(a) * b.
  void add_conj_product(const Cyclotomic& a, const Cyclotomic& b);

  /// Reduced value at minimal conductor.
  Cyclotomic value() const;

 private:
  void widen(std::uint32_t n);
  void add_term(const Rational& c, std::uint64_t exponent);

  std::uint32_t conductor_ = 1;
  std::vector<Rational> powers_ = std::vector<Rational>(1);
};

/// r_n^k at conductor n.
Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);

/// Complex conjugation r^k -> r^(n-k).
Cyclotomic conj(const Cyclotomic& a);

/// Galois automorphism r -> r^k; k must be coprime to the conductor.
Cyclotomic galois(const Cyclotomic& a, std::int64_t k);

/// a * conj(a).
Cyclotomic abs_squared(const Cyclotomic& a);

/// Multiplicative inverse; throws DomainError for zero.
Cyclotomic inverse(const Cyclotomic& a);

/// Non-negative square root of a non-negative integer, built from quadratic
/// Gauss sums.
Cyclotomic sqrt_integer(std::uint64_t d);

/// Non-negative square root of a non-negative rational.
Cyclotomic sqrt_rational(const Rational& q);

/// The same value at the smallest conductor that contains it.
Cyclotomic minimize_conductor(const Cyclotomic& a);

/// Embedding with r_n -> exp(2 pi i / n). Diagnostics only.
std::complex<double> to_float(const Cyclotomic& a);

/// Human readable form, e.g. "1/2 + r3 - 2*r3^2".
std::string to_string(const Cyclotomic& a);

}  // namespace finq
