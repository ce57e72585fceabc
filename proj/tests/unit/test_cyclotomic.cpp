#include <doctest.h>

#include <random>
#include <vector>

#include "finq/cyclotomic.hpp"
#include "finq/errors.hpp"

using finq::Cyclotomic;
using finq::Rational;

namespace {

Cyclotomic r(std::uint32_t n, std::int64_t k = 1) { return finq::root_of_unity(n, k); }

// Random element at conductor n: small integer combination of powers of r_n
// divided by a small denominator.
Cyclotomic random_cyclotomic(std::mt19937& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c(n);
  for (auto& x : c) x = Rational(coeff(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return finq::minimize_conductor(Cyclotomic::from_powers(n, c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(finq::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(finq::cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(finq::cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of magnitude 2.
  const auto p105 = finq::cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
  for (std::uint32_t n = 1; n <= 60; ++n) {
    const auto p = finq::cyclotomic_polynomial(n);
    CHECK(p.size() == finq::totient(n) + 1);
    CHECK(p.back() == 1);
  }
  CHECK_THROWS_AS(finq::cyclotomic_polynomial(0), finq::DomainError);
}

TEST_CASE("roots of unity") {
  CHECK(r(1, 0) == Cyclotomic(1));
  CHECK(r(3, 3) == Cyclotomic(1));
  CHECK(r(4) * r(4) == Cyclotomic(-1));
  CHECK(r(3).conductor() == 3);
  for (std::uint32_t n = 1; n <= 30; ++n) {
    const auto z = r(n);
    Cyclotomic power(1);
    for (std::uint32_t j = 1; j <= n; ++j) {
      power *= z;
      if (j < n) CHECK_MESSAGE(power != Cyclotomic(1), "n=" << n << " j=" << j);
    }
    CHECK(power == Cyclotomic(1));
    for (std::int64_t k = -3; k <= static_cast<std::int64_t>(n); ++k) {
      Cyclotomic q(1);
      for (std::uint32_t j = 0; j < n; ++j) q *= r(n, k);
      CHECK(q == Cyclotomic(1));
    }
  }
}

TEST_CASE("products and negatives at conductor 3") {
  CHECK(r(3) * r(3, 2) == Cyclotomic(1));
  CHECK(r(3, 2) * r(3, 2) == r(3));
  const auto s = r(3) + r(3, 2);
  CHECK(s * s == Cyclotomic(1));
  CHECK(s == Cyclotomic(-1));
  CHECK(Cyclotomic(1) + -Cyclotomic(1) == Cyclotomic(0));
  CHECK((Cyclotomic(1) + r(3) + r(3, 2)).is_zero());
  CHECK(-Cyclotomic(1) == r(3) + r(3, 2));
}

TEST_CASE("conjugation and modulus") {
  CHECK(finq::conj(r(3)) == r(3, 2));
  CHECK(finq::conj(Cyclotomic(5)) == Cyclotomic(5));
  const auto sqrt2 = r(8) - r(8, 3);
  CHECK(finq::conj(sqrt2) == r(8, 7) - r(8, 5));
  CHECK(finq::conj(sqrt2) == sqrt2);
  CHECK(finq::abs_squared(r(3)) == Cyclotomic(1));
  CHECK(finq::abs_squared(Cyclotomic(1) + r(4)) == Cyclotomic(2));
  CHECK(finq::abs_squared(Cyclotomic(0)).is_zero());
}

TEST_CASE("square roots of integers") {
  CHECK(finq::sqrt_integer(0) == Cyclotomic(0));
  CHECK(finq::sqrt_integer(1) == Cyclotomic(1));
  CHECK(finq::sqrt_integer(4) == Cyclotomic(2));
  CHECK(finq::sqrt_integer(4).conductor() == 1);
  const auto s3 = finq::sqrt_integer(3);
  CHECK(s3.conductor() == 12);
  CHECK(s3 * s3 == Cyclotomic(3));
  for (std::uint64_t d = 0; d <= 50; ++d) {
    const auto s = finq::sqrt_integer(d);
    CHECK_MESSAGE(s * s == Cyclotomic(static_cast<long>(d)), "d=" << d);
    const auto z = finq::to_float(s);
    CHECK(z.real() >= 0.0);
    CHECK(z.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(z.real() == doctest::Approx(std::sqrt(static_cast<double>(d))).epsilon(1e-12));
  }
  const auto half = finq::sqrt_rational(Rational(2, 3));
  CHECK(half * half == Cyclotomic(Rational(2, 3)));
  CHECK_THROWS_AS(finq::sqrt_rational(Rational(-1)), finq::DomainError);
}

TEST_CASE("conductor minimization") {
  const auto minus_one = finq::minimize_conductor(r(6, 3));
  CHECK(minus_one.conductor() == 1);
  CHECK(minus_one == Cyclotomic(-1));
  const auto lifted = r(3).lifted_to(12);
  CHECK(lifted.conductor() == 12);
  CHECK(lifted == r(3));
  const auto back = finq::minimize_conductor(lifted);
  CHECK(back.conductor() == 3);
  CHECK(back.coeffs() == r(3).coeffs());
  const auto frac = Cyclotomic(Rational(2, 7)).lifted_to(5);
  CHECK(frac.conductor() == 5);
  CHECK(finq::minimize_conductor(frac).conductor() == 1);
  CHECK(finq::minimize_conductor(frac) == Cyclotomic(Rational(2, 7)));
  // r6 = -r3^2 lives in conductor 3.
  CHECK(finq::minimize_conductor(r(6)).conductor() == 3);
  // sqrt(2) lives at conductor 8 even when built at 24.
  CHECK(finq::minimize_conductor(finq::sqrt_integer(2).lifted_to(24)).conductor() == 8);
}

TEST_CASE("minimization is idempotent and value preserving") {
  std::mt19937 rng(11);
  const std::vector<std::uint32_t> conductors{1, 3, 4, 5, 8, 12, 15, 24};
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = conductors[trial % conductors.size()];
    auto a = random_cyclotomic(rng, n);
    const auto big = a.lifted_to(n * 6);
    const auto m1 = finq::minimize_conductor(big);
    const auto m2 = finq::minimize_conductor(m1);
    CHECK(m1.conductor() == m2.conductor());
    CHECK(m1.coeffs() == m2.coeffs());
    const auto common = std::lcm(m1.conductor(), big.conductor());
    CHECK(m1.lifted_to(common).coeffs() == big.lifted_to(common).coeffs());
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(2024);
  const std::vector<std::uint32_t> conductors{1, 3, 4, 5, 8, 12};
  std::uniform_int_distribution<std::size_t> pick(0, conductors.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_cyclotomic(rng, conductors[pick(rng)]);
    const auto b = random_cyclotomic(rng, conductors[pick(rng)]);
    const auto c = random_cyclotomic(rng, conductors[pick(rng)]);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(finq::conj(finq::conj(a)) == a);
    const auto m = finq::abs_squared(a);
    REQUIRE(finq::conj(m) == m);
  }
}

TEST_CASE("inverse and division") {
  std::mt19937 rng(7);
  for (std::uint32_t n : {3u, 4u, 5u, 8u, 12u}) {
    for (int i = 0; i < 10; ++i) {
      const auto a = random_cyclotomic(rng, n);
      if (a.is_zero()) continue;
      CHECK(a * finq::inverse(a) == Cyclotomic(1));
    }
  }
  CHECK_THROWS_AS(finq::inverse(Cyclotomic(0)), finq::DomainError);
  CHECK(Cyclotomic(1) / finq::sqrt_integer(3) * finq::sqrt_integer(3) == Cyclotomic(1));
}

TEST_CASE("floating embedding") {
  CHECK(finq::to_float(Cyclotomic(1)).real() == doctest::Approx(1.0));
  const auto i = finq::to_float(r(4));
  CHECK(i.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(i.imag() == doctest::Approx(1.0));
  CHECK(std::abs(finq::to_float(finq::sqrt_integer(2)).real() - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("text rendering") {
  CHECK(finq::to_string(Cyclotomic(0)) == "0");
  CHECK(finq::to_string(Cyclotomic(Rational(-2, 3))) == "-2/3");
  CHECK(finq::to_string(r(3)) == "r3");
  CHECK(finq::to_string(Cyclotomic(1) - r(5, 2) * Cyclotomic(2)) == "1 - 2*r5^2");
}
