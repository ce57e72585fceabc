#pragma once

// Stored S3 transformation matrices and generator images, entered by hand.

#include "finq/cyclotomic.hpp"
#include "finq/matrix.hpp"

namespace finq::testing {

inline Cyclotomic r3(long k) { return root_of_unity(3, k); }
inline Cyclotomic inv_sqrt(std::uint64_t d) { return inverse(sqrt_integer(d)); }

inline CycMatrix monomial_transform() {
  const auto s = inv_sqrt(3);
  return s * CycMatrix::from_rows({{1, 1, r3(2)}, {1, r3(2), 1}, {1, r3(1), r3(1)}});
}

inline CycMatrix monomial_transform_inverse() {
  const auto s = inv_sqrt(3);
  return s * CycMatrix::from_rows({{1, 1, 1}, {1, r3(1), r3(2)}, {r3(1), 1, r3(2)}});
}

/// Columns: all-ones, (2,-1,-1)/sqrt6, (0,-1,1)/sqrt2.
inline CycMatrix tribimaximal_transform() {
  const auto a = inv_sqrt(3);
  const auto b = inv_sqrt(6);
  const auto c = inv_sqrt(2);
  const Cyclotomic zero(0);
  return CycMatrix::from_rows({{a, Cyclotomic(2) * b, zero}, {a, -b, -c}, {a, -b, c}});
}

inline CycMatrix p2() { return CycMatrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }
inline CycMatrix p6() { return CycMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}); }

}  // namespace finq::testing
