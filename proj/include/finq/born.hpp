#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "finq/cyclotomic.hpp"
#include "finq/rational.hpp"

namespace finq {

/// Multiplicities of occurrence of each point: a vector of natural numbers.
using NatState = std::vector<std::uint64_t>;

Integer linear_invariant(const NatState& n);
/// Throws InputError on length mismatch.
Integer quadratic_invariant(const NatState& m, const NatState& n);

struct InvariantPair {
  Integer linear;
  Integer quadratic;
};
/// (L(n), Q(n, n)).
InvariantPair invariants(const NatState& n);

/// (sum m_i n_i)^2 / (sum m_i^2 sum n_i^2). Throws DomainError for a zero vector.
Rational born_full(const NatState& m, const NatState& n);

/// sum_{i<j} |phi_i psi_j - phi_j psi_i|^2.
Cyclotomic grassmann_norm_squared(std::span<const Cyclotomic> phi, std::span<const Cyclotomic> psi);

/// |<phi|psi>|^2 / (|<phi|psi>|^2 + |phi ^ psi|^2). A real cyclotomic,
/// rational whenever the entries are Gaussian or Eisenstein rationals.
Cyclotomic born_symmetric(std::span<const Cyclotomic> phi, std::span<const Cyclotomic> psi);
Rational born_symmetric(const NatState& m, const NatState& n);

/// Inner product of the projections onto the complement of the all-ones
/// vector: Q(m, n) - L(m) L(n) / N. Requires N >= 2.
Rational complement_inner(const NatState& m, const NatState& n);

/// Born probability inside the all-ones complement. Throws DomainError when
/// either vector is uniform (zero projection).
Rational born_complement(const NatState& m, const NatState& n);

bool is_uniform(const NatState& n);

struct InterferencePair {
  NatState m;
  NatState n;
  friend auto operator<=>(const InterferencePair&, const InterferencePair&) = default;
};

/// Pairs of non-uniform vectors with entries in [0, bound] and
/// N Q(m, n) = L(m) L(n), both orderings kept, sorted lexicographically.
/// The search is split across `jobs` threads; the result does not depend on
/// the thread count. Throws InputError for N < 2 or bound < 1 and
/// CapExceeded when more than 2^32 pairs would be examined.
std::vector<InterferencePair> interference_solutions(std::size_t degree, std::uint64_t bound,
                                                     unsigned jobs = 1);

/// Cyclic invariants of length-3 states: C = m1 n3 + m2 n1 + m3 n2 and
/// C' = m1 n2 + m2 n3 + m3 n1.
struct C3Invariants {
  Integer c;
  Integer c_prime;
};
C3Invariants c3_invariants(const NatState& m, const NatState& n);

/// (1/3)(Q + r C + r^2 C'): the inner product of the projections onto the
/// eigenvector (1, r, r^2)/sqrt3 of the 3-cycle. Generally irrational.
Cyclotomic c3_subspace_inner(const NatState& m, const NatState& n);

/// Its squared modulus, (1/9)(Q(m,m) - C(m,m))(Q(n,n) - C(n,n)).
Rational c3_born_subspace(const NatState& m, const NatState& n);

}  // namespace finq
