#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "finq/class_algebra.hpp"
#include "finq/cyclotomic.hpp"
#include "finq/group.hpp"

namespace finq {

/// Irreducible characters of a finite group, one row per irreducible and one
/// column per conjugacy class (same order as `classes`).
///
/// Rows: trivial character first, then by dimension, ties broken by the
/// floating embeddings of the row in decreasing lexicographic (re, im) order.
struct CharacterTable {
  ClassDecomposition classes;
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::uint64_t> dimensions;
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 1;
  /// Prime used for the modular eigenvector split.
  std::uint64_t prime = 0;

  std::size_t size() const { return rows.size(); }
  /// Character value at a group element.
  const Cyclotomic& value(std::size_t row, std::size_t element) const {
    return rows[row][classes.class_of[element]];
  }
};

/// Smallest prime p = 1 (mod exponent) with p^2 > 4 |G|, searched below 2^20.
/// Throws InvariantViolation when none exists under the bound.
std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent);

/// Character table by Burnside's class-matrix method with Dixon's modular
/// eigenvector split and lifting to cyclotomics at conductor exponent(G).
CharacterTable character_table(const FiniteGroup& group);
CharacterTable character_table(const FiniteGroup& group, const ClassDecomposition& classes,
                               const ClassAlgebra& algebra);

}  // namespace finq
