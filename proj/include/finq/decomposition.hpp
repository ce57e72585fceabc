#pragma once

#include <cstddef>
#include <vector>

#include "finq/character_table.hpp"
#include "finq/matrix.hpp"
#include "finq/representation.hpp"

namespace finq {

/// One isotypic component: `multiplicity` copies of the irreducible with
/// character-table row `character`, occupying columns
/// [offset, offset + dimension * multiplicity) of the transform.
struct DecompositionBlock {
  std::size_t character = 0;
  std::size_t dimension = 0;
  std::size_t multiplicity = 0;
  std::size_t offset = 0;
};

struct Decomposition {
  CharacterTable table;
  /// Unitary; T^dagger rho(g) T is block diagonal with blocks `block_sizes()`.
  CycMatrix transform;
  /// Components in character-table row order, absent characters omitted.
  std::vector<DecompositionBlock> blocks;
  /// Isotypic projector per entry of `blocks`.
  std::vector<CycMatrix> projectors;

  /// Irreducible block sizes along the diagonal: each dimension repeated
  /// multiplicity times.
  std::vector<std::size_t> block_sizes() const;
};

/// Splits a permutation representation into irreducible invariant subspaces.
///
/// Throws InputError when some matrix is not a permutation matrix,
/// DomainError when a basis vector has an irrational squared norm, and
/// InvariantViolation when the result fails its own unitarity or block
/// checks.
Decomposition decompose_permutation(const Representation& rep);
Decomposition decompose_permutation(const Representation& rep, const CharacterTable& table);

/// Exact traces of the restriction to each component, per class:
/// multiplicity * chi(class) when the decomposition is correct.
std::vector<std::vector<Cyclotomic>> component_traces(const Decomposition& dec, const Representation& rep);

}  // namespace finq
