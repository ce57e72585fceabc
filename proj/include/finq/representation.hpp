#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "finq/group.hpp"
#include "finq/matrix.hpp"
#include "finq/permutation.hpp"
#include "finq/rational.hpp"

namespace finq {

/// rho(p)_ij = 1 exactly when i maps to j. With the right action this gives
/// rho(g h) = rho(g) rho(h).
CycMatrix perm_matrix(const Permutation& p);

/// One matrix per group element, indexed like the group's element list.
struct Representation {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<CycMatrix> matrices;

  std::size_t dimension() const { return matrices.empty() ? 0 : matrices.front().rows(); }
  const CycMatrix& operator()(std::size_t element) const { return matrices.at(element); }
};

/// Natural action of a permutation group on its points.
Representation permutation_representation(std::shared_ptr<const FiniteGroup> group);
/// Action of the parent group on the cosets of a subgroup.
Representation permutation_representation(const CosetAction& action);
/// Right-regular action on the group's own elements (degree |G|).
Representation regular_representation(std::shared_ptr<const FiniteGroup> group);

/// Permutation carried by each matrix when every matrix is a permutation
/// matrix, empty otherwise.
std::vector<Permutation> permutation_images(const Representation& rep);

/// Coefficients (constant term first) of prod_i (x^i - 1)^{k_i}.
std::vector<Integer> char_poly_from_cycle_type(const CycleType& type);

/// Eigenvalues of a permutation matrix: each i-cycle contributes the i-th
/// roots of unity r_i^0, ..., r_i^{i-1}. Cycle lengths ascending.
std::vector<Cyclotomic> perm_eigenvalues(const CycleType& type);

/// (1/|G|) sum_g <U(g)phi, U(g)psi>. Throws InputError on dimension mismatch.
Cyclotomic averaged_inner(const Representation& rep, std::span<const Cyclotomic> phi,
                          std::span<const Cyclotomic> psi);

/// Element-wise T^{-1} M T. Uses T^dagger when T is unitary. Throws
/// DomainError when T is singular or the sizes disagree.
Representation conjugate_by(const CycMatrix& t, const Representation& rep);

/// True when every matrix vanishes outside the diagonal blocks whose sizes
/// are listed in `block_sizes` (which must sum to the dimension).
bool is_block_diagonal(const CycMatrix& m, std::span<const std::size_t> block_sizes);

}  // namespace finq
