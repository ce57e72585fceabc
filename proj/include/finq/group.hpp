#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "finq/permutation.hpp"

namespace finq {

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// A finite permutation group with every element enumerated.
///
/// Element 0 is the identity. The remaining elements appear breadth-first
/// from the generators: layer k+1 holds the new products x*s for x in layer
/// k, sorted by image sequence. The order therefore depends only on the set
/// of generators.
class FiniteGroup {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Permutation>& elements() const { return elements_; }
  /// Element indices of the distinct non-identity generators.
  const std::vector<std::size_t>& generators() const { return generators_; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  /// Index of element(a) * element(b).
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse_of(std::size_t a) const;
  std::uint64_t order_of(std::size_t a) const;

  /// Number of permutation products spent during closure.
  std::uint64_t closure_multiplications() const { return closure_multiplications_; }

 private:
  friend FiniteGroup generate(std::span<const Permutation> generators, std::size_t cap);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> generators_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> lookup_;
  std::uint64_t closure_multiplications_ = 0;
};

/// Enumerates the group generated by `generators`. Throws InputError for an
/// empty set or mixed degrees and CapExceeded beyond `cap` elements.
FiniteGroup generate(std::span<const Permutation> generators, std::size_t cap = kDefaultGroupCap);

/// lcm of all element orders.
std::uint64_t exponent(const FiniteGroup& group);

/// Action of a group on the right cosets Hx of a subgroup H.
struct CosetAction {
  std::shared_ptr<const FiniteGroup> parent;
  /// Element indices of H in the parent, ascending.
  std::vector<std::size_t> subgroup;
  /// Coset representative (parent element index) per point, ascending.
  std::vector<std::size_t> representatives;
  /// Permutation of the cosets induced by each parent element.
  std::vector<Permutation> element_images;
  /// Image group, of degree [G:H].
  FiniteGroup action;

  std::size_t degree() const { return representatives.size(); }
};

/// Throws InputError when `subgroup` is not a subgroup of the parent.
CosetAction coset_action(std::shared_ptr<const FiniteGroup> parent,
                         std::span<const std::size_t> subgroup);

/// Same, with H given by generators that must lie in the parent.
CosetAction coset_action_generated(std::shared_ptr<const FiniteGroup> parent,
                                   std::span<const Permutation> subgroup_generators);

/// True when only the identity acts trivially on the cosets.
bool is_faithful(const CosetAction& action);

}  // namespace finq
