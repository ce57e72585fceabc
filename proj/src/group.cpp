#include "finq/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "finq/errors.hpp"

namespace finq {

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  if (auto it = lookup_.find(p); it != lookup_.end()) return it->second;
  return std::nullopt;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  const auto idx = index_of(compose(elements_.at(a), elements_.at(b)));
  if (!idx) throw InvariantViolation("group is not closed under multiplication");
  return *idx;
}

std::size_t FiniteGroup::inverse_of(std::size_t a) const {
  const auto idx = index_of(inverse(elements_.at(a)));
  if (!idx) throw InvariantViolation("group is not closed under inversion");
  return *idx;
}

std::uint64_t FiniteGroup::order_of(std::size_t a) const { return element_order(elements_.at(a)); }

FiniteGroup generate(std::span<const Permutation> generators, std::size_t cap) {
  if (generators.empty()) throw InputError("at least one generator is required");
  const std::size_t degree = generators.front().degree();
  std::set<Permutation> distinct;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generators have different degrees");
    if (!g.is_identity()) distinct.insert(g);
  }
  const std::vector<Permutation> gens(distinct.begin(), distinct.end());

  FiniteGroup group;
  group.degree_ = degree;
  const auto admit = [&](const Permutation& p) {
    if (group.elements_.size() >= cap) {
      throw CapExceeded("group order exceeds cap of " + std::to_string(cap));
    }
    group.lookup_.emplace(p, group.elements_.size());
    group.elements_.push_back(p);
  };
  admit(Permutation::identity(degree));

  // The first layer is the generators themselves: identity * s needs no product.
  std::size_t layer_begin = group.elements_.size();
  for (const auto& g : gens) admit(g);
  for (const auto& g : gens) group.generators_.push_back(*group.index_of(g));
  std::size_t layer_end = group.elements_.size();

  while (layer_begin < layer_end) {
    std::vector<Permutation> next;
    std::set<Permutation> pending;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : gens) {
        auto product = compose(group.elements_[i], s);
        ++group.closure_multiplications_;
        if (group.lookup_.contains(product) || pending.contains(product)) continue;
        if (group.elements_.size() + pending.size() >= cap) {
          throw CapExceeded("group order exceeds cap of " + std::to_string(cap));
        }
        pending.insert(std::move(product));
      }
    }
    layer_begin = layer_end;
    for (const auto& p : pending) admit(p);
    layer_end = group.elements_.size();
  }
  return group;
}

std::uint64_t exponent(const FiniteGroup& group) {
  std::uint64_t e = 1;
  for (const auto& g : group.elements()) e = std::lcm(e, element_order(g));
  return e;
}

CosetAction coset_action(std::shared_ptr<const FiniteGroup> parent,
                         std::span<const std::size_t> subgroup) {
  const auto& g = *parent;
  std::vector<std::size_t> h(subgroup.begin(), subgroup.end());
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  for (auto x : h) {
    if (x >= g.order()) throw InputError("subgroup element index out of range");
  }
  // Closure check: H must contain the identity and be closed under products.
  if (h.empty() || h.front() != 0) throw InputError("subset does not contain the identity");
  {
    // Grow a generating set greedily; the closure must never leave H.
    std::set<Permutation> members;
    for (auto x : h) members.insert(g.element(x));
    std::vector<Permutation> gens;
    FiniteGroup closure = generate(std::vector<Permutation>{g.element(0)}, 1);
    for (auto x : h) {
      if (closure.index_of(g.element(x))) continue;
      gens.push_back(g.element(x));
      closure = generate(gens, g.order());
      for (const auto& p : closure.elements()) {
        if (!members.contains(p)) throw InputError("subset is not a subgroup");
      }
    }
    if (closure.order() != h.size()) throw InputError("subset is not a subgroup");
  }
  if (g.order() % h.size() != 0) throw InvariantViolation("subgroup order does not divide");

  CosetAction result;
  result.parent = parent;
  result.subgroup = h;
  std::vector<std::size_t> coset_of(g.order(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = result.representatives.size();
    result.representatives.push_back(x);
    for (auto y : h) coset_of[g.multiply(y, x)] = id;
  }
  const std::size_t points = result.representatives.size();
  result.element_images.reserve(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) {
    std::vector<std::uint32_t> images(points);
    for (std::size_t c = 0; c < points; ++c) {
      images[c] = static_cast<std::uint32_t>(coset_of[g.multiply(result.representatives[c], e)]);
    }
    result.element_images.push_back(Permutation::from_images(std::move(images)));
  }
  std::vector<Permutation> gens;
  for (auto s : g.generators()) gens.push_back(result.element_images[s]);
  if (gens.empty()) gens.push_back(Permutation::identity(points));
  result.action = generate(gens, g.order());
  return result;
}

CosetAction coset_action_generated(std::shared_ptr<const FiniteGroup> parent,
                                   std::span<const Permutation> subgroup_generators) {
  std::vector<Permutation> gens(subgroup_generators.begin(), subgroup_generators.end());
  if (gens.empty()) gens.push_back(Permutation::identity(parent->degree()));
  const auto h = generate(gens, parent->order());
  std::vector<std::size_t> indices;
  for (const auto& p : h.elements()) {
    const auto idx = parent->index_of(p);
    if (!idx) throw InputError("subgroup generator " + to_cycles(p) + " is not in the group");
    indices.push_back(*idx);
  }
  return coset_action(std::move(parent), indices);
}

bool is_faithful(const CosetAction& action) {
  std::size_t trivial = 0;
  for (const auto& p : action.element_images) {
    if (p.is_identity()) ++trivial;
  }
  return trivial == 1;
}

}  // namespace finq
