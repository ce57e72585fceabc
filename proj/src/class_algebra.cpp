#include "finq/class_algebra.hpp"

#include <algorithm>
#include <tuple>

#include "finq/errors.hpp"

namespace finq {

ClassDecomposition conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_id(n, kUnassigned);
  std::vector<std::vector<std::size_t>> orbits;

  std::vector<std::pair<Permutation, Permutation>> conjugators;
  for (auto s : group.generators()) {
    conjugators.emplace_back(inverse(group.element(s)), group.element(s));
  }

  for (std::size_t start = 0; start < n; ++start) {
    if (orbit_id[start] != kUnassigned) continue;
    const std::size_t id = orbits.size();
    std::vector<std::size_t> orbit{start};
    orbit_id[start] = id;
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      const auto& x = group.element(orbit[pos]);
      for (const auto& [s_inv, s] : conjugators) {
        const auto idx = group.index_of(s_inv * x * s);
        if (!idx) throw InvariantViolation("conjugate left the group");
        if (orbit_id[*idx] == kUnassigned) {
          orbit_id[*idx] = id;
          orbit.push_back(*idx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<ConjugacyClass> classes;
  for (auto& orbit : orbits) {
    ConjugacyClass k;
    k.element_order = group.order_of(orbit.front());
    k.elements = std::move(orbit);
    classes.push_back(std::move(k));
  }
  // Orbit 0 holds the identity (element 0); keep it first.
  std::sort(classes.begin() + 1, classes.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.element_order, a.size(), a.representative()) <
           std::make_tuple(b.element_order, b.size(), b.representative());
  });

  ClassDecomposition result;
  result.class_of.assign(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (auto e : classes[c].elements) result.class_of[e] = c;
  }
  result.classes = std::move(classes);
  result.inverse_class.resize(result.classes.size());
  for (std::size_t c = 0; c < result.classes.size(); ++c) {
    result.inverse_class[c] = result.class_of[group.inverse_of(result.classes[c].representative())];
  }
  return result;
}

ClassAlgebra class_coefficients(const FiniteGroup& group, const ClassDecomposition& classes) {
  const std::size_t r = classes.count();
  ClassAlgebra algebra(r);
  std::vector<Permutation> inverses;
  inverses.reserve(group.order());
  for (const auto& g : group.elements()) inverses.push_back(inverse(g));

  for (std::size_t k = 0; k < r; ++k) {
    const auto& z = group.element(classes.classes[k].representative());
    for (std::size_t a = 0; a < group.order(); ++a) {
      // b = a^{-1} z, so that a b = z.
      const auto b = group.index_of(inverses[a] * z);
      if (!b) throw InvariantViolation("product left the group");
      ++algebra.at(classes.class_of[a], classes.class_of[*b], k);
    }
  }
  return algebra;
}

}  // namespace finq
