#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "finq/group.hpp"

namespace finq {

struct ConjugacyClass {
  /// Element indices, ascending. The representative is the first one.
  std::vector<std::size_t> elements;
  std::uint64_t element_order = 1;

  std::size_t representative() const { return elements.front(); }
  std::size_t size() const { return elements.size(); }
};

/// Partition of a group into conjugacy classes. Class 0 is {identity}; the
/// rest are ordered by (element order, class size, smallest element index).
struct ClassDecomposition {
  std::vector<ConjugacyClass> classes;
  /// Class index of every element.
  std::vector<std::size_t> class_of;
  /// Class containing the inverses of each class.
  std::vector<std::size_t> inverse_class;

  std::size_t count() const { return classes.size(); }
};

ClassDecomposition conjugacy_classes(const FiniteGroup& group);

/// Class coefficients: K_i K_j = sum_k c(i,j,k) K_k.
class ClassAlgebra {
 public:
  ClassAlgebra() = default;
  explicit ClassAlgebra(std::size_t classes)
      : count_(classes), coeffs_(classes * classes * classes, 0) {}

  std::size_t count() const { return count_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return coeffs_[(i * count_ + j) * count_ + k];
  }
  std::uint64_t& at(std::size_t i, std::size_t j, std::size_t k) {
    return coeffs_[(i * count_ + j) * count_ + k];
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::uint64_t> coeffs_;
};

/// c(i,j,k) counts pairs (a, b) in K_i x K_j with ab equal to a fixed z in K_k.
ClassAlgebra class_coefficients(const FiniteGroup& group, const ClassDecomposition& classes);

}  // namespace finq
