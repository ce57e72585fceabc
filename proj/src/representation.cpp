#include "finq/representation.hpp"

#include <numeric>
#include <string>

#include "finq/errors.hpp"

namespace finq {

CycMatrix perm_matrix(const Permutation& p) {
  CycMatrix m(p.degree(), p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) m(i, p[i]) = Cyclotomic(1);
  return m;
}

namespace {

Representation from_images(std::shared_ptr<const FiniteGroup> group,
                           const std::vector<Permutation>& images) {
  Representation rep{std::move(group), {}};
  rep.matrices.reserve(images.size());
  for (const auto& p : images) rep.matrices.push_back(perm_matrix(p));
  return rep;
}

}  // namespace

Representation permutation_representation(std::shared_ptr<const FiniteGroup> group) {
  if (!group) throw InputError("null group");
  return from_images(group, group->elements());
}

Representation permutation_representation(const CosetAction& action) {
  return from_images(action.parent, action.element_images);
}

Representation regular_representation(std::shared_ptr<const FiniteGroup> group) {
  if (!group) throw InputError("null group");
  const std::size_t n = group->order();
  std::vector<Permutation> images;
  images.reserve(n);
  std::vector<std::uint32_t> img(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<std::uint32_t>(group->multiply(x, g));
    images.push_back(Permutation::from_images(img));
  }
  return from_images(group, images);
}

std::vector<Permutation> permutation_images(const Representation& rep) {
  std::vector<Permutation> out;
  const std::size_t n = rep.dimension();
  const Cyclotomic one(1);
  for (const auto& m : rep.matrices) {
    if (m.rows() != n || m.cols() != n) return {};
    std::vector<std::uint32_t> img(n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t ones = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (m(i, j).is_zero()) continue;
        if (m(i, j) != one || hit[j]) return {};
        img[i] = static_cast<std::uint32_t>(j);
        hit[j] = true;
        ++ones;
      }
      if (ones != 1) return {};
    }
    out.push_back(Permutation::from_images(img));
  }
  return out;
}

std::vector<Integer> char_poly_from_cycle_type(const CycleType& type) {
  std::vector<Integer> poly{Integer(1)};
  for (const auto& [length, count] : type.multiplicities) {
    for (std::uint32_t c = 0; c < count; ++c) {
      // poly *= (x^length - 1)
      std::vector<Integer> next(poly.size() + length);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + length] += poly[k];
        next[k] -= poly[k];
      }
      poly = std::move(next);
    }
  }
  return poly;
}

std::vector<Cyclotomic> perm_eigenvalues(const CycleType& type) {
  std::vector<Cyclotomic> out;
  for (const auto& [length, count] : type.multiplicities) {
    for (std::uint32_t c = 0; c < count; ++c) {
      for (std::uint32_t k = 0; k < length; ++k) out.push_back(minimize_conductor(root_of_unity(length, k)));
    }
  }
  return out;
}

Cyclotomic averaged_inner(const Representation& rep, std::span<const Cyclotomic> phi,
                          std::span<const Cyclotomic> psi) {
  if (phi.size() != rep.dimension() || psi.size() != rep.dimension()) {
    throw InputError("vector dimension " + std::to_string(phi.size()) + "/" + std::to_string(psi.size()) +
                     " does not match representation dimension " + std::to_string(rep.dimension()));
  }
  CyclotomicSum total;
  for (const auto& m : rep.matrices) {
    total.add(standard_inner(m * phi, m * psi));
  }
  return total.value() / Cyclotomic(static_cast<long>(rep.matrices.size()));
}

Representation conjugate_by(const CycMatrix& t, const Representation& rep) {
  if (!t.is_square() || t.rows() != rep.dimension()) {
    throw DomainError("transform of size " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                      " does not fit dimension " + std::to_string(rep.dimension()));
  }
  const auto dagger = adjoint(t);
  const auto t_inv = is_identity(dagger * t) ? dagger : inverse(t);
  Representation out{rep.group, {}};
  out.matrices.reserve(rep.matrices.size());
  for (const auto& m : rep.matrices) out.matrices.push_back(t_inv * m * t);
  return out;
}

bool is_block_diagonal(const CycMatrix& m, std::span<const std::size_t> block_sizes) {
  if (!m.is_square() || std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0}) != m.rows()) {
    return false;
  }
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) block_of.insert(block_of.end(), block_sizes[b], b);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (block_of[i] != block_of[j] && !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace finq
