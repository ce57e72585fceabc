#include "finq/decomposition.hpp"

#include <string>

#include "finq/errors.hpp"

namespace finq {

namespace {

// rho(g) x for a permutation matrix: (rho(g) x)_i = x_{i.g}.
CycVector act(const Permutation& g, const CycVector& x) {
  CycVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[g[i]];
  return out;
}

std::vector<CycVector> columns(const CycMatrix& m) {
  std::vector<CycVector> out;
  out.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

// (scale) * sum_g weight(g) rho(g), accumulated entry by entry.
template <typename Weight>
CycMatrix group_algebra_element(const std::vector<Permutation>& images, const Cyclotomic& scale, Weight weight) {
  const std::size_t n = images.empty() ? 0 : images.front().degree();
  std::vector<CyclotomicSum> acc(n * n);
  std::vector<bool> touched(n * n, false);
  for (std::size_t g = 0; g < images.size(); ++g) {
    const Cyclotomic w = weight(g);
    if (w.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t at = i * n + images[g][i];
      acc[at].add(w);
      touched[at] = true;
    }
  }
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (touched[i * n + j]) m(i, j) = scale * acc[i * n + j].value();
    }
  }
  return m;
}

struct Splitter {
  const FiniteGroup& group;
  const std::vector<Permutation>& images;
  const std::vector<Cyclotomic>& character;  // by element index
  std::size_t dimension;

  struct Candidate {
    CycMatrix projector;
  };

  // Eigenprojections E = (1/o) sum_k lambda^{-k} rho(g^k) acting with rank
  // strictly between 0 and d on the irreducible. Rational eigenvalues first.
  std::vector<Candidate> candidates() const {
    std::vector<Candidate> rational, other;
    for (std::size_t g = 1; g < group.order(); ++g) {
      const auto o = group.order_of(g);
      std::vector<std::size_t> powers{0};
      for (std::uint64_t k = 1; k < o; ++k) powers.push_back(group.multiply(powers.back(), g));
      for (std::uint64_t l = 0; l < o; ++l) {
        CyclotomicSum mult;
        std::vector<Cyclotomic> weights(group.order());
        for (std::uint64_t k = 0; k < o; ++k) {
          const auto w = root_of_unity(static_cast<std::uint32_t>(o), -static_cast<std::int64_t>(k * l));
          mult.add_product(w, character[powers[k]]);
          weights[powers[k]] = w;
        }
        const auto m = mult.value() / Cyclotomic(static_cast<long>(o));
        if (m.is_zero() || m == Cyclotomic(static_cast<long>(dimension))) continue;
        auto e = group_algebra_element(images, Cyclotomic(Rational(1, static_cast<long>(o))),
                                       [&](std::size_t x) { return weights[x]; });
        const bool is_rational_eigenvalue = 2 * l == o || l == 0;
        (is_rational_eigenvalue ? rational : other).push_back({std::move(e)});
      }
    }
    rational.insert(rational.end(), std::make_move_iterator(other.begin()), std::make_move_iterator(other.end()));
    return rational;
  }

  // An orthogonal basis of one irreducible copy inside the image of q, which
  // projects onto `copies` copies of the irreducible.
  std::vector<CycVector> one_copy(const CycMatrix& q, std::size_t copies,
                                  const std::vector<Candidate>& cands) const {
    CycMatrix b = q;
    std::size_t r = dimension;
    while (r > 1) {
      bool reduced = false;
      for (const auto& c : cands) {
        for (int side = 0; side < 2 && !reduced; ++side) {
          auto next = side == 0 ? c.projector * b : b * c.projector;
          const auto rk = rank(next);
          if (rk % copies != 0) throw InvariantViolation("eigenprojection rank is not a multiple of the copy count");
          if (rk > 0 && rk / copies < r) {
            b = std::move(next);
            r = rk / copies;
            reduced = true;
          }
        }
        if (reduced) break;
      }
      if (!reduced) throw InvariantViolation("no eigenprojection isolates an irreducible copy");
    }
    CycVector x;
    for (std::size_t j = 0; j < b.cols() && x.empty(); ++j) {
      auto col = b.column(j);
      for (const auto& v : col) {
        if (!v.is_zero()) {
          x = std::move(col);
          break;
        }
      }
    }
    std::vector<CycVector> orbit;
    orbit.reserve(images.size());
    for (const auto& g : images) orbit.push_back(act(g, x));
    auto basis = orthogonal_basis(orbit);
    if (basis.size() != dimension) throw InvariantViolation("orbit span has the wrong dimension");
    return basis;
  }
};

}  // namespace

std::vector<std::size_t> Decomposition::block_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.insert(out.end(), b.multiplicity, b.dimension);
  return out;
}

Decomposition decompose_permutation(const Representation& rep) {
  if (!rep.group) throw InputError("representation without a group");
  return decompose_permutation(rep, character_table(*rep.group));
}

Decomposition decompose_permutation(const Representation& rep, const CharacterTable& table) {
  const auto images = permutation_images(rep);
  if (!rep.group || images.size() != rep.group->order() || images.empty()) {
    throw InputError("not a permutation representation of its group");
  }
  const auto& group = *rep.group;
  const std::size_t n = rep.dimension();
  const long order = static_cast<long>(group.order());

  std::vector<std::size_t> fixed(group.order(), 0);
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (std::size_t i = 0; i < n; ++i) fixed[g] += images[g][i] == i;
  }

  Decomposition dec;
  dec.table = table;
  std::vector<CycVector> basis;
  for (std::size_t j = 0; j < table.size(); ++j) {
    CyclotomicSum inner;
    for (std::size_t g = 0; g < group.order(); ++g) {
      inner.add_product(conj(table.value(j, g)), Cyclotomic(static_cast<long>(fixed[g])));
    }
    const auto mult_value = inner.value() / Cyclotomic(order);
    if (!mult_value.is_rational() || mult_value.rational_value().get_den() != 1 ||
        mult_value.rational_value() < 0) {
      throw InvariantViolation("non-integral multiplicity " + to_string(mult_value));
    }
    const auto mult = static_cast<std::size_t>(mult_value.rational_value().get_num().get_ui());
    if (mult == 0) continue;
    const std::size_t d = table.dimensions[j];

    auto projector = group_algebra_element(images, Cyclotomic(Rational(static_cast<long>(d), order)),
                                           [&](std::size_t g) { return conj(table.value(j, g)); });

    std::vector<CycVector> component;
    if (d == 1 || mult == 1) {
      component = orthogonal_basis(columns(projector));
    } else {
      std::vector<Cyclotomic> character(group.order());
      for (std::size_t g = 0; g < group.order(); ++g) character[g] = table.value(j, g);
      const Splitter splitter{group, images, character, d};
      const auto cands = splitter.candidates();
      CycMatrix q = projector;
      for (std::size_t c = 0; c < mult; ++c) {
        const auto copy = c + 1 == mult ? orthogonal_basis(columns(q)) : splitter.one_copy(q, mult - c, cands);
        if (copy.size() != d) throw InvariantViolation("irreducible copy has the wrong dimension");
        for (const auto& v : copy) {
          const auto inv = inverse(standard_inner(v, v));
          CycMatrix outer(n, n);
          for (std::size_t a = 0; a < n; ++a) {
            if (v[a].is_zero()) continue;
            for (std::size_t b = 0; b < n; ++b) {
              if (!v[b].is_zero()) outer(a, b) = v[a] * conj(v[b]) * inv;
            }
          }
          q = q - outer;
        }
        component.insert(component.end(), copy.begin(), copy.end());
      }
    }
    if (component.size() != d * mult) {
      throw InvariantViolation("component of character " + std::to_string(j) + " has dimension " +
                               std::to_string(component.size()) + ", expected " + std::to_string(d * mult));
    }
    dec.blocks.push_back({j, d, mult, basis.size()});
    dec.projectors.push_back(std::move(projector));
    for (const auto& v : component) basis.push_back(normalized(v));
  }
  if (basis.size() != n) throw InvariantViolation("components do not fill the representation space");
  dec.transform = CycMatrix::from_columns(basis, n);

  const auto dagger = adjoint(dec.transform);
  if (!is_identity(dagger * dec.transform)) throw InvariantViolation("transform is not unitary");
  const auto sizes = dec.block_sizes();
  for (std::size_t g : group.generators()) {
    if (!is_block_diagonal(dagger * rep(g) * dec.transform, sizes)) {
      throw InvariantViolation("transform does not block-diagonalize generator " + to_cycles(group.element(g)));
    }
  }
  return dec;
}

std::vector<std::vector<Cyclotomic>> component_traces(const Decomposition& dec, const Representation& rep) {
  const auto dagger = adjoint(dec.transform);
  const auto& classes = dec.table.classes;
  std::vector<std::vector<Cyclotomic>> out(dec.blocks.size(), std::vector<Cyclotomic>(classes.count()));
  for (std::size_t k = 0; k < classes.count(); ++k) {
    const auto m = dagger * rep(classes.classes[k].representative()) * dec.transform;
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
      const auto& blk = dec.blocks[b];
      CyclotomicSum s;
      for (std::size_t i = blk.offset; i < blk.offset + blk.dimension * blk.multiplicity; ++i) s.add(m(i, i));
      out[b][k] = s.value();
    }
  }
  return out;
}

}  // namespace finq
