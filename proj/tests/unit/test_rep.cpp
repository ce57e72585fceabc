#include <doctest.h>

#include <numeric>

#include "finq/decomposition.hpp"
#include "finq/errors.hpp"
#include "finq/representation.hpp"
#include "support/fixtures.hpp"
#include "support/groups.hpp"

using namespace finq;
using finq::testing::r3;
using finq::testing::shared_group;

namespace {

CycMatrix diag_blocks(const Cyclotomic& a, const CycMatrix& b) {
  CycMatrix m(1 + b.rows(), 1 + b.cols());
  m(0, 0) = a;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m(i + 1, j + 1) = b(i, j);
  }
  return m;
}

// det(x I - M) for integer matrices, by Laplace expansion over polynomial
// entries (constant term first). Independent of the cycle-type formula.
using Poly = std::vector<Integer>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_add(Poly a, const Poly& b, int sign) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

Poly det(const std::vector<std::vector<Poly>>& m) {
  if (m.size() == 1) return m[0][0];
  Poly total{Integer(0)};
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    total = poly_add(total, poly_mul(m[0][c], det(minor)), c % 2 == 0 ? 1 : -1);
  }
  return total;
}

Poly char_poly_by_determinant(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly{Integer(0)}));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = Poly{Integer(0), Integer(1)};
    m[i][p[i]] = poly_add(m[i][p[i]], Poly{Integer(1)}, -1);
  }
  return det(m);
}

Poly ints(std::initializer_list<long> xs) {
  Poly out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("permutation matrices") {
  CHECK(perm_matrix(parse_cycles("(2,3)", 3)) == finq::testing::p2());
  CHECK(perm_matrix(parse_cycles("(1,3,2)", 3)) == finq::testing::p6());
  CHECK(is_identity(perm_matrix(Permutation::identity(4))));
  const auto a = parse_cycles("(1,2)", 3);
  const auto b = parse_cycles("(1,2,3)", 3);
  CHECK(perm_matrix(a * b) == perm_matrix(a) * perm_matrix(b));
}

TEST_CASE("regular representation") {
  const auto s3 = shared_group(3, {"(2,3)", "(1,3,2)"});
  const auto reg = regular_representation(s3);
  REQUIRE(reg.matrices.size() == 6);
  CHECK(reg.dimension() == 6);
  CHECK(is_identity(reg(0)));
  for (std::size_t g = 1; g < 6; ++g) CHECK(trace(reg(g)) == Cyclotomic(0));
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h) CHECK(reg(g) * reg(h) == reg(s3->multiply(g, h)));
  }
  const auto trivial = regular_representation(shared_group(1, {"()"}));
  REQUIRE(trivial.matrices.size() == 1);
  CHECK(trivial(0) == CycMatrix::identity(1));
}

TEST_CASE("characteristic polynomials from cycle types") {
  CHECK(char_poly_from_cycle_type(cycle_type(Permutation::identity(3))) == ints({-1, 3, -3, 1}));
  CHECK(char_poly_from_cycle_type(cycle_type(parse_cycles("(1,2,3)", 3))) == ints({-1, 0, 0, 1}));
  CHECK(char_poly_from_cycle_type(cycle_type(parse_cycles("(2,3)", 3))) == ints({1, -1, -1, 1}));
  // det(xI - P) = prod (x^i - 1)^{k_i} for every element of S4 and D4.
  for (const auto& named : finq::testing::standard_suite()) {
    for (const auto& p : named.group.elements()) {
      CHECK(char_poly_from_cycle_type(cycle_type(p)) == char_poly_by_determinant(p));
    }
  }
}

TEST_CASE("permutation eigenvalues") {
  const auto e23 = perm_eigenvalues(cycle_type(parse_cycles("(2,3)", 3)));
  CHECK(e23 == std::vector<Cyclotomic>{1, 1, -1});
  const auto e132 = perm_eigenvalues(cycle_type(parse_cycles("(1,3,2)", 3)));
  CHECK(e132 == std::vector<Cyclotomic>{1, r3(1), r3(2)});
  CHECK(perm_eigenvalues(cycle_type(Permutation::identity(5))) == std::vector<Cyclotomic>(5, Cyclotomic(1)));
  // Each eigenvalue is a root of the characteristic polynomial.
  const auto p = parse_cycles("(1,2)(3,4,5)", 5);
  const auto poly = char_poly_from_cycle_type(cycle_type(p));
  for (const auto& lambda : perm_eigenvalues(cycle_type(p))) {
    Cyclotomic value(0);
    Cyclotomic power(1);
    for (const auto& c : poly) {
      value += Cyclotomic(Rational(c)) * power;
      power *= lambda;
    }
    CHECK(value.is_zero());
  }
}

TEST_CASE("inner products") {
  const CycVector e1{1, 0, 0};
  const CycVector e2{0, 1, 0};
  CHECK(standard_inner(e1, e1) == Cyclotomic(1));
  CHECK(standard_inner(e1, e2) == Cyclotomic(0));
  CHECK(standard_inner(CycVector{1, r3(1)}, CycVector{r3(1), 1}) == Cyclotomic(-1));
  CHECK_THROWS_AS(standard_inner(e1, CycVector{1, 0}), InputError);

  const auto s3 = shared_group(3, {"(2,3)", "(1,3,2)"});
  const auto rep = permutation_representation(s3);
  const CycVector phi{1, r3(1), Cyclotomic(Rational(1, 2))};
  const CycVector psi{r3(2), 2, -1};
  CHECK(averaged_inner(rep, phi, psi) == standard_inner(phi, psi));
  CHECK_THROWS_AS(averaged_inner(rep, e1, CycVector{1}), InputError);

  // A non-unitary representation: conjugate the permutation one by a
  // non-unitary T. The averaged product is invariant; the standard one is not.
  const auto t = CycMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
  const auto skew = conjugate_by(t, rep);
  const auto base = averaged_inner(skew, phi, psi);
  CHECK(conj(base) == averaged_inner(skew, psi, phi));
  CHECK(averaged_inner(skew, phi, phi).is_rational());
  CHECK(averaged_inner(skew, phi, phi).rational_value() > 0);
  bool standard_varies = false;
  for (const auto& m : skew.matrices) {
    CHECK(averaged_inner(skew, m * phi, m * psi) == base);
    standard_varies |= standard_inner(m * phi, m * psi) != standard_inner(phi, psi);
  }
  CHECK(standard_varies);
}

TEST_CASE("stored S3 transforms") {
  using namespace finq::testing;
  const auto t = monomial_transform();
  CHECK(is_identity(adjoint(t) * t));
  CHECK(inverse(t) == monomial_transform_inverse());
  const CycMatrix u2 = CycMatrix::from_rows({{0, r3(2)}, {r3(1), 0}});
  const CycMatrix u6 = CycMatrix::from_rows({{r3(1), 0}, {0, r3(2)}});
  CHECK(inverse(t) * p2() * t == diag_blocks(1, u2));
  CHECK(inverse(t) * p6() * t == diag_blocks(1, u6));

  const auto tp = tribimaximal_transform();
  CHECK(is_identity(adjoint(tp) * tp));
  const auto half = Cyclotomic(Rational(1, 2));
  const auto root3_half = sqrt_integer(3) * half;
  CHECK(inverse(tp) * p2() * tp == diag_blocks(1, CycMatrix::from_rows({{1, 0}, {0, -1}})));
  CHECK(inverse(tp) * p6() * tp == diag_blocks(1, CycMatrix::from_rows({{-half, root3_half}, {-root3_half, -half}})));

  // The whole group, through conjugate_by.
  const auto s3 = shared_group(3, {"(2,3)", "(1,3,2)"});
  const auto conj_rep = conjugate_by(t, permutation_representation(s3));
  const std::vector<std::size_t> sizes{1, 2};
  for (const auto& m : conj_rep.matrices) CHECK(is_block_diagonal(m, sizes));
  const auto same = conjugate_by(CycMatrix::identity(3), permutation_representation(s3));
  CHECK(same.matrices == permutation_representation(s3).matrices);
  CHECK_THROWS_AS(conjugate_by(CycMatrix(3, 3), permutation_representation(s3)), DomainError);
}

namespace {

void check_decomposition(const Representation& rep, const Decomposition& dec) {
  const auto& t = dec.transform;
  CHECK(is_identity(adjoint(t) * t));
  const auto sizes = dec.block_sizes();
  CHECK(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) == rep.dimension());
  const auto conj_rep = conjugate_by(t, rep);
  for (const auto& m : conj_rep.matrices) CHECK(is_block_diagonal(m, sizes));

  // Projector identities.
  auto sum = CycMatrix(rep.dimension(), rep.dimension());
  for (std::size_t a = 0; a < dec.projectors.size(); ++a) {
    sum = sum + dec.projectors[a];
    CHECK(dec.projectors[a] * dec.projectors[a] == dec.projectors[a]);
    for (std::size_t b = 0; b < dec.projectors.size(); ++b) {
      if (a != b) CHECK(is_zero(dec.projectors[a] * dec.projectors[b]));
    }
  }
  CHECK(is_identity(sum));

  // Component traces are multiplicity times the character.
  const auto traces = component_traces(dec, rep);
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    const auto& blk = dec.blocks[b];
    for (std::size_t k = 0; k < dec.table.classes.count(); ++k) {
      CHECK(traces[b][k] == Cyclotomic(static_cast<long>(blk.multiplicity)) * dec.table.rows[blk.character][k]);
    }
  }
}

}  // namespace

TEST_CASE("decomposition of S3 and C3 actions") {
  const auto s3 = shared_group(3, {"(2,3)", "(1,3,2)"});
  const auto natural = permutation_representation(s3);
  const auto dec = decompose_permutation(natural);
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0].character == 0);
  CHECK(dec.blocks[0].dimension == 1);
  CHECK(dec.blocks[1].dimension == 2);
  CHECK(dec.blocks[1].multiplicity == 1);
  CHECK(dec.block_sizes() == std::vector<std::size_t>{1, 2});
  const auto third = inverse(sqrt_integer(3));
  CHECK(dec.transform.column(0) == CycVector{third, third, third});
  check_decomposition(natural, dec);

  const auto c3 = shared_group(3, {"(1,2,3)"});
  const auto cyc = permutation_representation(c3);
  const auto dc = decompose_permutation(cyc);
  CHECK(dc.block_sizes() == std::vector<std::size_t>{1, 1, 1});
  check_decomposition(cyc, dc);

  const auto reg = regular_representation(s3);
  const auto dr = decompose_permutation(reg);
  REQUIRE(dr.blocks.size() == 3);
  CHECK(dr.blocks[0].multiplicity == 1);
  CHECK(dr.blocks[1].multiplicity == 1);
  CHECK(dr.blocks[2].multiplicity == 2);
  CHECK(dr.block_sizes() == std::vector<std::size_t>{1, 1, 2, 2});
  check_decomposition(reg, dr);
}

TEST_CASE("regular representations split by dimension") {
  for (const auto& named : finq::testing::standard_suite()) {
    INFO(named.name);
    const auto g = std::make_shared<const FiniteGroup>(named.group);
    const auto reg = regular_representation(g);
    const auto dec = decompose_permutation(reg);
    CHECK(dec.blocks.size() == dec.table.size());
    for (const auto& b : dec.blocks) CHECK(b.multiplicity == b.dimension);
    check_decomposition(reg, dec);
  }
}

TEST_CASE("natural and coset actions decompose") {
  for (const auto& named : finq::testing::standard_suite()) {
    INFO(named.name);
    const auto g = std::make_shared<const FiniteGroup>(named.group);
    const auto rep = permutation_representation(g);
    check_decomposition(rep, decompose_permutation(rep));
  }
  const auto s4 = shared_group(4, {"(1,2,3,4)", "(1,2)"});
  const std::vector<Permutation> klein{parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)};
  const auto action = coset_action_generated(s4, klein);
  const auto rep = permutation_representation(action);
  CHECK(rep.dimension() == 6);
  check_decomposition(rep, decompose_permutation(rep));

  Representation bad{s4, {}};
  CHECK_THROWS_AS(decompose_permutation(bad), InputError);
}
