// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.

#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "finq/born.hpp"
#include "finq/character_table.hpp"
#include "finq/class_algebra.hpp"
#include "finq/decomposition.hpp"
#include "finq/json_io.hpp"
#include "finq/mixing.hpp"
#include "finq/representation.hpp"
#include "support/fixtures.hpp"
#include "support/groups.hpp"

using namespace finq;
using finq::testing::r3;

namespace {

// Collects the first failed expectation of a criterion.
struct Probe {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Probe&)>& body) {
  Probe p;
  try {
    body(p);
  } catch (const std::exception& e) {
    p.failure = std::string("exception: ") + e.what();
  }
  if (p.failure.empty()) {
    std::cout << "PASS [" << id << "] " << title << std::endl;
  } else {
    ++failures;
    std::cout << "FAIL [" << id << "] " << title << " -- " << p.failure << std::endl;
  }
}

std::vector<Cyclotomic> row(std::initializer_list<Cyclotomic> xs) { return xs; }

CycMatrix diag_blocks(const Cyclotomic& a, const CycMatrix& b) {
  CycMatrix m(3, 3);
  m(0, 0) = a;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) m(i + 1, j + 1) = b(i, j);
  }
  return m;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

NatState random_state(std::mt19937& rng, std::size_t len, std::uint64_t max) {
  std::uniform_int_distribution<std::uint64_t> dist(0, max);
  NatState s(len);
  for (auto& x : s) x = dist(rng);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const auto s3 = finq::testing::shared_group(3, {"(2,3)", "(1,3,2)"});

  criterion(1, "S3 character table (exact)", [&](Probe& p) {
    const auto t = character_table(*s3);
    std::vector<std::size_t> sizes;
    for (const auto& c : t.classes.classes) sizes.push_back(c.size());
    p.expect(sizes == std::vector<std::size_t>{1, 3, 2}, "class sizes");
    p.expect(t.rows == std::vector<std::vector<Cyclotomic>>{row({1, 1, 1}), row({1, -1, 1}), row({2, 0, -1})},
             "table rows");
    if (!cli.empty()) {
      int status = 0;
      const auto out = run_command("\"" + cli + "\" chartab --degree 3 \"(2,3)\" \"(1,3,2)\"", status);
      p.expect(status == 0, "chartab exit status");
      const auto j = io::json::parse(out);
      std::vector<std::vector<Cyclotomic>> rows;
      for (const auto& r : j.at("rows")) {
        std::vector<Cyclotomic> vals;
        for (const auto& x : r) vals.push_back(io::cyclotomic_from_json(x));
        rows.push_back(vals);
      }
      p.expect(rows == t.rows, "chartab command output");
      std::vector<std::size_t> cli_sizes;
      for (const auto& c : j.at("classes")) cli_sizes.push_back(c.at("size").get<std::size_t>());
      p.expect(cli_sizes == sizes, "chartab class sizes");
    }
  });

  criterion(2, "S3 class algebra coefficients", [&](Probe& p) {
    const auto k = conjugacy_classes(*s3);
    const auto c = class_coefficients(*s3, k);
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t l = 0; l < 3; ++l) p.expect(c(0, j, l) == (j == l ? 1u : 0u), "K1 Kj = Kj");
    }
    p.expect(c(1, 1, 0) == 3 && c(1, 1, 1) == 0 && c(1, 1, 2) == 3, "K2^2 = 3K1 + 3K3");
    p.expect(c(1, 2, 0) == 0 && c(1, 2, 1) == 2 && c(1, 2, 2) == 0, "K2K3 = 2K2");
    p.expect(c(2, 2, 0) == 2 && c(2, 2, 1) == 0 && c(2, 2, 2) == 1, "K3^2 = 2K1 + K3");
  });

  criterion(3, "permutation matrices and eigenvalues", [&](Probe& p) {
    const auto g2 = parse_cycles("(2,3)", 3);
    const auto g6 = parse_cycles("(1,3,2)", 3);
    p.expect(perm_matrix(g2) == finq::testing::p2(), "P2");
    p.expect(perm_matrix(g6) == finq::testing::p6(), "P6");
    p.expect(perm_eigenvalues(cycle_type(g2)) == std::vector<Cyclotomic>{1, 1, -1}, "eigenvalues of P2");
    p.expect(perm_eigenvalues(cycle_type(g6)) == std::vector<Cyclotomic>{1, r3(1), r3(2)}, "eigenvalues of P6");
  });

  criterion(4, "decomposition structure and stored transforms", [&](Probe& p) {
    const auto natural = permutation_representation(s3);
    const auto dec = decompose_permutation(natural);
    p.expect(dec.block_sizes() == std::vector<std::size_t>{1, 2}, "S3 natural blocks");
    p.expect(dec.blocks.size() == 2 && dec.blocks[0].character == 0 && dec.blocks[1].character == 2,
             "S3 natural labels");
    const auto c3 = finq::testing::shared_group(3, {"(1,2,3)"});
    p.expect(decompose_permutation(permutation_representation(c3)).block_sizes() ==
                 std::vector<std::size_t>{1, 1, 1},
             "C3 natural blocks");
    const auto reg = decompose_permutation(regular_representation(s3));
    std::vector<std::size_t> mult, dims;
    for (const auto& b : reg.blocks) {
      mult.push_back(b.multiplicity);
      dims.push_back(b.dimension);
    }
    p.expect(mult == std::vector<std::size_t>{1, 1, 2} && dims == mult, "S3 regular multiplicities");

    // Stored monomial transform: all six elements, in the order
    // (), (2,3), (1,3), (1,2), (1,2,3), (1,3,2).
    const auto t = finq::testing::monomial_transform();
    const auto t_inv = inverse(t);
    p.expect(is_identity(adjoint(t) * t), "T unitary");
    const char* elems[] = {"()", "(2,3)", "(1,3)", "(1,2)", "(1,2,3)", "(1,3,2)"};
    const std::vector<CycMatrix> u{
        CycMatrix::from_rows({{1, 0}, {0, 1}}),         CycMatrix::from_rows({{0, r3(2)}, {r3(1), 0}}),
        CycMatrix::from_rows({{0, r3(1)}, {r3(2), 0}}), CycMatrix::from_rows({{0, 1}, {1, 0}}),
        CycMatrix::from_rows({{r3(2), 0}, {0, r3(1)}}), CycMatrix::from_rows({{r3(1), 0}, {0, r3(2)}})};
    for (std::size_t j = 0; j < 6; ++j) {
      p.expect(t_inv * perm_matrix(parse_cycles(elems[j], 3)) * t == diag_blocks(1, u[j]),
               std::string("T^-1 P T for ") + elems[j]);
    }
    const auto tp = finq::testing::tribimaximal_transform();
    const auto tp_inv = inverse(tp);
    const auto half = Cyclotomic(Rational(1, 2));
    const auto h3 = sqrt_integer(3) * half;
    p.expect(tp_inv * finq::testing::p2() * tp == diag_blocks(1, CycMatrix::from_rows({{1, 0}, {0, -1}})),
             "T' conjugates P2 to diag(1, 1, -1)");
    p.expect(tp_inv * finq::testing::p6() * tp == diag_blocks(1, CycMatrix::from_rows({{-half, h3}, {-h3, -half}})),
             "T' conjugates P6 to diag(1, U'6)");
  });

  criterion(5, "destructive interference example", [&](Probe& p) {
    p.expect(born_complement({1, 3, 2}, {1, 1, 2}) == 0, "born_complement((1,3,2),(1,1,2)) = 0");
    p.expect(born_complement({1, 1, 2}, {1, 1, 2}) == 1, "born_complement(n, n) = 1");
    const auto sols = interference_solutions(3, 3);
    p.expect(std::binary_search(sols.begin(), sols.end(), InterferencePair{{1, 1, 2}, {1, 3, 2}}) ||
                 std::binary_search(sols.begin(), sols.end(), InterferencePair{{1, 3, 2}, {1, 1, 2}}),
             "reference pair among solutions");
  });

  criterion(6, "rationality of the complement Born rule", [&](Probe& p) {
    std::mt19937 rng(2024);
    int done = 0;
    while (done < 200) {
      const std::size_t len = 3 + static_cast<std::size_t>(rng() % 6);
      const auto m = random_state(rng, len, 9);
      const auto n = random_state(rng, len, 9);
      if (is_uniform(m) || is_uniform(n)) continue;
      ++done;
      const Rational b = born_complement(m, n);
      p.expect(b >= 0 && b <= 1, "probability in [0, 1]");
      const Integer l = linear_invariant(n);
      Integer rhs = 0;
      for (auto x : n) {
        const Integer d = l - Integer(static_cast<unsigned long>(len)) * Integer(static_cast<unsigned long>(x));
        rhs += d * d;
      }
      p.expect(Rational(static_cast<long>(len * len)) * complement_inner(n, n) == Rational(rhs),
               "N^2 <n,n> = sum (L - N n_i)^2");
    }
  });

  criterion(7, "representation-theory identities over the group suite", [&](Probe& p) {
    for (const auto& named : finq::testing::standard_suite()) {
      const auto t = character_table(named.group);
      std::uint64_t sum = 0;
      for (auto d : t.dimensions) {
        sum += d * d;
        p.expect(named.order % d == 0, named.name + ": d divides |G|");
      }
      p.expect(sum == named.order, named.name + ": sum d^2 = |G|");
      for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
          CyclotomicSum s;
          for (std::size_t i = 0; i < t.classes.count(); ++i) {
            s.add_conj_product(t.rows[b][i],
                               t.rows[a][i] * Cyclotomic(static_cast<long>(t.classes.classes[i].size())));
          }
          p.expect(s.value() == Cyclotomic(a == b ? static_cast<long>(named.order) : 0L),
                   named.name + ": row orthogonality");
        }
      }
    }
  });

  criterion(8, "cyclotomic kernel", [&](Probe& p) {
    for (std::uint64_t d = 0; d <= 50; ++d) {
      const auto s = sqrt_integer(d);
      p.expect(s * s == Cyclotomic(static_cast<long>(d)), "sqrt_integer(" + std::to_string(d) + ")^2");
    }
    p.expect(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1}, "Phi_3 = 1 + x + x^2");
    p.expect(r3(1) + r3(2) == Cyclotomic(-1), "r3 + r3^2 = -1");
    std::mt19937 rng(8);
    const std::uint32_t conductors[] = {1, 3, 4, 5, 8, 12};
    std::uniform_int_distribution<long> num(-6, 6);
    auto random_cyc = [&] {
      const auto n = conductors[rng() % 6];
      Cyclotomic x(0);
      for (int k = 0; k < 3; ++k) x += Cyclotomic(Rational(num(rng), 1 + (rng() % 4))) * root_of_unity(n, num(rng));
      return x;
    };
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_cyc();
      const auto b = random_cyc();
      const auto c = random_cyc();
      p.expect(a + b == b + a && a * b == b * a, "commutativity");
      p.expect((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
      p.expect(a * (b + c) == a * b + a * c, "distributivity");
      p.expect(a + Cyclotomic(0) == a && a * Cyclotomic(1) == a && (a - a).is_zero(), "identities");
      if (!a.is_zero()) p.expect(a * inverse(a) == Cyclotomic(1), "inverse");
    }
  });

  criterion(9, "tribimaximal mixing", [&](Probe& p) {
    const auto tb = tribimaximal();
    const auto t = moduli_squared(tb);
    const RationalGrid expected{{{Rational(2, 3), Rational(1, 3), Rational(0)},
                                 {Rational(1, 6), Rational(1, 3), Rational(1, 2)},
                                 {Rational(1, 6), Rational(1, 3), Rational(1, 2)}}};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) p.expect(t.exact_entry(i, j) == expected[i][j], "moduli-squared table");
    }
    const auto r = pattern_check(t, 0);
    p.expect(r.bimaximal && r.trimaximal && r.e3_absent, "pattern (true, true, true)");
    p.expect(swap_columns(tb, 0, 1) == finq::testing::tribimaximal_transform(), "column-swapped transform");
  });

  criterion(10, "Lagrange identity: symmetric Born form equals the full one", [&](Probe& p) {
    std::mt19937 rng(10);
    int done = 0;
    while (done < 500) {
      const std::size_t len = 2 + static_cast<std::size_t>(rng() % 7);
      const auto m = random_state(rng, len, 9);
      const auto n = random_state(rng, len, 9);
      if (linear_invariant(m) == 0 || linear_invariant(n) == 0) continue;
      ++done;
      p.expect(born_symmetric(m, n) == born_full(m, n), "born_symmetric = born_full");
    }
  });

  criterion(11, "C3 subspace probability is rational", [&](Probe& p) {
    p.expect(c3_born_subspace({0, 1, 0}, {1, 0, 0}) == Rational(1, 9), "c3_born_subspace((0,1,0),(1,0,0)) = 1/9");
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
      const auto m = random_state(rng, 3, 9);
      const auto n = random_state(rng, 3, 9);
      const auto [c, cp] = c3_invariants(m, n);
      const auto q = Cyclotomic(Rational(quadratic_invariant(m, n)));
      const auto inner = (q + r3(1) * Cyclotomic(Rational(c)) + r3(2) * Cyclotomic(Rational(cp))) *
                         Cyclotomic(Rational(1, 3));
      p.expect(abs_squared(inner) == Cyclotomic(c3_born_subspace(m, n)), "|inner|^2 = rational formula");
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures;
}
