#include "finq/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "finq/errors.hpp"

namespace finq {

namespace {

void require_probability(const Rational& q) {
  if (q < 0 || q > 1) throw InputError("table entry " + to_string(q) + " outside [0, 1]");
}

void require_probability(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InputError("table entry " + std::to_string(x) + " outside [0, 1]");
}

// |x - y| <= tol, exactly for exact tables.
bool close(const MixTable& t, std::size_t i, std::size_t j, std::size_t k, std::size_t l, double tol) {
  if (t.is_exact()) return abs(t.exact_entry(i, j) - t.exact_entry(k, l)) <= Rational(tol);
  return std::abs(t.entry(i, j) - t.entry(k, l)) <= tol;
}

}  // namespace

MixTable MixTable::exact(const RationalGrid& entries) {
  MixTable t;
  t.provenance_ = Provenance::exact;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      t.exact_[i][j] = entries[i][j];
      t.exact_[i][j].canonicalize();
      require_probability(t.exact_[i][j]);
      t.measured_[i][j] = t.exact_[i][j].get_d();
    }
  }
  return t;
}

MixTable MixTable::measured(const RealGrid& entries, std::string source) {
  MixTable t;
  t.provenance_ = Provenance::measured;
  for (const auto& row : entries) {
    for (double x : row) require_probability(x);
  }
  t.measured_ = entries;
  t.source_ = std::move(source);
  return t;
}

const Rational& MixTable::exact_entry(std::size_t i, std::size_t j) const {
  if (!is_exact()) throw DomainError("measured table has no exact entries");
  return exact_.at(i).at(j);
}

double MixTable::entry(std::size_t i, std::size_t j) const { return measured_.at(i).at(j); }

CycMatrix tribimaximal() {
  const auto a = inverse(sqrt_integer(6));
  const auto b = inverse(sqrt_integer(3));
  const auto c = inverse(sqrt_integer(2));
  const Cyclotomic zero(0);
  return CycMatrix::from_rows({{Cyclotomic(2) * a, b, zero}, {-a, b, -c}, {-a, b, c}});
}

CycMatrix swap_columns(const CycMatrix& m, std::size_t a, std::size_t b) {
  if (a >= m.cols() || b >= m.cols()) throw InputError("column index out of range");
  CycMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(out(i, a), out(i, b));
  return out;
}

MixTable moduli_squared(const CycMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw InputError("mixing matrices are 3x3");
  RationalGrid grid;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto sq = abs_squared(m(i, j));
      if (!sq.is_rational()) throw DomainError("irrational squared modulus " + to_string(sq));
      grid[i][j] = sq.rational_value();
    }
  }
  return MixTable::exact(grid);
}

MixTable moduli_squared(const RealGrid& magnitudes, std::string source) {
  RealGrid grid;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      require_probability(magnitudes[i][j]);
      grid[i][j] = magnitudes[i][j] * magnitudes[i][j];
    }
  }
  return MixTable::measured(grid, std::move(source));
}

PatternReport pattern_check(const MixTable& t, double tolerance) {
  if (!(tolerance >= 0.0)) throw InputError("tolerance must be non-negative");
  PatternReport r;
  r.bimaximal = close(t, 1, 0, 2, 0, tolerance) && close(t, 1, 1, 2, 1, tolerance) && close(t, 1, 2, 2, 2, tolerance);
  r.trimaximal = close(t, 0, 1, 1, 1, tolerance) && close(t, 1, 1, 2, 1, tolerance) && close(t, 0, 1, 2, 1, tolerance);
  r.e3_absent = t.is_exact() ? t.exact_entry(0, 2) <= Rational(tolerance) : t.entry(0, 2) <= tolerance;
  return r;
}

Deviation deviation(const MixTable& a, const MixTable& b) {
  Deviation d;
  if (a.is_exact() && b.is_exact()) {
    Rational worst = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) worst = std::max<Rational>(worst, abs(a.exact_entry(i, j) - b.exact_entry(i, j)));
    }
    d.exact = worst;
    d.value = worst.get_d();
    return d;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) d.value = std::max(d.value, std::abs(a.entry(i, j) - b.entry(i, j)));
  }
  return d;
}

}  // namespace finq
