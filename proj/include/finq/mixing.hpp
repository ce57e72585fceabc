#pragma once

#include <array>
#include <optional>
#include <string>

#include "finq/matrix.hpp"
#include "finq/rational.hpp"

namespace finq {

using RealGrid = std::array<std::array<double, 3>, 3>;
using RationalGrid = std::array<std::array<Rational, 3>, 3>;

enum class Provenance { exact, measured };

/// 3x3 table of transition probabilities |U_ij|^2, entries in [0, 1].
/// Exact tables hold rationals; measured tables hold doubles and a source.
class MixTable {
 public:
  /// Throws InputError for entries outside [0, 1].
  static MixTable exact(const RationalGrid& entries);
  static MixTable measured(const RealGrid& entries, std::string source);

  Provenance provenance() const { return provenance_; }
  bool is_exact() const { return provenance_ == Provenance::exact; }
  /// Throws DomainError on a measured table.
  const Rational& exact_entry(std::size_t i, std::size_t j) const;
  double entry(std::size_t i, std::size_t j) const;
  const std::string& source() const { return source_; }

 private:
  Provenance provenance_ = Provenance::exact;
  RationalGrid exact_{};
  RealGrid measured_{};
  std::string source_;
};

/// Harrison-Perkins-Scott matrix: columns (2,-1,-1)/sqrt6, (1,1,1)/sqrt3,
/// (0,-1,1)/sqrt2.
CycMatrix tribimaximal();

/// Copy of `m` with columns a and b exchanged.
CycMatrix swap_columns(const CycMatrix& m, std::size_t a, std::size_t b);

/// Entry-wise |U_ij|^2. Throws InputError unless 3x3 and DomainError when an
/// entry has an irrational squared modulus.
MixTable moduli_squared(const CycMatrix& m);
/// Squares measured magnitudes.
MixTable moduli_squared(const RealGrid& magnitudes, std::string source);

struct PatternReport {
  /// |U_2i|^2 = |U_3i|^2 for every column.
  bool bimaximal = false;
  /// Column 2 constant.
  bool trimaximal = false;
  /// |U_13|^2 = 0.
  bool e3_absent = false;
};

/// Each relation holds when all involved differences are within `tolerance`.
/// Exact tables are compared in exact arithmetic. Throws InputError for a
/// negative tolerance.
PatternReport pattern_check(const MixTable& t, double tolerance = 0.0);

struct Deviation {
  /// Present when both tables are exact.
  std::optional<Rational> exact;
  double value = 0.0;
};

/// max_ij |a_ij - b_ij|.
Deviation deviation(const MixTable& a, const MixTable& b);

}  // namespace finq
