#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "finq/cyclotomic.hpp"

namespace finq {

using CycVector = std::vector<Cyclotomic>;

/// Dense row-major matrix of exact cyclotomic numbers.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CycMatrix identity(std::size_t n);
  /// Throws InputError for ragged input.
  static CycMatrix from_rows(const std::vector<CycVector>& rows);
  static CycMatrix from_columns(const std::vector<CycVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Cyclotomic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  CycVector row(std::size_t i) const;
  CycVector column(std::size_t j) const;

  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> data_;
};

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator*(const Cyclotomic& s, const CycMatrix& a);
CycVector operator*(const CycMatrix& a, std::span<const Cyclotomic> v);

CycMatrix transpose(const CycMatrix& a);
/// Conjugate transpose.
CycMatrix adjoint(const CycMatrix& a);
Cyclotomic trace(const CycMatrix& a);
bool is_identity(const CycMatrix& a);
bool is_zero(const CycMatrix& a);

/// Gauss-Jordan inverse. Throws DomainError for singular or non-square input.
CycMatrix inverse(const CycMatrix& a);
std::size_t rank(const CycMatrix& a);

/// Sum conj(phi_i) psi_i. Throws InputError on length mismatch.
Cyclotomic standard_inner(std::span<const Cyclotomic> phi, std::span<const Cyclotomic> psi);

/// Gram-Schmidt without normalization: an orthogonal basis of the span of
/// `vectors`, processed in order, zero remainders skipped.
std::vector<CycVector> orthogonal_basis(const std::vector<CycVector>& vectors);

/// v / sqrt(<v,v>). Requires a rational squared norm; throws DomainError
/// otherwise, since the square root of an irrational norm need not be
/// cyclotomic.
CycVector normalized(const CycVector& v);

}  // namespace finq
