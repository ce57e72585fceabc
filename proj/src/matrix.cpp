#include "finq/matrix.hpp"

#include <string>

#include "finq/errors.hpp"

namespace finq {

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
  return m;
}

CycMatrix CycMatrix::from_rows(const std::vector<CycVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  CycMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

CycMatrix CycMatrix::from_columns(const std::vector<CycVector>& columns, std::size_t rows) {
  CycMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

CycVector CycMatrix::row(std::size_t i) const {
  return CycVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

CycVector CycMatrix::column(std::size_t j) const {
  CycVector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch in product");
  CycMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<CyclotomicSum> acc(b.cols());
    std::vector<bool> touched(b.cols(), false);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.cols(); ++k) {
        const auto& y = b(j, k);
        if (y.is_zero()) continue;
        acc[k].add_product(x, y);
        touched[k] = true;
      }
    }
    for (std::size_t k = 0; k < b.cols(); ++k) {
      if (touched[k]) out(i, k) = acc[k].value();
    }
  }
  return out;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix dimension mismatch");
  CycMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!b(i, j).is_zero()) out(i, j) += b(i, j);
    }
  }
  return out;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) { return a + Cyclotomic(-1) * b; }

CycMatrix operator*(const Cyclotomic& s, const CycMatrix& a) {
  CycMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) out(i, j) = s * a(i, j);
    }
  }
  return out;
}

CycVector operator*(const CycMatrix& a, std::span<const Cyclotomic> v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector dimension mismatch");
  CycVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    CyclotomicSum s;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) s.add_product(a(i, j), v[j]);
    }
    out[i] = s.value();
  }
  return out;
}

CycMatrix transpose(const CycMatrix& a) {
  CycMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

CycMatrix adjoint(const CycMatrix& a) {
  CycMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) out(j, i) = conj(a(i, j));
    }
  }
  return out;
}

Cyclotomic trace(const CycMatrix& a) {
  if (!a.is_square()) throw InputError("trace of a non-square matrix");
  CyclotomicSum s;
  for (std::size_t i = 0; i < a.rows(); ++i) s.add(a(i, i));
  return s.value();
}

bool is_identity(const CycMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != Cyclotomic(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool is_zero(const CycMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Row reduction on [a | b]; returns the rank of a. b may have zero columns.
std::size_t gauss_jordan(CycMatrix& a, CycMatrix& b) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(sel, j), b(row, j));
    }
    const auto scale = inverse(a(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(row, j).is_zero()) a(row, j) *= scale;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(row, j).is_zero()) b(row, j) *= scale;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const auto f = a(r, col);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(row, j).is_zero()) b(r, j) -= f * b(row, j);
      }
    }
    ++row;
  }
  return row;
}

}  // namespace

CycMatrix inverse(const CycMatrix& a) {
  if (!a.is_square()) throw DomainError("inverse of a non-square matrix");
  CycMatrix work = a;
  CycMatrix inv = CycMatrix::identity(a.rows());
  if (gauss_jordan(work, inv) != a.rows()) throw DomainError("matrix is singular");
  return inv;
}

std::size_t rank(const CycMatrix& a) {
  CycMatrix work = a;
  CycMatrix none(a.rows(), 0);
  return gauss_jordan(work, none);
}

Cyclotomic standard_inner(std::span<const Cyclotomic> phi, std::span<const Cyclotomic> psi) {
  if (phi.size() != psi.size()) {
    throw InputError("vector length mismatch: " + std::to_string(phi.size()) + " vs " +
                     std::to_string(psi.size()));
  }
  CyclotomicSum s;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (!phi[i].is_zero() && !psi[i].is_zero()) s.add_conj_product(phi[i], psi[i]);
  }
  return s.value();
}

std::vector<CycVector> orthogonal_basis(const std::vector<CycVector>& vectors) {
  std::vector<CycVector> basis;
  std::vector<Cyclotomic> inv_norms;
  for (const auto& u : vectors) {
    CycVector v = u;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto coeff = standard_inner(basis[b], u) * inv_norms[b];
      if (coeff.is_zero()) continue;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!basis[b][i].is_zero()) v[i] -= coeff * basis[b][i];
      }
    }
    const auto norm = standard_inner(v, v);
    if (norm.is_zero()) continue;
    inv_norms.push_back(inverse(norm));
    basis.push_back(std::move(v));
  }
  return basis;
}

CycVector normalized(const CycVector& v) {
  const auto norm = standard_inner(v, v);
  if (norm.is_zero()) throw DomainError("cannot normalize the zero vector");
  if (!norm.is_rational()) {
    throw DomainError("squared norm " + to_string(norm) + " is irrational");
  }
  const auto scale = inverse(sqrt_rational(norm.rational_value()));
  CycVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[i] = v[i] * scale;
  }
  return out;
}

}  // namespace finq
