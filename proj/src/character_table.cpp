#include "finq/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "finq/errors.hpp"

namespace finq {

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

constexpr std::uint64_t kPrimeBound = 1ULL << 20;

class ModP {
 public:
  explicit ModP(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t pow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    b %= p_;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % p_ == 0) throw InvariantViolation("inverse of zero mod p");
    return pow(a, p_ - 2);
  }

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row. Only columns < `pivot_limit` may hold pivots.
std::vector<std::size_t> row_reduce(Mat& a, const ModP& f, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_limit && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const auto scale = f.inv(a[row][col]);
    for (auto& x : a[row]) x = f.mul(x, scale);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const auto factor = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) {
        a[r][c] = f.sub(a[r][c], f.mul(factor, a[row][c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis (as column vectors) of the kernel of the square matrix a.
std::vector<Vec> kernel(Mat a, const ModP& f) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  const auto pivots = row_reduce(a, f, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial det(xI - a), ascending coefficients, via
// reduction to upper Hessenberg form.
Vec char_poly(Mat h, const ModP& f) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    const auto inv = f.inv(h[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      const auto u = f.mul(h[k][j], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = f.sub(h[k][c], f.mul(u, h[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(u, h[r][k]));
    }
  }
  std::vector<Vec> polys{Vec{1}};
  for (std::size_t m = 0; m < n; ++m) {
    // p_{m+1} = (x - h_mm) p_m - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_i
    Vec next(m + 2, 0);
    const auto& pm = polys[m];
    for (std::size_t d = 0; d < pm.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], pm[d]);
      next[d] = f.sub(next[d], f.mul(h[m][m], pm[d]));
    }
    std::uint64_t sub_product = 1;
    for (std::size_t i = m; i-- > 0;) {
      sub_product = f.mul(sub_product, h[i + 1][i]);
      const auto coef = f.mul(h[i][m], sub_product);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d) {
        next[d] = f.sub(next[d], f.mul(coef, polys[i][d]));
      }
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

std::vector<std::uint64_t> roots(const Vec& poly, const ModP& f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < f.p(); ++x) {
    std::uint64_t acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = f.add(f.mul(acc, x), poly[d]);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

// Columns of `basis` span an M-invariant subspace; returns A with M B = B A.
Mat restrict_to(const Mat& m, const std::vector<Vec>& basis, const ModP& f) {
  const std::size_t r = m.size();
  const std::size_t s = basis.size();
  Mat aug(r, Vec(2 * s, 0));
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      aug[i][j] = basis[j][i];
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < r; ++k) acc = f.add(acc, f.mul(m[i][k], basis[j][k]));
      aug[i][s + j] = acc;
    }
  }
  const auto pivots = row_reduce(aug, f, s);
  if (pivots.size() != s) throw InvariantViolation("subspace basis is degenerate");
  Mat a(s, Vec(s, 0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) a[i][j] = aug[i][s + j];
  }
  // Invariance: remaining rows must vanish on the right block.
  for (std::size_t i = s; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (aug[i][s + j] != 0) throw InvariantViolation("subspace is not invariant");
    }
  }
  return a;
}

std::uint64_t primitive_root_of_order(std::uint64_t e, const ModP& f) {
  std::vector<std::uint64_t> prime_divisors;
  for (std::uint64_t q = 2, rest = e; rest > 1; ++q) {
    if (rest % q == 0) {
      prime_divisors.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  }
  for (std::uint64_t g = 2; g < f.p(); ++g) {
    const auto z = f.pow(g, (f.p() - 1) / e);
    bool primitive = true;
    for (auto q : prime_divisors) {
      if (f.pow(z, e / q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return z;
  }
  if (e == 1) return 1;
  throw InvariantViolation("no primitive root of unity modulo " + std::to_string(f.p()));
}

bool row_precedes(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  constexpr double tol = 1e-9;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto za = to_float(a[k]);
    const auto zb = to_float(b[k]);
    if (std::abs(za.real() - zb.real()) > tol) return za.real() > zb.real();
    if (std::abs(za.imag() - zb.imag()) > tol) return za.imag() > zb.imag();
  }
  return false;
}

}  // namespace

std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent) {
  for (std::uint64_t p = exponent + 1; p < kPrimeBound; p += exponent) {
    if (p * p > 4 * group_order && is_prime(p)) return p;
  }
  throw InvariantViolation("no prime = 1 mod " + std::to_string(exponent) + " below 2^20");
}

CharacterTable character_table(const FiniteGroup& group) {
  auto classes = conjugacy_classes(group);
  const auto algebra = class_coefficients(group, classes);
  return character_table(group, classes, algebra);
}

CharacterTable character_table(const FiniteGroup& group, const ClassDecomposition& classes,
                               const ClassAlgebra& algebra) {
  const std::size_t r = classes.count();
  const std::uint64_t order = group.order();
  const std::uint64_t e = exponent(group);
  const std::uint64_t p = dixon_prime(order, e);
  const ModP f(p);

  // Common eigenvectors of the class matrices (M_i)_{jk} = c(i,j,k). The
  // eigenvector of an irreducible is (|K_k| chi(K_k) / chi(1))_k.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < r; ++i) {
    const bool split_done =
        std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (split_done) break;
    Mat m(r, Vec(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) m[j][k] = algebra(i, j, k) % p;
    }
    std::vector<std::vector<Vec>> refined;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        refined.push_back(std::move(space));
        continue;
      }
      const auto a = restrict_to(m, space, f);
      std::size_t covered = 0;
      for (auto lambda : roots(char_poly(a, f), f)) {
        Mat shifted = a;
        for (std::size_t d = 0; d < shifted.size(); ++d) shifted[d][d] = f.sub(shifted[d][d], lambda);
        std::vector<Vec> piece;
        for (const auto& coords : kernel(std::move(shifted), f)) {
          Vec v(r, 0);
          for (std::size_t b = 0; b < space.size(); ++b) {
            for (std::size_t t = 0; t < r; ++t) v[t] = f.add(v[t], f.mul(coords[b], space[b][t]));
          }
          piece.push_back(std::move(v));
        }
        covered += piece.size();
        refined.push_back(std::move(piece));
      }
      if (covered != space.size()) throw InvariantViolation("class matrix not diagonalizable mod p");
    }
    spaces = std::move(refined);
  }
  if (spaces.size() != r) throw InvariantViolation("class matrices did not split completely");

  // Power maps: class of g^j for the representative g of each class.
  std::vector<std::vector<std::size_t>> power_class(r, std::vector<std::size_t>(e));
  for (std::size_t k = 0; k < r; ++k) {
    const auto& g = group.element(classes.classes[k].representative());
    auto x = Permutation::identity(group.degree());
    for (std::uint64_t j = 0; j < e; ++j) {
      power_class[k][j] = classes.class_of[*group.index_of(x)];
      x = x * g;
    }
  }

  const auto z = primitive_root_of_order(e, f);
  const auto e_inv = f.inv(e % p);

  CharacterTable table;
  table.group_order = order;
  table.exponent = e;
  table.prime = p;
  table.classes = classes;
  std::uint64_t dim_square_sum = 0;
  for (const auto& space : spaces) {
    Vec omega = space.front();
    if (omega[0] == 0) throw InvariantViolation("eigenvector vanishes at the identity class");
    const auto norm = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, norm);

    // d^2 = |G| / sum_k omega_k omega_{k^-1} / |K_k|
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s = f.add(s, f.mul(f.mul(omega[k], omega[classes.inverse_class[k]]),
                         f.inv(classes.classes[k].size() % p)));
    }
    const auto d_square = f.mul(order % p, f.inv(s));
    std::uint64_t dim = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d) {
      if ((d * d) % p == d_square) {
        dim = d;
        break;
      }
    }
    if (dim == 0) throw InvariantViolation("character degree not recovered mod p");

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) {
      chi[k] = f.mul(f.mul(dim % p, omega[k]), f.inv(classes.classes[k].size() % p));
    }

    std::vector<Cyclotomic> row;
    for (std::size_t k = 0; k < r; ++k) {
      // Eigenvalue multiplicities of the representative: m_l = (1/e) sum_j chi(g^j) z^{-lj}.
      std::vector<Rational> coeffs(e);
      for (std::uint64_t l = 0; l < e; ++l) {
        std::uint64_t acc = 0;
        const auto step = f.pow(f.inv(z), l);
        std::uint64_t w = 1;
        for (std::uint64_t j = 0; j < e; ++j) {
          acc = f.add(acc, f.mul(chi[power_class[k][j]], w));
          w = f.mul(w, step);
        }
        const auto m = f.mul(acc, e_inv);
        if (m > dim) throw InvariantViolation("eigenvalue multiplicity out of range");
        coeffs[l] = static_cast<long>(m);
      }
      row.push_back(minimize_conductor(Cyclotomic::from_powers(static_cast<std::uint32_t>(e), coeffs)));
    }
    dim_square_sum += dim * dim;
    table.rows.push_back(std::move(row));
    table.dimensions.push_back(dim);
  }
  if (dim_square_sum != order) throw InvariantViolation("character degrees do not sum to |G|");

  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (table.dimensions[a] != table.dimensions[b]) return table.dimensions[a] < table.dimensions[b];
    return row_precedes(table.rows[a], table.rows[b]);
  });
  CharacterTable sorted = table;
  for (std::size_t i = 0; i < r; ++i) {
    sorted.rows[i] = table.rows[perm[i]];
    sorted.dimensions[i] = table.dimensions[perm[i]];
  }
  return sorted;
}

}  // namespace finq
