#include "finq/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "finq/errors.hpp"

namespace finq {

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) {
  const auto l = std::lcm(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  if (l > 0xffffffffULL) throw InvariantViolation("cyclotomic conductor overflow");
  return static_cast<std::uint32_t>(l);
}

std::vector<std::int64_t> compute_cyclotomic(std::uint32_t n);

struct PolynomialCache {
  std::mutex mutex;
  std::map<std::uint32_t, std::shared_ptr<const std::vector<std::int64_t>>> table;
};

PolynomialCache& polynomial_cache() {
  static PolynomialCache cache;
  return cache;
}

std::shared_ptr<const std::vector<std::int64_t>> cached_cyclotomic(std::uint32_t n) {
  auto& cache = polynomial_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.table.find(n); it != cache.table.end()) return it->second;
  }
  auto poly = std::make_shared<const std::vector<std::int64_t>>(compute_cyclotomic(n));
  std::lock_guard lock(cache.mutex);
  return cache.table.emplace(n, std::move(poly)).first->second;
}

// x^n - 1 divided by every Phi_d with d | n, d < n.
std::vector<std::int64_t> compute_cyclotomic(std::uint32_t n) {
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = *cached_cyclotomic(d);
    const std::size_t dd = den.size() - 1;
    const std::size_t dn = num.size() - 1;
    std::vector<std::int64_t> quot(dn - dd + 1, 0);
    for (std::size_t k = dn + 1; k-- > dd;) {
      const std::int64_t c = num[k];
      if (c == 0) continue;
      quot[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

// Reduces a dense buffer indexed by exponent mod n to length totient(n).
std::vector<Rational> reduce_mod_cyclotomic(std::uint32_t n, std::vector<Rational> buf) {
  const auto& phi = *cached_cyclotomic(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = buf.size(); k-- > deg;) {
    if (sgn(buf[k]) == 0) continue;
    const Rational c = buf[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) buf[k - deg + j] -= c * phi[j];
    }
    buf[k] = 0;
  }
  buf.resize(deg);
  return buf;
}

// Rational linear data for testing whether a value at conductor n lies in the
// subfield of conductor d and for rewriting it there.
struct SubfieldMap {
  std::vector<std::vector<Rational>> lift;  // totient(n) x totient(d)
  std::vector<std::size_t> pivot_rows;       // totient(d) rows of `lift`
  std::vector<std::vector<Rational>> pivot_inverse;
};

std::vector<std::vector<Rational>> invert_square(std::vector<std::vector<Rational>> a) {
  const std::size_t m = a.size();
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && sgn(a[piv][col]) == 0) ++piv;
    if (piv == m) throw InvariantViolation("singular subfield basis");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < m; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < m; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

SubfieldMap build_subfield_map(std::uint32_t n, std::uint32_t d) {
  const std::uint32_t fn = totient(n);
  const std::uint32_t fd = totient(d);
  const std::uint32_t step = n / d;
  SubfieldMap map;
  map.lift.assign(fn, std::vector<Rational>(fd));
  for (std::uint32_t j = 0; j < fd; ++j) {
    std::vector<Rational> buf(n);
    buf[(static_cast<std::uint64_t>(j) * step) % n] = 1;
    const auto col = reduce_mod_cyclotomic(n, std::move(buf));
    for (std::uint32_t i = 0; i < fn; ++i) map.lift[i][j] = col[i];
  }
  // Greedy choice of independent rows via an incremental echelon basis.
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> lead;
  for (std::uint32_t i = 0; i < fn && map.pivot_rows.size() < fd; ++i) {
    auto row = map.lift[i];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      if (sgn(row[lead[e]]) == 0) continue;
      const Rational f = row[lead[e]];
      for (std::uint32_t j = 0; j < fd; ++j) row[j] -= f * echelon[e][j];
    }
    std::size_t l = 0;
    while (l < fd && sgn(row[l]) == 0) ++l;
    if (l == fd) continue;
    const Rational scale = 1 / row[l];
    for (auto& x : row) x *= scale;
    echelon.push_back(std::move(row));
    lead.push_back(l);
    map.pivot_rows.push_back(i);
  }
  if (map.pivot_rows.size() != fd) throw InvariantViolation("subfield lift is not injective");
  std::vector<std::vector<Rational>> square;
  for (auto r : map.pivot_rows) square.push_back(map.lift[r]);
  map.pivot_inverse = invert_square(std::move(square));
  return map;
}

struct SubfieldCache {
  std::mutex mutex;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const SubfieldMap>> table;
};

std::shared_ptr<const SubfieldMap> subfield_map(std::uint32_t n, std::uint32_t d) {
  static SubfieldCache cache;
  const auto key = std::make_pair(n, d);
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  auto map = std::make_shared<const SubfieldMap>(build_subfield_map(n, d));
  std::lock_guard lock(cache.mutex);
  return cache.table.emplace(key, std::move(map)).first->second;
}

// Coefficients at conductor d when `coeffs` (conductor n) lies in that subfield.
bool descend(const std::vector<Rational>& coeffs, std::uint32_t n, std::uint32_t d,
             std::vector<Rational>& out) {
  const auto map = subfield_map(n, d);
  const std::size_t fd = map->pivot_rows.size();
  std::vector<Rational> c(fd);
  for (std::size_t i = 0; i < fd; ++i) {
    for (std::size_t j = 0; j < fd; ++j) {
      const auto& v = coeffs[map->pivot_rows[j]];
      if (sgn(v) != 0 && sgn(map->pivot_inverse[i][j]) != 0) c[i] += map->pivot_inverse[i][j] * v;
    }
  }
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    Rational acc = 0;
    for (std::size_t j = 0; j < fd; ++j) {
      if (sgn(map->lift[r][j]) != 0 && sgn(c[j]) != 0) acc += map->lift[r][j] * c[j];
    }
    if (acc != coeffs[r]) return false;
  }
  out = std::move(c);
  return true;
}

std::int64_t mod_positive(std::int64_t k, std::int64_t n) {
  const auto r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::uint32_t totient(std::uint32_t n) {
  if (n == 0) throw DomainError("totient of zero");
  std::uint32_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial index must be positive");
  return *cached_cyclotomic(n);
}

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(std::uint32_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_powers(std::uint32_t conductor, const std::vector<Rational>& coeffs) {
  if (conductor == 0) throw InputError("conductor must be positive");
  std::vector<Rational> buf(conductor);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Rational c = coeffs[k];
    c.canonicalize();
    buf[k % conductor] += c;
  }
  return Cyclotomic(conductor, reduce_mod_cyclotomic(conductor, std::move(buf)));
}

Cyclotomic Cyclotomic::from_reduced(std::uint32_t conductor, std::vector<Rational> coeffs) {
  if (conductor == 0) throw InputError("conductor must be positive");
  if (coeffs.size() != totient(conductor)) {
    throw InputError("coefficient count " + std::to_string(coeffs.size()) +
                     " does not match totient(" + std::to_string(conductor) + ")");
  }
  for (auto& c : coeffs) c.canonicalize();
  return Cyclotomic(conductor, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw DomainError("value " + to_string(*this) + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted_to(std::uint32_t n) const {
  if (n == 0 || n % conductor_ != 0) {
    throw DomainError("cannot lift conductor " + std::to_string(conductor_) + " to " +
                      std::to_string(n));
  }
  const std::uint64_t step = n / conductor_;
  std::vector<Rational> buf(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) buf[(k * step) % n] += coeffs_[k];
  return Cyclotomic(n, reduce_mod_cyclotomic(n, std::move(buf)));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (conductor_ == 1 && rhs.conductor_ == 1) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  CyclotomicSum s;
  s.add(*this);
  s.add(rhs);
  return *this = s.value();
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (conductor_ == 1 && rhs.conductor_ == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  CyclotomicSum s;
  s.add_product(*this, rhs);
  return *this = s.value();
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= inverse(rhs); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const auto l = lcm32(a.conductor_, b.conductor_);
  return a.lifted_to(l).coeffs_ == b.lifted_to(l).coeffs_;
}

// ---------------------------------------------------------------------------

void CyclotomicSum::widen(std::uint32_t n) {
  if (conductor_ % n == 0) return;
  const auto l = lcm32(conductor_, n);
  const std::uint64_t step = l / conductor_;
  std::vector<Rational> buf(l);
  for (std::size_t k = 0; k < powers_.size(); ++k) {
    if (sgn(powers_[k]) != 0) buf[k * step] = std::move(powers_[k]);
  }
  powers_ = std::move(buf);
  conductor_ = l;
}

void CyclotomicSum::add_term(const Rational& c, std::uint64_t exponent) {
  powers_[exponent % conductor_] += c;
}

void CyclotomicSum::add(const Cyclotomic& a) {
  widen(a.conductor_);
  const std::uint64_t step = conductor_ / a.conductor_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) != 0) add_term(a.coeffs_[i], i * step);
  }
}

void CyclotomicSum::add_product(const Cyclotomic& a, const Cyclotomic& b) {
  widen(a.conductor_);
  widen(b.conductor_);
  const std::uint64_t sa = conductor_ / a.conductor_;
  const std::uint64_t sb = conductor_ / b.conductor_;
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      t = a.coeffs_[i] * b.coeffs_[j];
      add_term(t, i * sa + j * sb);
    }
  }
}

void CyclotomicSum::add_conj_product(const Cyclotomic& a, const Cyclotomic& b) {
  widen(a.conductor_);
  widen(b.conductor_);
  const std::uint64_t n = conductor_;
  const std::uint64_t sa = n / a.conductor_;
  const std::uint64_t sb = n / b.conductor_;
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    const std::uint64_t conj_exp = (n - (i * sa) % n) % n;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      t = a.coeffs_[i] * b.coeffs_[j];
      add_term(t, conj_exp + j * sb);
    }
  }
}

Cyclotomic CyclotomicSum::value() const {
  if (conductor_ == 1) return Cyclotomic(powers_[0]);
  return minimize_conductor(Cyclotomic(conductor_, reduce_mod_cyclotomic(conductor_, powers_)));
}

// ---------------------------------------------------------------------------

Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw DomainError("root of unity order must be positive");
  std::vector<Rational> buf(n);
  buf[static_cast<std::size_t>(mod_positive(k, n))] = 1;
  return Cyclotomic::from_powers(n, buf);
}

Cyclotomic galois(const Cyclotomic& a, std::int64_t k) {
  const std::uint32_t n = a.conductor();
  if (std::gcd(mod_positive(k, n), static_cast<std::int64_t>(n)) != 1 && n > 1) {
    throw DomainError("Galois exponent " + std::to_string(k) + " not coprime to conductor " +
                      std::to_string(n));
  }
  if (n == 1) return a;
  const std::uint64_t kk = static_cast<std::uint64_t>(mod_positive(k, n));
  std::vector<Rational> buf(n);
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) buf[(i * kk) % n] += c[i];
  }
  return minimize_conductor(Cyclotomic::from_powers(n, buf));
}

Cyclotomic conj(const Cyclotomic& a) { return galois(a, -1); }

Cyclotomic abs_squared(const Cyclotomic& a) {
  CyclotomicSum s;
  s.add_conj_product(a, a);
  return s.value();
}

Cyclotomic inverse(const Cyclotomic& a) {
  const auto m = minimize_conductor(a);
  if (m.is_zero()) throw DomainError("division by zero");
  if (m.is_rational()) return Cyclotomic(Rational(1 / m.rational_value()));
  const std::uint32_t n = m.conductor();
  Cyclotomic others(1);
  for (std::uint32_t k = 2; k < n; ++k) {
    if (std::gcd(k, n) == 1) others *= galois(m, k);
  }
  const Rational norm = (m * others).rational_value();
  return others * Cyclotomic(Rational(1 / norm));
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1;
  unsigned __int128 base = b % m;
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

Cyclotomic make_sqrt_prime(std::uint32_t p) {
  Cyclotomic root;
  if (p == 2) {
    root = root_of_unity(8, 1) - root_of_unity(8, 3);
  } else {
    // Quadratic Gauss sum: its square is p for p = 1 mod 4 and -p otherwise.
    std::vector<Rational> buf(p);
    for (std::uint32_t k = 1; k < p; ++k) {
      buf[k] = pow_mod(k, (p - 1) / 2, p) == 1 ? 1 : -1;
    }
    root = minimize_conductor(Cyclotomic::from_powers(p, buf));
    if (p % 4 == 3) root *= -root_of_unity(4, 1);
  }
  if (to_float(root).real() < 0) root = -root;
  if (root * root != Cyclotomic(static_cast<long>(p))) {
    throw InvariantViolation("Gauss sum square root check failed for " + std::to_string(p));
  }
  return root;
}

Cyclotomic sqrt_prime(std::uint32_t p) {
  static std::mutex mutex;
  static std::map<std::uint32_t, Cyclotomic> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  auto root = make_sqrt_prime(p);
  std::lock_guard lock(mutex);
  return cache.emplace(p, std::move(root)).first->second;
}

}  // namespace

Cyclotomic sqrt_integer(std::uint64_t d) {
  if (d == 0) return Cyclotomic(0);
  std::uint64_t square_part = 1;
  Cyclotomic root(1);
  std::uint64_t rest = d;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    unsigned exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    for (unsigned e = 0; e < exponent / 2; ++e) square_part *= p;
    if (exponent % 2 == 1) {
      if (p > 0xffffffffULL) throw DomainError("square root argument too large");
      root *= sqrt_prime(static_cast<std::uint32_t>(p));
    }
  }
  if (rest > 1) {
    if (rest > 0xffffffffULL) throw DomainError("square root argument too large");
    root *= sqrt_prime(static_cast<std::uint32_t>(rest));
  }
  return root * Cyclotomic(Rational(Integer(std::to_string(square_part))));
}

Cyclotomic sqrt_rational(const Rational& q) {
  if (sgn(q) < 0) throw DomainError("square root of negative rational " + to_string(q));
  if (sgn(q) == 0) return Cyclotomic(0);
  const Integer prod = q.get_num() * q.get_den();
  if (!prod.fits_ulong_p()) throw DomainError("square root argument too large");
  return sqrt_integer(prod.get_ui()) * Cyclotomic(Rational(Integer(1), q.get_den()));
}

Cyclotomic minimize_conductor(const Cyclotomic& a) {
  if (a.is_rational()) return Cyclotomic(a.coeffs()[0]);
  std::uint32_t n = a.conductor();
  std::vector<Rational> coeffs = a.coeffs();
  bool progressed = true;
  while (progressed && n > 1) {
    progressed = false;
    for (auto p : prime_factors(n)) {
      std::vector<Rational> lower;
      if (descend(coeffs, n, n / p, lower)) {
        n /= p;
        coeffs = std::move(lower);
        progressed = true;
        break;
      }
    }
  }
  return Cyclotomic::from_reduced(n, std::move(coeffs));
}

std::complex<double> to_float(const Cyclotomic& a) {
  const double n = a.conductor();
  std::complex<double> z = 0;
  const auto& c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    const double angle = 2.0 * M_PI * static_cast<double>(k) / n;
    z += c[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::string to_string(const Cyclotomic& a) {
  std::ostringstream out;
  bool first = true;
  const auto& c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    const bool negative = sgn(c[k]) < 0;
    const Rational mag = abs(c[k]);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << '*';
    out << 'r' << a.conductor();
    if (k > 1) out << '^' << k;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace finq
