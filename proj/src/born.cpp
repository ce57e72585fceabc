#include "finq/born.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <thread>

#include "finq/errors.hpp"
#include "finq/matrix.hpp"

namespace finq {

namespace {

void require_same_length(const NatState& m, const NatState& n) {
  if (m.size() != n.size()) {
    throw InputError("state length mismatch: " + std::to_string(m.size()) + " vs " + std::to_string(n.size()));
  }
}

void require_length(const NatState& n, std::size_t len) {
  if (n.size() != len) throw InputError("expected a state of length " + std::to_string(len));
}

Integer to_integer(std::uint64_t x) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return z;
}

bool is_zero_state(const NatState& n) {
  return std::all_of(n.begin(), n.end(), [](std::uint64_t x) { return x == 0; });
}

CycVector lift(const NatState& n) {
  CycVector out;
  out.reserve(n.size());
  for (auto x : n) out.emplace_back(Rational(to_integer(x)));
  return out;
}

}  // namespace

Integer linear_invariant(const NatState& n) {
  Integer sum = 0;
  for (auto x : n) sum += to_integer(x);
  return sum;
}

Integer quadratic_invariant(const NatState& m, const NatState& n) {
  require_same_length(m, n);
  Integer sum = 0;
  for (std::size_t i = 0; i < m.size(); ++i) sum += to_integer(m[i]) * to_integer(n[i]);
  return sum;
}

InvariantPair invariants(const NatState& n) { return {linear_invariant(n), quadratic_invariant(n, n)}; }

Rational born_full(const NatState& m, const NatState& n) {
  require_same_length(m, n);
  if (is_zero_state(m) || is_zero_state(n)) throw DomainError("Born probability of a zero vector");
  const Integer q = quadratic_invariant(m, n);
  return make_rational(q * q, quadratic_invariant(m, m) * quadratic_invariant(n, n));
}

Cyclotomic grassmann_norm_squared(std::span<const Cyclotomic> phi, std::span<const Cyclotomic> psi) {
  if (phi.size() != psi.size()) throw InputError("vector length mismatch");
  CyclotomicSum sum;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    for (std::size_t j = i + 1; j < phi.size(); ++j) {
      const auto minor = phi[i] * psi[j] - phi[j] * psi[i];
      if (!minor.is_zero()) sum.add_conj_product(minor, minor);
    }
  }
  return sum.value();
}

Cyclotomic born_symmetric(std::span<const Cyclotomic> phi, std::span<const Cyclotomic> psi) {
  const auto overlap = abs_squared(standard_inner(phi, psi));
  const auto denominator = overlap + grassmann_norm_squared(phi, psi);
  if (denominator.is_zero()) throw DomainError("Born probability of a zero vector");
  return overlap / denominator;
}

Rational born_symmetric(const NatState& m, const NatState& n) {
  require_same_length(m, n);
  if (is_zero_state(m) || is_zero_state(n)) throw DomainError("Born probability of a zero vector");
  const auto lm = lift(m);
  const auto ln = lift(n);
  return born_symmetric(std::span<const Cyclotomic>(lm), std::span<const Cyclotomic>(ln)).rational_value();
}

bool is_uniform(const NatState& n) {
  return std::adjacent_find(n.begin(), n.end(), std::not_equal_to<>()) == n.end();
}

Rational complement_inner(const NatState& m, const NatState& n) {
  require_same_length(m, n);
  if (m.size() < 2) throw InputError("the complement needs at least two points");
  const Rational cross = make_rational(linear_invariant(m) * linear_invariant(n), Integer(static_cast<long>(m.size())));
  return Rational(quadratic_invariant(m, n)) - cross;
}

Rational born_complement(const NatState& m, const NatState& n) {
  require_same_length(m, n);
  if (is_uniform(m) || is_uniform(n)) throw DomainError("uniform vector has a zero projection");
  const Rational mn = complement_inner(m, n);
  return mn * mn / (complement_inner(m, m) * complement_inner(n, n));
}

std::vector<InterferencePair> interference_solutions(std::size_t degree, std::uint64_t bound, unsigned jobs) {
  if (degree < 2) throw InputError("interference needs at least two points");
  if (bound < 1) throw InputError("component bound must be at least 1");
  const std::uint64_t base = bound + 1;
  // At most 2^16 states, hence 2^32 pairs.
  constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 16;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    if (base > kMaxStates || count * base > kMaxStates) throw CapExceeded("interference search space too large");
    count *= base;
  }

  // Non-uniform states in lexicographic order, with their invariants.
  struct Entry {
    NatState state;
    std::uint64_t linear;
  };
  std::vector<Entry> states;
  NatState cur(degree, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    std::uint64_t linear = 0;
    for (std::size_t i = degree; i-- > 0;) {
      cur[i] = rest % base;
      rest /= base;
      linear += cur[i];
    }
    if (!is_uniform(cur)) states.push_back({cur, linear});
  }

  jobs = std::max(1u, jobs);
  std::vector<std::vector<InterferencePair>> found(jobs);
  auto work = [&](unsigned w) {
    for (std::size_t a = w; a < states.size(); a += jobs) {
      const auto& m = states[a];
      for (const auto& n : states) {
        std::uint64_t q = 0;
        for (std::size_t i = 0; i < degree; ++i) q += m.state[i] * n.state[i];
        if (degree * q == m.linear * n.linear) found[w].push_back({m.state, n.state});
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  std::vector<InterferencePair> out;
  for (auto& part : found) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

C3Invariants c3_invariants(const NatState& m, const NatState& n) {
  require_length(m, 3);
  require_length(n, 3);
  auto z = [](std::uint64_t x) { return to_integer(x); };
  return {z(m[0]) * z(n[2]) + z(m[1]) * z(n[0]) + z(m[2]) * z(n[1]),
          z(m[0]) * z(n[1]) + z(m[1]) * z(n[2]) + z(m[2]) * z(n[0])};
}

Cyclotomic c3_subspace_inner(const NatState& m, const NatState& n) {
  const auto [c, c_prime] = c3_invariants(m, n);
  const Cyclotomic q(Rational(quadratic_invariant(m, n)));
  const auto sum = q + root_of_unity(3, 1) * Cyclotomic(Rational(c)) + root_of_unity(3, 2) * Cyclotomic(Rational(c_prime));
  return sum * Cyclotomic(Rational(1, 3));
}

Rational c3_born_subspace(const NatState& m, const NatState& n) {
  const Integer mm = quadratic_invariant(m, m) - c3_invariants(m, m).c;
  const Integer nn = quadratic_invariant(n, n) - c3_invariants(n, n).c;
  return make_rational(mm * nn, Integer(9));
}

}  // namespace finq
