#include "finq/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "finq/errors.hpp"

namespace finq {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size()) {
      throw InputError("image " + std::to_string(x + 1) + " out of range for degree " +
                       std::to_string(images.size()));
    }
    if (seen[x]) throw InputError("image " + std::to_string(x + 1) + " repeated");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<std::uint32_t>& images) {
  std::vector<std::uint32_t> zero_based;
  zero_based.reserve(images.size());
  for (auto x : images) {
    if (x == 0) throw InputError("points are numbered from 1");
    zero_based.push_back(x - 1);
  }
  return from_images(std::move(zero_based));
}

std::vector<std::uint32_t> Permutation::one_based_images() const {
  std::vector<std::uint32_t> out(images_);
  for (auto& x : out) ++x;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image sequence.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const auto fail = [&](const std::string& why) {
    throw InputError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  if (compact.empty()) fail("empty");

  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    if (pos < compact.size() && compact[pos] == ')') {
      ++pos;
      continue;
    }
    while (true) {
      std::size_t start = pos;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
      if (start == pos) fail("expected a point");
      if (pos - start > 9) fail("point out of range");
      const auto point = std::stoul(compact.substr(start, pos - start));
      if (point < 1 || point > degree) {
        fail("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      }
      if (used[point - 1]) fail("point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
      if (pos >= compact.size()) fail("unterminated cycle");
      if (compact[pos] == ',') {
        ++pos;
        continue;
      }
      if (compact[pos] == ')') {
        ++pos;
        break;
      }
      fail("unexpected character '" + std::string(1, compact[pos]) + "'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation::from_images(std::move(images));
}

std::string to_cycles(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    any = true;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ',';
      out << x + 1;
      first = false;
      x = p[x];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InputError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()));
  }
  std::vector<std::uint32_t> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[i]];
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p[i]] = static_cast<std::uint32_t>(i);
  return Permutation::from_images(std::move(images));
}

std::size_t CycleType::degree() const {
  std::size_t total = 0;
  for (const auto& [length, count] : multiplicities) total += std::size_t{length} * count;
  return total;
}

std::string CycleType::to_string() const {
  std::string out;
  for (const auto& [length, count] : multiplicities) {
    if (!out.empty()) out += ' ';
    out += std::to_string(length) + "^" + std::to_string(count);
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  CycleType type;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::uint32_t length = 0;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++length;
    }
    ++type.multiplicities[length];
  }
  return type;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& [length, count] : cycle_type(p).multiplicities) {
    order = std::lcm(order, std::uint64_t{length});
  }
  return order;
}

}  // namespace finq
