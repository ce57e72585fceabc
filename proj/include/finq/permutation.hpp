#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace finq {

/// A bijection of {0, ..., N-1}. Point i is sent to images()[i]. Text and JSON
/// forms use points 1..N.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  /// Throws InputError unless `images` is a bijection of {0..N-1}.
  static Permutation from_images(std::vector<std::uint32_t> images);
  static Permutation from_one_based(const std::vector<std::uint32_t>& images);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::vector<std::uint32_t> one_based_images() const;
  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses "(a,b,...)(c,...)" with "()" for the identity. Whitespace is ignored.
/// Throws InputError on malformed text, repeated or out-of-range points.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Disjoint cycle notation, fixed points omitted, "()" for the identity.
std::string to_cycles(const Permutation& p);

/// Right action: apply p first, then q, so (p*q)(i) = q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation inverse(const Permutation& p);

/// Multiplicities k_i of cycle lengths i; fixed points count as 1-cycles.
struct CycleType {
  std::map<std::uint32_t, std::uint32_t> multiplicities;

  std::size_t degree() const;
  /// "1^1 2^1" style.
  std::string to_string() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

/// Smallest k > 0 with p^k = identity.
std::uint64_t element_order(const Permutation& p);

}  // namespace finq
