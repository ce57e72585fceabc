#include "finq/rational.hpp"

#include <cctype>

#include "finq/errors.hpp"

namespace finq {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InputError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InputError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  Integer value(std::string(text.substr(i)), 10);
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto whole = trim(text);
  const auto slash = whole.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(whole, whole));
  const auto num = parse_integer(trim(whole.substr(0, slash)), whole);
  const auto den_text = trim(whole.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InputError("malformed rational: '" + std::string(whole) + "'");
  }
  const auto den = parse_integer(den_text, whole);
  if (den == 0) throw InputError("rational with zero denominator: '" + std::string(whole) + "'");
  return make_rational(num, den);
}

}  // namespace finq
