#include "rbx/rational.hpp"

#include <cctype>
#include <ostream>

#include "rbx/errors.hpp"

namespace rbx {

std::string Rational::str() const {
  std::string s = numerator().str();
  const BigInt den = denominator();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

bool is_integer_token(std::string_view t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace; none is allowed inside.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) throw InputError("", "expected integer or p/q rational, got \"" + std::string(text) + "\"");
    return Rational(BigInt(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw InputError("", "expected integer or p/q rational, got \"" + std::string(text) + "\"");
  const BigInt d{std::string(den)};
  if (d.is_zero()) throw InputError("", "zero denominator in \"" + std::string(text) + "\"");
  return Rational(BigInt(std::string(num)), d);
}

}  // namespace rbx
