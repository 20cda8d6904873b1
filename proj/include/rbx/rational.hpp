#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rbx {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always normalized (lowest terms, positive
/// denominator); equality and comparisons are exact. This is the only
/// number type used anywhere in the library -- there is no floating point.
///
/// The wrapper exists so that Eigen sees a small, closed scalar interface
/// instead of boost::multiprecision's very greedy converting templates.
class Rational {
public:
  Rational() = default;
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(n) {}                // NOLINT
  Rational(long long n) : v_(n) {}           // NOLINT
  Rational(const BigInt& n) : v_(n) {}       // NOLINT
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {}
  Rational(int num, int den) : v_(num, den) {}

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(a.v_ / b.v_); }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  /// Renders as "p" or "p/q", matching the input-file number syntax.
  std::string str() const;

private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : v_(std::move(v)) {}
  Backend v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Parses "p", "-p", "p/q" (exact; no floating point accepted).
/// Throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rbx
