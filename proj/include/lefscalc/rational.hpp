#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lefscalc {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT: implicit by design of literals
  Rational(const Integer& num, const Integer& den);

  /// Parses "p", "-p", "p/q". Throws Error(InvalidInput) on malformed text or q == 0.
  static Rational parse(std::string_view text);

  Integer num() const { return boost::multiprecision::numerator(value_); }
  Integer den() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return den() == 1; }

  /// "p/q", with "/q" omitted when q == 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}
  Value value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// (-1)^k as a small integer.
inline int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

/// Element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussianRational(long long r) : re(r) {}            // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }

  /// "a", "bi", "a+bi" or "a-bi" with rational parts.
  std::string to_string() const;

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace lefscalc
