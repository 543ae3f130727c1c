#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace triples {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor and
/// arithmetic result is canonicalized, so `num()`/`den()` are always coprime.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "+p" or "p/q" (q != 0). Throws DomainError otherwise.
  static Rational parse(std::string_view text);
  /// Builds num/den from decimal digit strings, as written by `num_str()`.
  static Rational from_strings(const std::string& num, const std::string& den);

  const mpq_class& raw() const { return value_; }

  std::string num_str() const;
  std::string den_str() const;
  std::string str() const;

  bool is_integer() const;
  int sign() const { return sgn(value_); }

  /// Floor and ceiling as 64-bit integers; throws DomainError on overflow.
  std::int64_t floor() const;
  std::int64_t ceil() const;
  /// Exact conversion of an integral value; throws if not an integer or too large.
  std::int64_t to_int64() const;

  /// Lossy. Only for plot export.
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A Rational or the +infinity marker. Totally ordered, +inf above every finite value.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static ExtRational infinity();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Throws DomainError when infinite.
  const Rational& value() const;

  std::string str() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  Rational value_{};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

std::int64_t gcd(std::int64_t a, std::int64_t b);

}  // namespace triples
