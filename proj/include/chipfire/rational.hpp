#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "chipfire/errors.hpp"

namespace chipfire {

// Exact rational number on 64-bit words. Always normalized: den > 0 and
// gcd(|num|, den) = 1; zero is 0/1. Operations check for overflow through
// 128-bit intermediates and throw rather than wrap. Edge lengths, offsets
// and piecewise-linear values in this library stay tiny, so the headroom
// is enormous; the checks exist so a silent wrong answer is impossible.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Exact quotient a/b as an integer; throws unless b divides a exactly.
  static int64_t exact_quotient(const Rational& a, const Rational& b);

  // True iff b divides a with an integer quotient.
  static bool divides(const Rational& b, const Rational& a);

  // "7" or "7/2"; always "<num>/<den>" when force_fraction is set.
  std::string str(bool force_fraction = false) const;
  static Rational parse(const std::string& text);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
  int64_t num_;
  int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rational_gcd(const Rational& a, const Rational& b);
Rational rational_abs(const Rational& a);

}  // namespace chipfire
