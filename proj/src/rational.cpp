#include "chipfire/rational.hpp"

#include <numeric>
#include <ostream>

namespace chipfire {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t narrow(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) {
    fail(errc::arithmetic_overflow, std::string("rational overflow in ") + what);
  }
  return static_cast<int64_t>(v);
}

Rational make_reduced(i128 n, i128 d, const char* what) {
  if (d == 0) fail(errc::invalid_parameter, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n, what), narrow(d, what));
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) : num_(n), den_(d) {
  if (den_ == 0) fail(errc::invalid_parameter, "rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
  i128 d = i128(den_) * o.den_;
  *this = make_reduced(n, d, "add");
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  *this = make_reduced(i128(num_) * o.num_, i128(den_) * o.den_, "mul");
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) fail(errc::invalid_parameter, "rational division by zero");
  *this = make_reduced(i128(num_) * o.den_, i128(den_) * o.num_, "div");
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

int64_t Rational::exact_quotient(const Rational& a, const Rational& b) {
  if (b.num_ == 0) fail(errc::invalid_parameter, "exact_quotient by zero");
  Rational q = a / b;
  if (!q.is_integer()) {
    fail(errc::invalid_granularity,
         "not an exact multiple: " + a.str() + " / " + b.str() + " = " + q.str());
  }
  return q.num();
}

bool Rational::divides(const Rational& b, const Rational& a) {
  if (b.num_ == 0) return a.num_ == 0;
  return (a / b).is_integer();
}

std::string Rational::str(bool force_fraction) const {
  if (den_ == 1 && !force_fraction) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto bad = [&]() -> Rational {
    fail(errc::parse_error, "invalid rational: '" + text + "'");
  };
  if (text.empty()) return bad();
  size_t slash = text.find('/');
  try {
    size_t used = 0;
    std::string npart = text.substr(0, slash);
    int64_t n = std::stoll(npart, &used);
    if (used != npart.size()) return bad();
    int64_t d = 1;
    if (slash != std::string::npos) {
      std::string dpart = text.substr(slash + 1);
      if (dpart.empty()) return bad();
      d = std::stoll(dpart, &used);
      if (used != dpart.size()) return bad();
    }
    return Rational(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    return bad();
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_abs(const Rational& a) { return a.is_negative() ? -a : a; }

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s), reduced
  if (a.is_zero()) return rational_abs(b);
  if (b.is_zero()) return rational_abs(a);
  i128 x = gcd128(i128(a.num()) * b.den(), i128(b.num()) * a.den());
  i128 d = i128(a.den()) * b.den();
  i128 g = gcd128(x, d);
  return Rational(narrow(x / g, "gcd"), narrow(d / g, "gcd"));
}

}  // namespace chipfire
