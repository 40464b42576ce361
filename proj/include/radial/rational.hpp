#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace radial {

/// Exact rational number, always stored in lowest terms with positive
/// denominator. Wraps mpq_class; every constructor canonicalizes, so two
/// equal values are bit-identical and hash equal.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, matches int use
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class q);

  static std::optional<Rational> parse(std::string_view text);

  // Serialized as "numerator/denominator", e.g. "-3/4", "5/1".
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  const mpz_class num() const { return mpz_class(v_.get_num()); }
  const mpz_class den() const { return mpz_class(v_.get_den()); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  Rational abs() const;
  mpz_class floor() const;
  mpz_class ceil() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational::wrap(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational::wrap(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational::wrap(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return wrap(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  size_t hash() const;

 private:
  // GMP arithmetic on canonical operands yields canonical results.
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  mpq_class v_;
};

size_t hash_mpz(const mpz_class& z);

struct RationalHash {
  size_t operator()(const Rational& r) const { return r.hash(); }
};

/// Rational with the smallest denominator in the open interval (lo, hi).
/// Stern-Brocot / continued-fraction descent.
Rational simplest_in_open_interval(const Rational& lo, const Rational& hi);

}  // namespace radial
