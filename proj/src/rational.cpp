#include "radial/rational.hpp"

#include <stdexcept>

#include "radial/error.hpp"

namespace radial {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IdenticalPoints: return "IdenticalPoints";
    case ErrorCode::NotObservationPoint: return "NotObservationPoint";
    case ErrorCode::NotInteriorPoint: return "NotInteriorPoint";
    case ErrorCode::UncoloredSet: return "UncoloredSet";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::MismatchedIndexSets: return "MismatchedIndexSets";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::RetryExhausted: return "RetryExhausted";
    case ErrorCode::ParameterDegenerate: return "ParameterDegenerate";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ValidationRequired: return "ValidationRequired";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(n) / mpq_class(d);
}

Rational::Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
    if (num.empty() || den.empty()) return std::nullopt;
  }
  mpz_class n, d;
  if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0) return std::nullopt;
  if (mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0) return std::nullopt;
  if (d == 0) return std::nullopt;
  return Rational(n, d);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return Rational::wrap(a.v_ / b.v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  const int size = p->_mp_size;
  size_t h = static_cast<size_t>(size) * 0x9e3779b97f4a7c15ULL;
  const int limbs = size < 0 ? -size : size;
  for (int i = 0; i < limbs; ++i) {
    h ^= static_cast<size_t>(p->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

size_t Rational::hash() const {
  size_t h = hash_mpz(mpz_class(v_.get_num()));
  size_t h2 = hash_mpz(mpz_class(v_.get_den()));
  return h ^ (h2 + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

namespace {

// Minimal-denominator rational in the open interval (lo, hi), 0 <= lo < hi.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
  mpz_class fl = lo.floor();
  Rational next_int(fl + 1);
  if (next_int < hi) return next_int;
  // No integer inside. Recurse on the fractional part: x = fl + 1/z with
  // z in (1/(hi-fl), 1/(lo-fl)).
  Rational a(fl);
  Rational lo_frac = lo - a;
  Rational hi_frac = hi - a;
  if (lo_frac.sign() == 0) {
    // Interval (0, hi_frac): pick 1/k with k the smallest integer > 1/hi_frac.
    Rational inv = Rational(1) / hi_frac;
    mpz_class k = inv.floor() + 1;
    return a + Rational(mpz_class(1), k);
  }
  Rational z = simplest_nonneg(Rational(1) / hi_frac, Rational(1) / lo_frac);
  return a + Rational(1) / z;
}

}  // namespace

Rational simplest_in_open_interval(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "empty interval");
  if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
  if (hi.sign() <= 0) return -simplest_in_open_interval(-hi, -lo);
  // 0 <= lo < hi
  return simplest_nonneg(lo, hi);
}

}  // namespace radial
