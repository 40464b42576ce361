#include "radial/geometry.hpp"

#include "radial/error.hpp"

namespace radial {

Orientation orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r) {
  mpq_class det = (q.x.raw() - p.x.raw()) * (r.y.raw() - p.y.raw()) -
                  (q.y.raw() - p.y.raw()) * (r.x.raw() - p.x.raw());
  int s = sgn(det);
  if (s > 0) return Orientation::Counterclockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

void Line::normalize() {
  if (a == 0 && b == 0) throw Error(ErrorCode::InvalidArgument, "degenerate line");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  int lead = sgn(a) != 0 ? sgn(a) : sgn(b);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
}

int Line::side(const RationalPoint& p) const {
  // sign(a*nx/dx + b*ny/dy - c) = sign(a*nx*dy + b*ny*dx - c*dx*dy), dx,dy > 0.
  const mpz_class& nx = p.x.raw().get_num();
  const mpz_class& dx = p.x.raw().get_den();
  const mpz_class& ny = p.y.raw().get_num();
  const mpz_class& dy = p.y.raw().get_den();
  mpz_class v = a * nx * dy + b * ny * dx - c * dx * dy;
  return sgn(v);
}

Rational Line::param(const RationalPoint& p) const {
  return Rational(b) * p.x - Rational(a) * p.y;
}

Line line_through(const RationalPoint& p, const RationalPoint& q) {
  if (p == q) throw Error(ErrorCode::IdenticalPoints, "line through a single point");
  // Normal (a,b) = (dy, -dx); clear denominators to integer coefficients.
  mpq_class ar = q.y.raw() - p.y.raw();
  mpq_class br = p.x.raw() - q.x.raw();
  mpq_class cr = ar * p.x.raw() + br * p.y.raw();
  mpz_class scale;
  mpz_lcm(scale.get_mpz_t(), ar.get_den().get_mpz_t(), br.get_den().get_mpz_t());
  mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), cr.get_den().get_mpz_t());
  mpq_class as = ar * scale, bs = br * scale, cs = cr * scale;
  Line l;
  l.a = as.get_num();
  l.b = bs.get_num();
  l.c = cs.get_num();
  l.normalize();
  return l;
}

LineIntersection line_intersection(const Line& l1, const Line& l2) {
  mpz_class det = l1.a * l2.b - l2.a * l1.b;
  if (det == 0) {
    if (l1 == l2) return Identical{};
    return Parallel{};
  }
  mpz_class xn = l1.c * l2.b - l2.c * l1.b;
  mpz_class yn = l1.a * l2.c - l2.a * l1.c;
  return RationalPoint{Rational(xn, det), Rational(yn, det)};
}

RationalPoint circle_point(const Rational& t, const Rational& radius) {
  if (radius.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  Rational t2 = t * t;
  Rational denom = Rational(1) + t2;
  Rational x = (Rational(1) - t2) / denom;
  Rational y = (Rational(2) * t) / denom;
  return {radius * x, radius * y};
}

Rational distance_squared(const Line& l, const RationalPoint& p) {
  Rational num = Rational(l.a) * p.x + Rational(l.b) * p.y - Rational(l.c);
  return (num * num) / Rational(l.a * l.a + l.b * l.b);
}

Rational distance_squared(const RationalPoint& p, const RationalPoint& q) {
  Rational dx = p.x - q.x;
  Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

bool strictly_inside_clockwise_polygon(const std::vector<RationalPoint>& poly, const RationalPoint& p) {
  const size_t k = poly.size();
  if (k < 3) return false;
  for (size_t i = 0; i < k; ++i) {
    if (orientation(poly[i], poly[(i + 1) % k], p) != Orientation::Clockwise) return false;
  }
  return true;
}

}  // namespace radial
