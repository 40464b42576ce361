#pragma once

#include <gmpxx.h>

#include <optional>
#include <variant>
#include <vector>

#include "radial/rational.hpp"

namespace radial {

struct RationalPoint {
  Rational x, y;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

struct PointHash {
  size_t operator()(const RationalPoint& p) const {
    size_t h = p.x.hash();
    return h ^ (p.y.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

enum class Orientation { Clockwise, Counterclockwise, Collinear };

/// Sign of the determinant of (q-p, r-p); exact.
Orientation orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r);

/// Line ax + by = c with integer coefficients, gcd(a,b,c) = 1 and the first
/// nonzero of (a,b) positive, so equal lines are bit-identical.
struct Line {
  mpz_class a, b, c;

  void normalize();
  // Sign of a*px + b*py - c; which side of the line p lies on.
  int side(const RationalPoint& p) const;
  // Coordinate of p along the line direction (b, -a); defines a total order
  // on the points of the line.
  Rational param(const RationalPoint& p) const;

  friend bool operator==(const Line& l, const Line& m) {
    return l.a == m.a && l.b == m.b && l.c == m.c;
  }
};

struct LineHash {
  size_t operator()(const Line& l) const {
    size_t h = hash_mpz(l.a);
    h ^= hash_mpz(l.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= hash_mpz(l.c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Throws Error(IdenticalPoints) when p == q.
Line line_through(const RationalPoint& p, const RationalPoint& q);

struct Parallel {};
struct Identical {};
using LineIntersection = std::variant<RationalPoint, Parallel, Identical>;

LineIntersection line_intersection(const Line& l1, const Line& l2);

/// Point exactly on the circle of the given radius centered at the origin,
/// via the tangent half-angle map t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).
RationalPoint circle_point(const Rational& t, const Rational& radius);

/// Exact squared distance from p to the line.
Rational distance_squared(const Line& l, const RationalPoint& p);

Rational distance_squared(const RationalPoint& p, const RationalPoint& q);

/// True when p lies strictly inside the convex polygon given by its vertices
/// in clockwise order.
bool strictly_inside_clockwise_polygon(const std::vector<RationalPoint>& poly, const RationalPoint& p);

}  // namespace radial
