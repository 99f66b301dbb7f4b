#pragma once

#include <variant>

#include "haga/rational.hpp"

namespace haga {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(const Rat& k, const Point& p) { return {k * p.x, k * p.y}; }

inline Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Point midpoint(const Point& p, const Point& q);

/// Locus a*x + b*y + c = 0, stored with the leading nonzero coefficient of
/// (a, b) scaled to +1 so that equal lines compare equal.
class Line {
 public:
  /// Throws GeometryError(DegenerateInput) when a = b = 0.
  Line(Rat a, Rat b, Rat c);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }

  /// a*x + b*y + c at p; zero iff p lies on the line.
  Rat eval(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  bool contains(const Point& p) const { return eval(p).is_zero(); }
  Point normal() const { return {a_, b_}; }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Rat a_, b_, c_;
};

/// Radius 0 is allowed and denotes a point-circle.
struct Circle {
  Point center;
  Rat radius;

  friend bool operator==(const Circle&, const Circle&) = default;
};

struct Parallel {
  friend bool operator==(Parallel, Parallel) = default;
};
struct Coincident {
  friend bool operator==(Coincident, Coincident) = default;
};
using Intersection = std::variant<Point, Parallel, Coincident>;

/// Throws DegenerateInput when p = q.
Line perpendicular_bisector(const Point& p, const Point& q);
/// Throws DegenerateInput when p = q.
Line line_through(const Point& p, const Point& q);

Point reflect_point(const Point& p, const Line& l);
Line reflect_line(const Line& target, const Line& mirror);
Circle reflect_circle(const Circle& c, const Line& l);
Point foot_of_perpendicular(const Point& p, const Line& l);

Intersection intersect_lines(const Line& l1, const Line& l2);

Rat dist_sq(const Point& p, const Point& q);

/// (a*cx + b*cy + c)^2 - r^2 (a^2 + b^2); zero iff the line touches the circle.
Rat tangency_residue(const Line& l, const Circle& c);
bool line_tangent_to_circle(const Line& l, const Circle& c);

bool collinear(const Point& p, const Point& q, const Point& r);
bool perpendicular(const Line& l1, const Line& l2);

}  // namespace haga
