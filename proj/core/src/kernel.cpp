#include "haga/kernel.hpp"

#include "haga/errors.hpp"

namespace haga {

Point midpoint(const Point& p, const Point& q) {
  const Rat half(1, 2);
  return {half * (p.x + q.x), half * (p.y + q.y)};
}

Line::Line(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.is_zero() && b_.is_zero()) {
    throw GeometryError(ErrorCode::DegenerateInput, "line with zero normal");
  }
  const Rat lead = a_.is_zero() ? b_ : a_;
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

Line perpendicular_bisector(const Point& p, const Point& q) {
  if (p == q) throw GeometryError(ErrorCode::DegenerateInput, "bisector of coincident points");
  const Point n = q - p;
  return Line(n.x, n.y, -dot(n, midpoint(p, q)));
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw GeometryError(ErrorCode::DegenerateInput, "line through coincident points");
  const Rat a = p.y - q.y;
  const Rat b = q.x - p.x;
  return Line(a, b, -(a * p.x + b * p.y));
}

namespace {

// Signed offset of p along the normal, in units of the normal: p - t*(a,b) is the foot.
Rat normal_offset(const Point& p, const Line& l) {
  return l.eval(p) / (square(l.a()) + square(l.b()));
}

}  // namespace

Point reflect_point(const Point& p, const Line& l) {
  const Rat t = Rat(2) * normal_offset(p, l);
  return {p.x - t * l.a(), p.y - t * l.b()};
}

Point foot_of_perpendicular(const Point& p, const Line& l) {
  const Rat t = normal_offset(p, l);
  return {p.x - t * l.a(), p.y - t * l.b()};
}

Line reflect_line(const Line& target, const Line& mirror) {
  // Two distinct points of the target, reflected.
  const Point base = foot_of_perpendicular(Point{0, 0}, target);
  const Point along = base + Point{-target.b(), target.a()};
  return line_through(reflect_point(base, mirror), reflect_point(along, mirror));
}

Circle reflect_circle(const Circle& c, const Line& l) {
  return {reflect_point(c.center, l), c.radius};
}

Intersection intersect_lines(const Line& l1, const Line& l2) {
  const Rat det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det.is_zero()) {
    if (l1 == l2) return Coincident{};
    return Parallel{};
  }
  return Point{(l1.b() * l2.c() - l2.b() * l1.c()) / det,
               (l2.a() * l1.c() - l1.a() * l2.c()) / det};
}

Rat dist_sq(const Point& p, const Point& q) {
  const Point v = p - q;
  return dot(v, v);
}

Rat tangency_residue(const Line& l, const Circle& c) {
  return square(l.eval(c.center)) - square(c.radius) * (square(l.a()) + square(l.b()));
}

bool line_tangent_to_circle(const Line& l, const Circle& c) {
  return tangency_residue(l, c).is_zero();
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return cross(q - p, r - p).is_zero();
}

bool perpendicular(const Line& l1, const Line& l2) {
  return dot(l1.normal(), l2.normal()).is_zero();
}

}  // namespace haga
