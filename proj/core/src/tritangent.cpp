#include "haga/tritangent.hpp"

#include <stdexcept>
#include <vector>

#include "haga/errors.hpp"

namespace haga {

std::string_view to_string(TritangentKind kind) {
  switch (kind) {
    case TritangentKind::Incircle: return "incircle";
    case TritangentKind::ExOppRight: return "ex_opp_right";
    case TritangentKind::ExOppP: return "ex_opp_p";
    case TritangentKind::ExOppQ: return "ex_opp_q";
  }
  return "?";
}

Placement Placement::axis_aligned(Point origin, int sign_x, int sign_y, bool swap_axes) {
  const Rat sx = sign_x < 0 ? -1 : 1;
  const Rat sy = sign_y < 0 ? -1 : 1;
  Placement p;
  p.origin = std::move(origin);
  if (swap_axes) {
    p.u = {0, sy};
    p.v = {sx, 0};
  } else {
    p.u = {sx, 0};
    p.v = {0, sy};
  }
  return p;
}

Point Placement::map(const Point& canonical) const {
  return origin + canonical.x * u + canonical.y * v;
}

RightTriangleFrame::RightTriangleFrame(Rat leg_p, Rat leg_q, Placement placement)
    : leg_p_(std::move(leg_p)), leg_q_(std::move(leg_q)), placement_(std::move(placement)) {
  if (leg_p_.sign() <= 0 || leg_q_.sign() <= 0) {
    throw GeometryError(ErrorCode::InvalidTriangle, "legs must be positive");
  }
  if (!dot(placement_.u, placement_.v).is_zero() || dot(placement_.u, placement_.u) != Rat(1) ||
      dot(placement_.v, placement_.v) != Rat(1)) {
    throw GeometryError(ErrorCode::InvalidTriangle, "placement is not rigid");
  }
  auto h = sqrt_rat(square(leg_p_) + square(leg_q_));
  if (!h) {
    throw GeometryError(ErrorCode::NotASquare,
                        "hypotenuse^2 = " + (square(leg_p_) + square(leg_q_)).to_string());
  }
  hyp_ = *h;
}

RightTriangleFrame RightTriangleFrame::from_vertices(const Point& right, const Point& p_end,
                                                     const Point& q_end) {
  const Point dp = p_end - right;
  const Point dq = q_end - right;
  if (!dot(dp, dq).is_zero()) {
    throw GeometryError(ErrorCode::InvalidTriangle, "legs are not perpendicular");
  }
  const Rat p_sq = dot(dp, dp);
  const Rat q_sq = dot(dq, dq);
  if (p_sq.is_zero() || q_sq.is_zero()) {
    throw GeometryError(ErrorCode::InvalidTriangle, "zero-length leg");
  }
  const auto p = sqrt_rat(p_sq);
  const auto q = sqrt_rat(q_sq);
  if (!p || !q) throw GeometryError(ErrorCode::NotASquare, "irrational leg length");
  Placement placement{right, (Rat(1) / *p) * dp, (Rat(1) / *q) * dq};
  return RightTriangleFrame(*p, *q, std::move(placement));
}

Circle tritangent_circle(const RightTriangleFrame& t, TritangentKind kind) {
  const Rat& p = t.leg_p();
  const Rat& q = t.leg_q();
  const Rat& h = t.hyp();
  const Rat half(1, 2);
  Rat radius;
  Point canonical;
  switch (kind) {
    case TritangentKind::Incircle:
      radius = half * (p + q - h);
      canonical = {radius, radius};
      break;
    case TritangentKind::ExOppRight:
      radius = half * (p + q + h);
      canonical = {radius, radius};
      break;
    case TritangentKind::ExOppP:
      radius = half * (h + q - p);
      canonical = {-radius, radius};
      break;
    case TritangentKind::ExOppQ:
      radius = half * (h + p - q);
      canonical = {radius, -radius};
      break;
  }
  return {t.placement().map(canonical), radius};
}

std::array<Circle, 4> tritangent_circles(const RightTriangleFrame& t) {
  return {tritangent_circle(t, TritangentKind::Incircle),
          tritangent_circle(t, TritangentKind::ExOppRight),
          tritangent_circle(t, TritangentKind::ExOppP),
          tritangent_circle(t, TritangentKind::ExOppQ)};
}

std::optional<TritangentKind> kind_of(const RightTriangleFrame& t, const Circle& c) {
  for (TritangentKind kind : kAllTritangentKinds) {
    if (tritangent_circle(t, kind) == c) return kind;
  }
  return std::nullopt;
}

namespace {

void require_valid(const GeneralTriangleSides& s) {
  if (s.a.sign() <= 0 || s.b.sign() <= 0 || s.c.sign() <= 0 || s.a >= s.b + s.c ||
      s.b >= s.a + s.c || s.c >= s.a + s.b) {
    throw GeometryError(ErrorCode::InvalidTriangle, "sides " + s.a.to_string() + ", " +
                                                        s.b.to_string() + ", " + s.c.to_string());
  }
}

// Circles lying inside angle A: the incircle and the excircle opposite A.
bool inside_angle_a(TritangentKind kind) {
  return kind == TritangentKind::Incircle || kind == TritangentKind::ExOppRight;
}

}  // namespace

Rat sin2_half_subtended(const GeneralTriangleSides& sides, TritangentKind kind) {
  require_valid(sides);
  const Rat& a = sides.a;
  const Rat& b = sides.b;
  const Rat& c = sides.c;
  const Rat s = Rat(1, 2) * (a + b + c);

  // Tangent length from A and whether Z (on AB) and Y (on CA) lie on the rays from A.
  Rat from_a;
  bool z_on_ray = true;
  bool y_on_ray = true;
  switch (kind) {
    case TritangentKind::Incircle: from_a = s - a; break;
    case TritangentKind::ExOppRight: from_a = s; break;
    case TritangentKind::ExOppP: from_a = s - c; z_on_ray = false; break;
    case TritangentKind::ExOppQ: from_a = s - b; y_on_ray = false; break;
  }
  const Rat bz = z_on_ray ? (c - from_a).abs() : c + from_a;
  const Rat cy = y_on_ray ? (b - from_a).abs() : b + from_a;
  return bz * cy / (b * c);
}

Rat sin2_half_subtended_by_cosines(const GeneralTriangleSides& sides, TritangentKind kind) {
  require_valid(sides);
  const Rat cos_a = (square(sides.b) + square(sides.c) - square(sides.a)) /
                    (Rat(2) * sides.b * sides.c);
  const Rat half(1, 2);
  return inside_angle_a(kind) ? half * (Rat(1) - cos_a) : half * (Rat(1) + cos_a);
}

HansenRelations hansen_relations(const RightTriangleFrame& t) {
  const Rat r = tritangent_circle(t, TritangentKind::Incircle).radius;
  const Rat r_right = tritangent_circle(t, TritangentKind::ExOppRight).radius;
  const Rat r_p = tritangent_circle(t, TritangentKind::ExOppP).radius;
  const Rat r_q = tritangent_circle(t, TritangentKind::ExOppQ).radius;
  HansenRelations out;
  out.sum_ok = r_right == r + r_p + r_q;
  out.product_ok = r * r_right == r_p * r_q;
  out.leg_b_ok = r + r_p == t.leg_q();
  out.leg_c_ok = r + r_q == t.leg_p();
  return out;
}

Line common_tangent_perpendicular(const RightTriangleFrame& t, TritangentKind first,
                                  TritangentKind second) {
  const auto on_bisector_of_right = [](TritangentKind k) {
    return k == TritangentKind::Incircle || k == TritangentKind::ExOppRight;
  };
  if (on_bisector_of_right(first) == on_bisector_of_right(second)) {
    throw GeometryError(ErrorCode::UnsupportedPair,
                        std::string(to_string(first)) + "/" + std::string(to_string(second)));
  }
  const Circle c1 = tritangent_circle(t, first);
  const Circle c2 = tritangent_circle(t, second);
  // The common tangents of two circles are permuted by reflection in the
  // line of centers; the side line whose image is not a side line yields the
  // remaining tangent.
  const Line axis = line_through(c1.center, c2.center);
  const auto sides = t.side_lines();
  for (const Line& side : sides) {
    const Line image = reflect_line(side, axis);
    if (image != sides[0] && image != sides[1] && image != sides[2]) return image;
  }
  throw std::logic_error("common_tangent_perpendicular: no fourth tangent");
}

Circle tritangent_on_line(const RightTriangleFrame& t, const Point& through, const Circle& known) {
  if (through != t.right_vertex() && through != t.p_vertex() && through != t.q_vertex()) {
    throw GeometryError(ErrorCode::NoSuchCircle, "selector point is not a vertex");
  }
  if (!kind_of(t, known)) {
    throw GeometryError(ErrorCode::NoSuchCircle, "known circle is not tritangent");
  }
  std::vector<Circle> matches;
  for (const Circle& candidate : tritangent_circles(t)) {
    if (candidate != known && collinear(through, known.center, candidate.center)) {
      matches.push_back(candidate);
    }
  }
  if (matches.size() != 1) {
    throw GeometryError(ErrorCode::NoSuchCircle,
                        std::to_string(matches.size()) + " candidates on the line");
  }
  return matches.front();
}

}  // namespace haga
