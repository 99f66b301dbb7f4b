#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "haga/kernel.hpp"

namespace haga {

/// The four circles tangent to all three side lines of a right triangle.
/// P and Q name the far ends of the two legs; the right-angle vertex is the
/// origin of the canonical frame.
enum class TritangentKind { Incircle, ExOppRight, ExOppP, ExOppQ };

inline constexpr std::array<TritangentKind, 4> kAllTritangentKinds = {
    TritangentKind::Incircle, TritangentKind::ExOppRight, TritangentKind::ExOppP,
    TritangentKind::ExOppQ};

std::string_view to_string(TritangentKind kind);

/// Rigid map from the canonical frame (right angle at the origin, leg p on
/// the +x axis, leg q on the +y axis) into the plane. `u` and `v` are
/// orthonormal with rational coordinates.
struct Placement {
  Point origin{0, 0};
  Point u{1, 0};
  Point v{0, 1};

  static Placement axis_aligned(Point origin, int sign_x, int sign_y, bool swap_axes);

  Point map(const Point& canonical) const;
};

class RightTriangleFrame {
 public:
  /// Throws InvalidTriangle for a non-positive leg, NotASquare when the
  /// hypotenuse is irrational.
  RightTriangleFrame(Rat leg_p, Rat leg_q, Placement placement = {});

  /// Frame whose right angle sits at `right`, leg p towards `p_end`, leg q
  /// towards `q_end`. The legs must be orthogonal with rational lengths.
  static RightTriangleFrame from_vertices(const Point& right, const Point& p_end,
                                          const Point& q_end);

  const Rat& leg_p() const { return leg_p_; }
  const Rat& leg_q() const { return leg_q_; }
  const Rat& hyp() const { return hyp_; }
  const Placement& placement() const { return placement_; }

  Point right_vertex() const { return placement_.origin; }
  Point p_vertex() const { return placement_.map({leg_p_, 0}); }
  Point q_vertex() const { return placement_.map({0, leg_q_}); }

  Line leg_p_line() const { return line_through(right_vertex(), p_vertex()); }
  Line leg_q_line() const { return line_through(right_vertex(), q_vertex()); }
  Line hyp_line() const { return line_through(p_vertex(), q_vertex()); }
  std::array<Line, 3> side_lines() const { return {leg_p_line(), leg_q_line(), hyp_line()}; }

 private:
  Rat leg_p_, leg_q_, hyp_;
  Placement placement_;
};

/// Side lengths of a general triangle ABC: a = |BC|, b = |CA|, c = |AB|.
struct GeneralTriangleSides {
  Rat a, b, c;
};

/// Canonical radii: r = (p+q-h)/2, r_right = (p+q+h)/2, r_oppP = (h+q-p)/2,
/// r_oppQ = (h+p-q)/2; centers (r,r), (r,r), (-r,r), (r,-r) before placement.
Circle tritangent_circle(const RightTriangleFrame& t, TritangentKind kind);
std::array<Circle, 4> tritangent_circles(const RightTriangleFrame& t);

/// Which tritangent circle of `t` equals `c`, if any.
std::optional<TritangentKind> kind_of(const RightTriangleFrame& t, const Circle& c);

/// sin^2 of half the angle the chosen circle subtends from A, as
/// |BZ||CY|/(bc) with Z, Y the touch points on lines AB and CA. For a
/// general triangle the kinds read as: ExOppRight = opposite A,
/// ExOppP = opposite B, ExOppQ = opposite C.
Rat sin2_half_subtended(const GeneralTriangleSides& sides, TritangentKind kind);

/// Same quantity through the law of cosines: (1 - cos A)/2 when the circle
/// sits inside angle A, (1 + cos A)/2 when it sits in the supplementary angle.
Rat sin2_half_subtended_by_cosines(const GeneralTriangleSides& sides, TritangentKind kind);

struct HansenRelations {
  bool sum_ok = false;      // r_right = r + r_p + r_q
  bool product_ok = false;  // r * r_right = r_p * r_q
  bool leg_b_ok = false;    // r + r_oppP = leg q
  bool leg_c_ok = false;    // r + r_oppQ = leg p

  bool all() const { return sum_ok && product_ok && leg_b_ok && leg_c_ok; }
};

HansenRelations hansen_relations(const RightTriangleFrame& t);

/// The fourth common tangent of two tritangent circles (the one that is not
/// a side line). Only the pairs {ExOppRight or Incircle} x {ExOppP or ExOppQ}
/// are accepted; those tangents are perpendicular to the hypotenuse.
Line common_tangent_perpendicular(const RightTriangleFrame& t, TritangentKind first,
                                  TritangentKind second);

/// The tritangent circle other than `known` whose center is collinear with
/// the vertex `through` and the center of `known`.
Circle tritangent_on_line(const RightTriangleFrame& t, const Point& through, const Circle& known);

}  // namespace haga
