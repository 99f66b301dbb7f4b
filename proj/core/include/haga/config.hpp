#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "haga/kernel.hpp"
#include "haga/tritangent.hpp"

namespace haga {

/// Position of E on line DA relative to D and A (frame: A=(0,0), D=(0,d)).
///   H1: e > 2d   H2: e = 2d   H3: d < e < 2d   H4: e = d
///   H5: 0 < e < d   H6: e = 0   H7: e < 0
enum class HagaCase { H1, H2, H3, H4, H5, H6, H7 };

inline constexpr std::array<HagaCase, 7> kAllCases = {HagaCase::H1, HagaCase::H2, HagaCase::H3,
                                                      HagaCase::H4, HagaCase::H5, HagaCase::H6,
                                                      HagaCase::H7};

std::string_view to_string(HagaCase c);
std::optional<HagaCase> parse_case(std::string_view text);

/// H1, H3, H5, H7: the triangle AEF is proper.
bool is_ordinary(HagaCase c);
/// H4 (E = D) and H6 (E = A).
bool is_degenerate(HagaCase c);

/// Throws InvalidSquare when d <= 0.
HagaCase classify(const Rat& d, const Rat& e);

/// The fold of square ABCD carrying C onto E = (0, e); A=(0,0), B=(d,0),
/// C=(d,d), D=(0,d). F, G, H, a and c are absent only in case H2.
struct HagaConfig {
  Rat d;
  Rat e;
  Point A, B, C, D, E;
  Line crease{1, 0, 0};
  Point B_prime;
  std::optional<Point> F;
  std::optional<Point> G;
  std::optional<Point> H;
  HagaCase kind = HagaCase::H1;
  std::optional<Rat> a;  // |B'F|
  Rat b;                 // |DE|
  std::optional<Rat> c;  // |BF|

  Line line_AB() const { return Line(0, 1, 0); }
  Line line_CD() const { return Line(0, 1, -d); }
  Line line_BC() const { return Line(1, 0, -d); }
  Line line_DA() const { return Line(1, 0, 0); }
  Line line_AC() const { return Line(1, -1, 0); }
  Line line_B_prime_E() const { return line_through(B_prime, E); }
};

/// Throws InvalidSquare when d <= 0.
HagaConfig build(const Rat& d, const Rat& e);

/// |EF| by the case table: c-b (H3), b+c (H1, H4, H5, H6), b-c (H7).
Rat ef_length(const HagaConfig& cfg);

struct CircleSet {
  Circle delta, alpha, beta, gamma;
  Circle eps1, eps2, eps3, eps4, eps5, eps6;
};

inline constexpr std::array<std::string_view, 10> kCircleNames = {
    "alpha", "beta", "delta", "eps1", "eps2", "eps3", "eps4", "eps5", "eps6", "gamma"};

/// Lookup by name; throws GeometryError(UnknownCircle).
const Circle& circle_by_name(const CircleSet& set, std::string_view name);

Circle circle_delta(const HagaConfig& cfg);
Circle circle_alpha(const HagaConfig& cfg);
Circle circle_beta(const HagaConfig& cfg);
Circle circle_gamma(const HagaConfig& cfg);
Circle circle_eps1(const HagaConfig& cfg);

struct EpsCircles {
  Circle eps2, eps3, eps4, eps5, eps6;
};
EpsCircles circles_eps2_to_eps6(const HagaConfig& cfg);

/// All named circles; throws NoF in case H2.
CircleSet circle_set(const HagaConfig& cfg);

/// Right triangle AEF with the right angle at A, leg p towards F and leg q
/// towards E. Ordinary cases only.
RightTriangleFrame triangle_AEF(const HagaConfig& cfg);
/// Right triangle B'FG (right angle at B', leg p = B'F, leg q = B'G).
RightTriangleFrame triangle_BFG(const HagaConfig& cfg);
/// Right triangle DEH (right angle at D, leg p = DE, leg q = DH).
RightTriangleFrame triangle_DEH(const HagaConfig& cfg);

Rat fg_length(const HagaConfig& cfg);
Rat dh_length(const HagaConfig& cfg);

/// |FG| - |DH| in cases H1 and H3, |DH| - |FG| otherwise; equals a.
Rat fg_dh_relation(const HagaConfig& cfg);

struct LengthIdentities {
  bool sum_ok = false;      // d = +-a +-b +-c by case
  bool product_ok = false;  // a d = b c
  bool haga_ok = false;     // |AE||AF| = 2 b c
};
LengthIdentities length_identities(const HagaConfig& cfg);

/// Residue of the signed-sum identity: d - (+-a +-b +-c).
Rat signed_sum_residue(HagaCase kind, const Rat& a, const Rat& b, const Rat& c, const Rat& d);

struct Square {
  Point A, B, C, D;
  friend bool operator==(const Square&, const Square&) = default;
};

/// One square per choice of alpha among the tritangent circles of `t`
/// (in kAllTritangentKinds order). The right angle of `t` plays the role of A,
/// the end of leg p the role of F and the end of leg q the role of E.
std::vector<Square> squares_from_triangle(const RightTriangleFrame& t);

/// (d, e) of the configuration on `square` whose fold point is `E`, in the
/// coordinates of build(): A at the origin, AB along +x, AD along +y.
struct SquareCoordinates {
  Rat d;
  Rat e;
  Point F;  // the given triangle's F, expressed in the same coordinates
};
SquareCoordinates square_coordinates(const Square& square, const Point& E, const Point& F);

/// The crease strictly separates two vertices of the square.
bool is_physically_foldable(const HagaConfig& cfg);

}  // namespace haga
