#include "haga/config.hpp"

#include <stdexcept>

#include "haga/errors.hpp"

namespace haga {

std::string_view to_string(HagaCase c) {
  switch (c) {
    case HagaCase::H1: return "h1";
    case HagaCase::H2: return "h2";
    case HagaCase::H3: return "h3";
    case HagaCase::H4: return "h4";
    case HagaCase::H5: return "h5";
    case HagaCase::H6: return "h6";
    case HagaCase::H7: return "h7";
  }
  return "?";
}

std::optional<HagaCase> parse_case(std::string_view text) {
  for (HagaCase c : kAllCases) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

bool is_ordinary(HagaCase c) {
  return c == HagaCase::H1 || c == HagaCase::H3 || c == HagaCase::H5 || c == HagaCase::H7;
}

bool is_degenerate(HagaCase c) { return c == HagaCase::H4 || c == HagaCase::H6; }

HagaCase classify(const Rat& d, const Rat& e) {
  if (d.sign() <= 0) throw GeometryError(ErrorCode::InvalidSquare, "d = " + d.to_string());
  const Rat two_d = Rat(2) * d;
  if (e > two_d) return HagaCase::H1;
  if (e == two_d) return HagaCase::H2;
  if (e > d) return HagaCase::H3;
  if (e == d) return HagaCase::H4;
  if (e.sign() > 0) return HagaCase::H5;
  if (e.is_zero()) return HagaCase::H6;
  return HagaCase::H7;
}

HagaConfig build(const Rat& d, const Rat& e) {
  HagaConfig cfg;
  cfg.kind = classify(d, e);
  cfg.d = d;
  cfg.e = e;
  cfg.A = {0, 0};
  cfg.B = {d, 0};
  cfg.C = {d, d};
  cfg.D = {0, d};
  cfg.E = {0, e};
  cfg.crease = perpendicular_bisector(cfg.C, cfg.E);

  if (cfg.kind == HagaCase::H6) {
    // E = A: the crease passes through B, and B' = F = B by definition.
    cfg.B_prime = cfg.B;
    cfg.F = cfg.B;
  } else {
    cfg.B_prime = reflect_point(cfg.B, cfg.crease);
    const Intersection hit = intersect_lines(cfg.line_AB(), cfg.line_B_prime_E());
    if (const auto* p = std::get_if<Point>(&hit)) {
      cfg.F = *p;
    } else if (std::holds_alternative<Coincident>(hit) || cfg.kind != HagaCase::H2) {
      throw std::logic_error("build: line B'E unexpectedly parallel to AB");
    }
  }

  // The crease is never horizontal: C and E differ in x by d > 0.
  cfg.G = std::get<Point>(intersect_lines(cfg.crease, cfg.line_AB()));
  cfg.H = std::get<Point>(intersect_lines(cfg.crease, cfg.line_CD()));

  cfg.b = (d - e).abs();
  if (cfg.F) {
    cfg.c = (d - cfg.F->x).abs();
    const auto overhang = sqrt_rat(dist_sq(cfg.B_prime, *cfg.F));
    if (!overhang) throw std::logic_error("build: |B'F| is irrational");
    cfg.a = *overhang;
  }
  return cfg;
}

namespace {

void require_f(const HagaConfig& cfg) {
  if (!cfg.F || !cfg.a || !cfg.c) {
    throw GeometryError(ErrorCode::NoF, "case h2: F does not exist");
  }
}

void require_gh(const HagaConfig& cfg) {
  require_f(cfg);
  if (!cfg.G || !cfg.H) throw GeometryError(ErrorCode::NoGH, "G or H missing");
}

template <typename Pred>
Circle select_unique(const std::array<Circle, 4>& circles, Pred pred, const char* what) {
  const Circle* found = nullptr;
  int count = 0;
  for (const Circle& c : circles) {
    if (pred(c)) {
      found = &c;
      ++count;
    }
  }
  if (count != 1) {
    throw GeometryError(ErrorCode::NoSuchCircle,
                        std::string(what) + ": " + std::to_string(count) + " candidates");
  }
  return *found;
}

// Foot of the center on the line through p, q falls within the closed segment.
bool touches_segment(const Circle& c, const Point& p, const Point& q) {
  const Point foot = foot_of_perpendicular(c.center, line_through(p, q));
  const Point pq = q - p;
  const Rat t = dot(foot - p, pq) / dot(pq, pq);
  return t.sign() >= 0 && t <= Rat(1);
}

bool opposite_sides(const Line& l, const Point& u, const Point& v) {
  return l.eval(u).sign() * l.eval(v).sign() < 0;
}

Circle point_circle(const Point& p) { return {p, 0}; }

Circle incircle_of_square(const HagaConfig& cfg) {
  const Rat half_d = Rat(1, 2) * cfg.d;
  return {{half_d, half_d}, half_d};
}

}  // namespace

Rat ef_length(const HagaConfig& cfg) {
  require_f(cfg);
  const Rat& b = cfg.b;
  const Rat& c = *cfg.c;
  switch (cfg.kind) {
    case HagaCase::H3: return c - b;
    case HagaCase::H7: return b - c;
    default: return b + c;
  }
}

const Circle& circle_by_name(const CircleSet& set, std::string_view name) {
  if (name == "delta") return set.delta;
  if (name == "alpha") return set.alpha;
  if (name == "beta") return set.beta;
  if (name == "gamma") return set.gamma;
  if (name == "eps1") return set.eps1;
  if (name == "eps2") return set.eps2;
  if (name == "eps3") return set.eps3;
  if (name == "eps4") return set.eps4;
  if (name == "eps5") return set.eps5;
  if (name == "eps6") return set.eps6;
  throw GeometryError(ErrorCode::UnknownCircle, std::string(name));
}

RightTriangleFrame triangle_AEF(const HagaConfig& cfg) {
  require_f(cfg);
  return RightTriangleFrame::from_vertices(cfg.A, *cfg.F, cfg.E);
}

RightTriangleFrame triangle_BFG(const HagaConfig& cfg) {
  require_gh(cfg);
  return RightTriangleFrame::from_vertices(cfg.B_prime, *cfg.F, *cfg.G);
}

RightTriangleFrame triangle_DEH(const HagaConfig& cfg) {
  require_gh(cfg);
  return RightTriangleFrame::from_vertices(cfg.D, cfg.E, *cfg.H);
}

Circle circle_delta(const HagaConfig& cfg) { return {cfg.C, cfg.d}; }

Circle circle_alpha(const HagaConfig& cfg) {
  require_f(cfg);
  if (is_degenerate(cfg.kind)) return point_circle(cfg.A);
  return tritangent_on_line(triangle_AEF(cfg), cfg.A, circle_delta(cfg));
}

Circle circle_beta(const HagaConfig& cfg) {
  require_f(cfg);
  if (cfg.kind == HagaCase::H4) return point_circle(cfg.A);
  if (cfg.kind == HagaCase::H6) return reflect_circle(circle_delta(cfg), cfg.line_AB());
  return tritangent_on_line(triangle_AEF(cfg), cfg.E, circle_alpha(cfg));
}

Circle circle_gamma(const HagaConfig& cfg) {
  require_f(cfg);
  if (cfg.kind == HagaCase::H4) return reflect_circle(circle_delta(cfg), cfg.line_DA());
  if (cfg.kind == HagaCase::H6) return point_circle(cfg.A);
  return tritangent_on_line(triangle_AEF(cfg), *cfg.F, circle_alpha(cfg));
}

Circle circle_eps1(const HagaConfig& cfg) {
  require_f(cfg);
  const Intersection hit = intersect_lines(cfg.crease, cfg.line_AC());
  const auto* center = std::get_if<Point>(&hit);
  if (!center) throw std::logic_error("eps1: crease parallel to AC outside case h2");
  // Equidistant from BC and CD since the center is on AC.
  return {*center, (cfg.d - center->x).abs()};
}

EpsCircles circles_eps2_to_eps6(const HagaConfig& cfg) {
  require_gh(cfg);
  if (cfg.kind == HagaCase::H4) {
    const Circle inc = incircle_of_square(cfg);
    return {point_circle(cfg.A), point_circle(cfg.A), point_circle(cfg.D), inc,
            reflect_circle(inc, cfg.line_CD())};
  }
  if (cfg.kind == HagaCase::H6) {
    return {point_circle(cfg.B), point_circle(cfg.B), point_circle(cfg.D), point_circle(cfg.B),
            point_circle(cfg.D)};
  }

  const bool excircle_case = cfg.kind == HagaCase::H1 || cfg.kind == HagaCase::H3;
  const Point& F = *cfg.F;
  const Point& G = *cfg.G;
  const Point& H = *cfg.H;

  const RightTriangleFrame bfg = triangle_BFG(cfg);
  const auto bfg_circles = tritangent_circles(bfg);
  const Line bf = line_through(cfg.B_prime, F);
  const Circle eps2 =
      excircle_case
          ? select_unique(bfg_circles,
                          [&](const Circle& c) { return opposite_sides(bf, c.center, G); },
                          "eps2")
          : tritangent_circle(bfg, TritangentKind::Incircle);
  const Circle eps3 = select_unique(
      bfg_circles,
      [&](const Circle& c) {
        return c != eps2 && touches_segment(c, cfg.B_prime, F) &&
               opposite_sides(bf, c.center, eps2.center);
      },
      "eps3");

  const RightTriangleFrame deh = triangle_DEH(cfg);
  const Line de = line_through(cfg.D, cfg.E);
  const Circle eps4 =
      excircle_case
          ? select_unique(tritangent_circles(deh),
                          [&](const Circle& c) { return opposite_sides(de, c.center, H); },
                          "eps4")
          : tritangent_circle(deh, TritangentKind::Incircle);

  return {eps2, eps3, eps4, tritangent_on_line(bfg, F, eps3),
          tritangent_on_line(deh, cfg.E, eps4)};
}

CircleSet circle_set(const HagaConfig& cfg) {
  require_gh(cfg);
  CircleSet set;
  set.delta = circle_delta(cfg);
  set.alpha = circle_alpha(cfg);
  set.beta = circle_beta(cfg);
  set.gamma = circle_gamma(cfg);
  set.eps1 = circle_eps1(cfg);
  EpsCircles eps = circles_eps2_to_eps6(cfg);
  set.eps2 = std::move(eps.eps2);
  set.eps3 = std::move(eps.eps3);
  set.eps4 = std::move(eps.eps4);
  set.eps5 = std::move(eps.eps5);
  set.eps6 = std::move(eps.eps6);
  return set;
}

Rat fg_length(const HagaConfig& cfg) {
  require_gh(cfg);
  return (cfg.F->x - cfg.G->x).abs();
}

Rat dh_length(const HagaConfig& cfg) {
  require_gh(cfg);
  return (cfg.H->x - cfg.D.x).abs();
}

Rat fg_dh_relation(const HagaConfig& cfg) {
  const Rat fg = fg_length(cfg);
  const Rat dh = dh_length(cfg);
  if (cfg.kind == HagaCase::H1 || cfg.kind == HagaCase::H3) return fg - dh;
  return dh - fg;
}

Rat signed_sum_residue(HagaCase kind, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  switch (kind) {
    case HagaCase::H1: return d - (a - b - c);
    case HagaCase::H3: return d - (-a - b + c);
    case HagaCase::H4:
    case HagaCase::H5:
    case HagaCase::H6: return d - (a + b + c);
    case HagaCase::H7: return d - (-a + b - c);
    case HagaCase::H2: break;
  }
  throw GeometryError(ErrorCode::NoF, "case h2: F does not exist");
}

LengthIdentities length_identities(const HagaConfig& cfg) {
  require_f(cfg);
  const Rat& a = *cfg.a;
  const Rat& b = cfg.b;
  const Rat& c = *cfg.c;
  LengthIdentities out;
  out.sum_ok = signed_sum_residue(cfg.kind, a, b, c, cfg.d).is_zero();
  out.product_ok = a * cfg.d == b * c;
  out.haga_ok = cfg.e.abs() * cfg.F->x.abs() == Rat(2) * b * c;
  return out;
}

std::vector<Square> squares_from_triangle(const RightTriangleFrame& t) {
  std::vector<Square> squares;
  const Point A = t.right_vertex();
  const Line af = t.leg_p_line();
  const Line ae = t.leg_q_line();
  for (TritangentKind kind : kAllTritangentKinds) {
    const Circle alpha = tritangent_circle(t, kind);
    const Circle delta = tritangent_on_line(t, A, alpha);
    squares.push_back({A, foot_of_perpendicular(delta.center, af), delta.center,
                       foot_of_perpendicular(delta.center, ae)});
  }
  return squares;
}

SquareCoordinates square_coordinates(const Square& square, const Point& E, const Point& F) {
  const auto side = sqrt_rat(dist_sq(square.A, square.B));
  if (!side || side->is_zero()) {
    throw GeometryError(ErrorCode::InvalidSquare, "side length is not a positive rational");
  }
  const Rat inv = Rat(1) / *side;
  const Point u = inv * (square.B - square.A);
  const Point v = inv * (square.D - square.A);
  const auto coords = [&](const Point& p) { return Point{dot(p - square.A, u), dot(p - square.A, v)}; };
  const Point e_local = coords(E);
  if (!e_local.x.is_zero()) {
    throw GeometryError(ErrorCode::DegenerateInput, "E is not on line AD");
  }
  return {*side, e_local.y, coords(F)};
}

bool is_physically_foldable(const HagaConfig& cfg) {
  bool positive = false;
  bool negative = false;
  for (const Point* corner : {&cfg.A, &cfg.B, &cfg.C, &cfg.D}) {
    const int s = cfg.crease.eval(*corner).sign();
    positive = positive || s > 0;
    negative = negative || s < 0;
  }
  return positive && negative;
}

}  // namespace haga
