#include "haga/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "haga/errors.hpp"

namespace haga::oracle {

namespace {

Vec2 operator+(Vec2 p, Vec2 q) { return {p.x + q.x, p.y + q.y}; }
Vec2 operator-(Vec2 p, Vec2 q) { return {p.x - q.x, p.y - q.y}; }
Vec2 operator*(double k, Vec2 p) { return {k * p.x, k * p.y}; }
double dotp(Vec2 p, Vec2 q) { return p.x * q.x + p.y * q.y; }
double crossp(Vec2 p, Vec2 q) { return p.x * q.y - p.y * q.x; }
double norm(Vec2 p) { return std::hypot(p.x, p.y); }

double distance_to_line(Vec2 x, Vec2 p, Vec2 q) {
  return std::abs(crossp(q - p, x - p)) / norm(q - p);
}

// Tritangent circle ids of a triangle (P0, P1, P2): incircle, or the
// excircle opposite vertex k.
enum Tri { kIn = -1, kEx0 = 0, kEx1 = 1, kEx2 = 2 };

ApproxCircle weighted_tritangent(const std::array<Vec2, 3>& v, int which) {
  std::array<double, 3> w = {norm(v[2] - v[1]), norm(v[0] - v[2]), norm(v[1] - v[0])};
  if (which >= 0) w[which] = -w[which];
  const double total = w[0] + w[1] + w[2];
  const Vec2 center = (1.0 / total) * (w[0] * v[0] + w[1] * v[1] + w[2] * v[2]);
  return {center, distance_to_line(center, v[0], v[1])};
}

// The other tritangent circle on a line through vertex k and the center of `id`:
// the incircle pairs with the excircle opposite k, the two remaining
// excircles pair with each other.
int partner(int id, int k) {
  if (id == kIn) return k;
  if (id == k) return kIn;
  return 3 - id - k;
}

int closest(const std::array<Vec2, 3>& v, const ApproxCircle& target) {
  int best = kIn;
  double best_err = std::numeric_limits<double>::infinity();
  for (int id = kIn; id <= kEx2; ++id) {
    const ApproxCircle c = weighted_tritangent(v, id);
    const double err = norm(c.center - target.center) + std::abs(c.radius - target.radius);
    if (err < best_err) {
      best_err = err;
      best = id;
    }
  }
  return best;
}

HagaCase approx_classify(double d, double e) {
  const double tol = 1e-12 * std::max(1.0, d);
  if (std::abs(e - 2 * d) <= tol) return HagaCase::H2;
  if (std::abs(e - d) <= tol) return HagaCase::H4;
  if (std::abs(e) <= tol) return HagaCase::H6;
  if (e > 2 * d) return HagaCase::H1;
  if (e > d) return HagaCase::H3;
  if (e > 0) return HagaCase::H5;
  return HagaCase::H7;
}

ApproxCircles approx_circles(const ApproxConfig& g) {
  ApproxCircles out;
  out.delta = {g.C, g.d};

  // eps1: crease meets the diagonal AC; radius measured to line CD.
  {
    const Vec2 mid = 0.5 * (g.C + g.E);
    const Vec2 dir{-(g.E - g.C).y, (g.E - g.C).x};
    const double lambda = (mid.y - mid.x) / (dir.x - dir.y);
    const Vec2 center = mid + lambda * dir;
    out.eps1 = {center, std::abs(g.d - center.y)};
  }

  const double half = 0.5 * g.d;
  if (g.kind == HagaCase::H4) {
    out.alpha = {g.A, 0};
    out.beta = {g.A, 0};
    out.gamma = {{-g.d, g.d}, g.d};
    out.eps2 = out.eps3 = {g.A, 0};
    out.eps4 = {g.D, 0};
    out.eps5 = {{half, half}, half};
    out.eps6 = {{half, 1.5 * g.d}, half};
    return out;
  }
  if (g.kind == HagaCase::H6) {
    out.alpha = {g.A, 0};
    out.beta = {{g.d, -g.d}, g.d};
    out.gamma = {g.A, 0};
    out.eps2 = out.eps3 = out.eps5 = {g.B, 0};
    out.eps4 = out.eps6 = {g.D, 0};
    return out;
  }

  const std::array<Vec2, 3> aef = {g.A, g.E, *g.F};
  const int delta_id = closest(aef, out.delta);
  const int alpha_id = partner(delta_id, 0);
  out.alpha = weighted_tritangent(aef, alpha_id);
  out.beta = weighted_tritangent(aef, partner(alpha_id, 1));
  out.gamma = weighted_tritangent(aef, partner(alpha_id, 2));

  const bool excircle_case = g.kind == HagaCase::H1 || g.kind == HagaCase::H3;
  const std::array<Vec2, 3> bfg = {g.B_prime, *g.F, *g.G};
  const int eps2_id = excircle_case ? kEx2 : kIn;
  const int eps3_id = excircle_case ? kIn : kEx2;
  out.eps2 = weighted_tritangent(bfg, eps2_id);
  out.eps3 = weighted_tritangent(bfg, eps3_id);
  out.eps5 = weighted_tritangent(bfg, partner(eps3_id, 1));

  const std::array<Vec2, 3> deh = {g.D, g.E, *g.H};
  const int eps4_id = excircle_case ? kEx2 : kIn;
  out.eps4 = weighted_tritangent(deh, eps4_id);
  out.eps6 = weighted_tritangent(deh, partner(eps4_id, 1));
  return out;
}

}  // namespace

ApproxConfig approx_build(double d, double e) {
  if (!(d > 0)) throw GeometryError(ErrorCode::InvalidSquare, "d must be positive");
  if (std::abs(e - 2 * d) <= 1e-9) {
    throw GeometryError(ErrorCode::NearDegenerate, "e within 1e-9 of 2d");
  }
  ApproxConfig g;
  g.d = d;
  g.e = e;
  g.kind = approx_classify(d, e);
  g.A = {0, 0};
  g.B = {d, 0};
  g.C = {d, d};
  g.D = {0, d};
  g.E = {0, e};

  // Crease through the midpoint of CE along the perpendicular of CE.
  const Vec2 mid = 0.5 * (g.C + g.E);
  const Vec2 dir{-(g.E - g.C).y, (g.E - g.C).x};
  const auto project = [&](Vec2 p) { return mid + (dotp(p - mid, dir) / dotp(dir, dir)) * dir; };

  if (g.kind == HagaCase::H6) {
    g.B_prime = g.B;
    g.F = g.B;
  } else {
    g.B_prime = 2.0 * project(g.B) - g.B;
    const Vec2 run = g.B_prime - g.E;
    const double s = -g.E.y / run.y;
    g.F = g.E + s * run;
  }
  g.G = mid + (-mid.y / dir.y) * dir;
  g.H = mid + ((d - mid.y) / dir.y) * dir;

  g.b = norm(g.D - g.E);
  g.c = norm(g.B - *g.F);
  g.a = norm(g.B_prime - *g.F);
  g.circles = approx_circles(g);
  return g;
}

double compare(const HagaConfig& exact, const ApproxConfig& approx) {
  if (exact.kind != approx.kind) {
    throw GeometryError(ErrorCode::ShapeMismatch, "case differs");
  }
  if (exact.F.has_value() != approx.F.has_value()) {
    throw GeometryError(ErrorCode::ShapeMismatch, "F present in one configuration only");
  }
  double worst = 0;
  const auto scalar = [&](const Rat& x, double y) {
    worst = std::max(worst, std::abs(x.to_double() - y));
  };
  const auto point = [&](const Point& p, Vec2 q) {
    scalar(p.x, q.x);
    scalar(p.y, q.y);
  };
  const auto circle = [&](const Circle& c, const ApproxCircle& q) {
    point(c.center, q.center);
    scalar(c.radius, q.radius);
  };

  point(exact.A, approx.A);
  point(exact.B, approx.B);
  point(exact.C, approx.C);
  point(exact.D, approx.D);
  point(exact.E, approx.E);
  point(exact.B_prime, approx.B_prime);
  point(*exact.G, *approx.G);
  point(*exact.H, *approx.H);
  scalar(exact.b, approx.b);
  if (!exact.F) return worst;

  point(*exact.F, *approx.F);
  scalar(*exact.a, *approx.a);
  scalar(*exact.c, *approx.c);
  const CircleSet s = circle_set(exact);
  const ApproxCircles& q = *approx.circles;
  circle(s.delta, q.delta);
  circle(s.alpha, q.alpha);
  circle(s.beta, q.beta);
  circle(s.gamma, q.gamma);
  circle(s.eps1, q.eps1);
  circle(s.eps2, q.eps2);
  circle(s.eps3, q.eps3);
  circle(s.eps4, q.eps4);
  circle(s.eps5, q.eps5);
  circle(s.eps6, q.eps6);
  return worst;
}

}  // namespace haga::oracle
