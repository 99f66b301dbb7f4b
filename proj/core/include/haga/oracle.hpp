#pragma once

#include <optional>

#include "haga/config.hpp"

namespace haga::oracle {

// Floating-point re-derivation of the fold configuration. Shares no
// geometric routine with the exact path: reflections go through projection
// onto the crease direction, tritangent centers through weighted vertex
// averages, and circle selection through a fixed vertex-partner table.

struct Vec2 {
  double x = 0;
  double y = 0;
};

struct ApproxCircle {
  Vec2 center;
  double radius = 0;
};

struct ApproxCircles {
  ApproxCircle delta, alpha, beta, gamma;
  ApproxCircle eps1, eps2, eps3, eps4, eps5, eps6;
};

struct ApproxConfig {
  double d = 0;
  double e = 0;
  HagaCase kind = HagaCase::H1;
  Vec2 A, B, C, D, E, B_prime;
  std::optional<Vec2> F, G, H;
  std::optional<double> a, c;
  double b = 0;
  std::optional<ApproxCircles> circles;
};

/// Throws GeometryError(NearDegenerate) when |e - 2d| <= 1e-9, and
/// InvalidSquare when d <= 0.
ApproxConfig approx_build(double d, double e);

/// Largest absolute coordinate, length or radius discrepancy. Throws
/// GeometryError(ShapeMismatch) when the case or the presence of F differs.
double compare(const HagaConfig& exact, const ApproxConfig& approx);

}  // namespace haga::oracle
