#include <gtest/gtest.h>

#include <cmath>

#include "haga/errors.hpp"
#include "haga/oracle.hpp"

namespace haga {
namespace {

TEST(Oracle, ClassicFoldValues) {
  const oracle::ApproxConfig g = oracle::approx_build(2, 1);
  EXPECT_EQ(g.kind, HagaCase::H5);
  EXPECT_NEAR(g.F->x, 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(*g.a, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(*g.c, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(g.circles->eps1.radius, 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(g.circles->eps2.radius, 1.0 / 12.0, 1e-12);
  EXPECT_NEAR(g.circles->eps5.radius, 0.5, 1e-12);
}

TEST(Oracle, AgreesWithExactPath) {
  for (int k = -84; k <= 112; ++k) {
    if (k == 56) continue;
    const Rat e(k, 28);
    const double err = oracle::compare(build(1, e), oracle::approx_build(1, e.to_double()));
    EXPECT_LE(err, 1e-9) << e;
  }
}

TEST(Oracle, NearDegenerateAndShapeMismatch) {
  try {
    oracle::approx_build(1, 2 + 1e-10);
    FAIL();
  } catch (const GeometryError& err) {
    EXPECT_EQ(err.code(), ErrorCode::NearDegenerate);
  }
  try {
    oracle::compare(build(1, 2), oracle::approx_build(1, 2 + 1e-6));
    FAIL();
  } catch (const GeometryError& err) {
    EXPECT_EQ(err.code(), ErrorCode::ShapeMismatch);
  }
  EXPECT_THROW(oracle::compare(build(1, Rat(1, 2)), oracle::approx_build(1, 3)), GeometryError);
  EXPECT_THROW(oracle::approx_build(0, 1), GeometryError);
}

TEST(Oracle, HandValues) {
  EXPECT_NEAR(*oracle::approx_build(1, 3).a, 6.0, 1e-9);
  EXPECT_NEAR(oracle::approx_build(2, -1).circles->eps1.radius, 1.3, 1e-9);
  EXPECT_LE(oracle::compare(build(1, 3), oracle::approx_build(1, 3)), 1e-9);
  EXPECT_LE(oracle::compare(build(2, 1), oracle::approx_build(2, 1)), 1e-9);
}

}  // namespace
}  // namespace haga
