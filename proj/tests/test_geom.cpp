#include <doctest.h>

#include <cmath>

#include "bal/geom.hpp"
#include "bal/rng.hpp"

using namespace bal;

namespace {

// independent gamma route for the constants oracle
double surface_area_oracle(int d) { return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d); }

// hand-rolled central stencil for plain callables
template <class F>
double fd_laplacian(F&& f, const Point& x, double h) {
  double acc = 0.0;
  Point y = x;
  for (int i = 0; i < x.dim(); ++i) {
    y[i] = x[i] + h;
    const double fp = f(y);
    y[i] = x[i] - h;
    const double fm = f(y);
    y[i] = x[i];
    acc += fp + fm - 2.0 * f(x);
  }
  return acc / (h * h);
}

}  // namespace

TEST_CASE("inversion examples and involution") {
  const Point o3 = Point::zero(3);
  const Point r = invert(Point{2.0, 0.0, 0.0}, o3);
  CHECK(r[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r[1] == 0.0);

  const Point o2 = Point::zero(2);
  const Point fixed = invert(Point{1.0, 0.0}, o2);
  CHECK(dist(fixed, Point{1.0, 0.0}) <= 1e-12);

  const Point p{0.3, 0.4};
  CHECK(dist(invert(invert(p, o2), o2), p) <= 1e-12 * norm(p));

  CHECK_THROWS_AS(invert(o2, o2), std::domain_error);
}

TEST_CASE("inversion properties on random points") {
  SplitMix64 rng(31337);
  for (int d = 2; d <= 4; ++d) {
    Point o = Point::zero(d);
    for (int i = 0; i < d; ++i) o[i] = rng.uniform(-0.5, 0.5);
    for (int trial = 0; trial < 50; ++trial) {
      Point p = o;
      for (int i = 0; i < d; ++i) p[i] += rng.uniform(-2.0, 2.0);
      if (dist(p, o) < 1e-3) continue;
      CHECK(dist(invert(invert(p, o), o), p) <= 1e-12 * std::max(1.0, norm(p)));
    }
    // points on the unit sphere around o are fixed
    for (int trial = 0; trial < 20; ++trial) {
      Point dir = Point::zero(d);
      for (int i = 0; i < d; ++i) dir[i] = rng.normal();
      const Point p = o + (1.0 / norm(dir)) * dir;
      CHECK(dist(invert(p, o), p) <= 1e-12);
    }
  }
}

TEST_CASE("dimensional constants") {
  const DimConstants k2 = constants(2);
  CHECK(k2.s == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  CHECK(k2.c == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));
  CHECK(k2.b[2] == doctest::Approx(M_PI).epsilon(1e-14));

  const DimConstants k3 = constants(3);
  CHECK(k3.s == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  CHECK(k3.c == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-14));
  CHECK(k3.b[3] == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));

  CHECK(constants(4).c == doctest::Approx(1.0 / (4.0 * M_PI * M_PI)).epsilon(1e-14));

  // half-integer gamma recursion against the library gamma
  for (int d = 2; d <= 9; ++d) {
    CHECK(sphere_surface_area(d) == doctest::Approx(surface_area_oracle(d)).epsilon(1e-13));
    const DimConstants k = constants(d);
    CHECK(k.c * k.s * std::max(1.0, static_cast<double>(d - 2)) == doctest::Approx(1.0).epsilon(1e-12));
    for (int p = 1; p <= d; ++p)
      CHECK(k.b[static_cast<size_t>(p)] ==
            doctest::Approx(surface_area_oracle(p) / p).epsilon(1e-13));
  }
  CHECK(constants(2).b[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(constants(2).b[0] == 0.0);
  CHECK_THROWS_AS(constants(1), std::invalid_argument);
}

TEST_CASE("kelvin value rule") {
  const Point o = Point::zero(3);
  CHECK(kelvin_value(5.0, Point{0.7, -0.2}, Point::zero(2), 2) == doctest::Approx(5.0));
  CHECK(kelvin_value(1.0, Point{2.0, 0.0, 0.0}, o, 3) == doctest::Approx(2.0));
  CHECK_THROWS_AS(kelvin_value(1.0, o, o, 3), std::domain_error);
}

TEST_CASE("kelvin transform of a constant is harmonic off the center") {
  // u == 1 on the sphere |x| = R transforms to 1/|y| at y = invert(x, 0)
  const Point o = Point::zero(3);
  const double big_r = 2.5;
  for (int k = 0; k < 8; ++k) {
    const double th = 2.0 * M_PI * k / 8.0;
    Point x{big_r * std::cos(th), big_r * std::sin(th), 0.4 * std::sin(3.0 * th)};
    x = (big_r / norm(x)) * x;
    const Point y = invert(x, o);
    CHECK(kelvin_value(1.0, x, o, 3) == doctest::Approx(1.0 / norm(y)).epsilon(1e-12));
  }
  // the transformed field evaluated anywhere: |y|^(2-d) * u(invert(y)) = 1/|y|
  auto field = [&o](const Point& y) { return kelvin_value(1.0, invert(y, o), o, 3); };
  SplitMix64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Point y{rng.uniform(0.3, 1.2), rng.uniform(0.3, 1.2), rng.uniform(0.3, 1.2)};
    CHECK(std::abs(fd_laplacian(field, y, 1e-4)) <= 1e-4);
  }
}

TEST_CASE("set expressions: membership, boxes, json") {
  const SetExpr disk = SetExpr::ball(Point::zero(2), 1.0);
  CHECK(disk.contains(Point{0.5, 0.5}));
  CHECK(!disk.contains(Point{1.0, 0.0}));  // open
  const SetExpr closed = SetExpr::ball(Point::zero(2), 1.0, true);
  CHECK(closed.contains(Point{1.0, 0.0}));

  const SetExpr shell = SetExpr::annulus(Point::zero(2), 0.45, 0.55);
  CHECK(shell.contains(Point{0.5, 0.0}));
  CHECK(shell.contains(Point{0.45, 0.0}));
  CHECK(shell.contains(Point{0.55, 0.0}));
  CHECK(!shell.contains(Point{0.44, 0.0}));
  CHECK(!shell.contains(Point{0.56, 0.0}));

  const SetExpr two = SetExpr::unite({SetExpr::ball(Point{-2.0, 0.0}, 0.5),
                                      SetExpr::ball(Point{2.0, 0.0}, 0.5)});
  CHECK(two.contains(Point{2.1, 0.0}));
  CHECK(!two.contains(Point{0.0, 0.0}));

  const BoundingBox box = two.bounding_box();
  CHECK(box.lo[0] == doctest::Approx(-2.5));
  CHECK(box.hi[0] == doctest::Approx(2.5));

  const SetExpr back = SetExpr::from_json(shell.to_json());
  CHECK(back.contains(Point{0.5, 0.0}));
  CHECK(!back.contains(Point{0.44, 0.0}));

  CHECK(disk.signed_boundary_dist(Point{0.25, 0.0}) == doctest::Approx(-0.75));
  CHECK(disk.signed_boundary_dist(Point{2.0, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("halton points land in the region deterministically") {
  const SetExpr disk = SetExpr::ball(Point::zero(2), 1.0);
  const auto a = halton_in_set(disk, 20, 99);
  const auto b = halton_in_set(disk, 20, 99);
  const auto c = halton_in_set(disk, 20, 100);
  REQUIRE(a.size() == 20);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(disk.contains(a[i]));
    CHECK(dist(a[i], b[i]) == 0.0);
  }
  bool differs = false;
  for (size_t i = 0; i < a.size(); ++i) differs = differs || dist(a[i], c[i]) > 1e-9;
  CHECK(differs);
}
