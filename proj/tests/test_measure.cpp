#include <doctest.h>

#include <cmath>

#include "bal/measure.hpp"
#include "bal/quad.hpp"
#include "bal/rng.hpp"
#include "bal/testfn.hpp"

using namespace bal;

namespace {

DiscreteCharge atoms_charge(int d, std::vector<Atom> atoms) {
  DiscreteCharge m;
  m.d = d;
  m.atoms = std::move(atoms);
  return m;
}

ContinuousComponent uniform_ball(Point c, double r, double total, int level) {
  ContinuousComponent comp;
  comp.kind = ContinuousComponent::Kind::UniformBall;
  comp.center = std::move(c);
  comp.radius = r;
  comp.total = total;
  comp.level = level;
  return comp;
}

}  // namespace

TEST_CASE("extended real arithmetic") {
  const ExtendedReal ni = ExtendedReal::neg_inf();
  const ExtendedReal pi_ = ExtendedReal::pos_inf();
  CHECK(ni.scaled(0.0).value() == 0.0);  // 0 * (+-inf) = 0
  CHECK(pi_.scaled(0.0).value() == 0.0);
  CHECK(ni.scaled(2.0).is_neg_inf());
  CHECK(ni.scaled(-2.0).is_pos_inf());
  CHECK((ni + ExtendedReal(3.0)).is_neg_inf());
  CHECK_THROWS_AS(ni + pi_, UndefinedIntegral);
  CHECK(max(ni, ExtendedReal(-5.0)).value() == -5.0);
  CHECK(ni < ExtendedReal(-1e300));
  CHECK(pi_ > ExtendedReal(1e300));
}

TEST_CASE("total mass") {
  CHECK(total_mass(DiscreteCharge::dirac(Point{0.2, 0.3})) == doctest::Approx(1.0));

  DiscreteCharge m;
  m.d = 2;
  m.components.push_back(uniform_ball(Point::zero(2), 1.0, 1.0, 16));
  m.atoms.push_back(Atom{Point{0.1, 0.1}, -0.25});
  CHECK(total_mass(m) == doctest::Approx(0.75));

  // the fixture bookkeeping: excised ball mass returns as an atom
  DiscreteCharge mu_e;
  mu_e.d = 2;
  const double w = std::pow(0.1 / 0.8, 2);  // r1^d / r^d
  mu_e.components.push_back(uniform_ball(Point::zero(2), 0.8, 1.0, 16));
  mu_e.components.push_back(uniform_ball(Point{0.5, 0.0}, 0.1, -w, 16));
  mu_e.atoms.push_back(Atom{Point{0.5, 0.0}, w});
  CHECK(total_mass(mu_e) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("jordan decomposition") {
  const auto jd = jordan(atoms_charge(2, {Atom{Point{0.0, 0.0}, 2.0}, Atom{Point{1.0, 0.0}, -3.0}}));
  REQUIRE(jd.pos.atoms.size() == 1);
  REQUIRE(jd.neg.atoms.size() == 1);
  CHECK(jd.pos.atoms[0].w == doctest::Approx(2.0));
  CHECK(jd.neg.atoms[0].w == doctest::Approx(3.0));
  CHECK(jd.total_variation == doctest::Approx(5.0));

  const auto jd2 = jordan(atoms_charge(2, {Atom{Point{0.5, 0.5}, 1.0}}));
  CHECK(jd2.neg.atoms.empty());

  // same point, +2 and -3: coalesce first, then split
  const Point p{0.25, -0.5};
  const auto jd3 = jordan(atoms_charge(2, {Atom{p, 2.0}, Atom{p, -3.0}}));
  CHECK(jd3.pos.atoms.empty());
  REQUIRE(jd3.neg.atoms.size() == 1);
  CHECK(jd3.neg.atoms[0].w == doctest::Approx(1.0));
  CHECK(jd3.total_variation == doctest::Approx(1.0));

  DiscreteCharge with_comp;
  with_comp.d = 2;
  with_comp.components.push_back(uniform_ball(Point::zero(2), 1.0, 1.0, 16));
  CHECK_THROWS_AS(jordan(with_comp), std::invalid_argument);
}

TEST_CASE("jordan reproduces the input after coalescing") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    DiscreteCharge m;
    m.d = 2;
    const int n = 1 + static_cast<int>(rng.next() % 12);
    for (int i = 0; i < n; ++i)
      m.atoms.push_back(Atom{Point{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(-2, 2)});
    const auto jd = jordan(m);
    for (const Atom& a : jd.pos.atoms) CHECK(a.w > 0.0);
    for (const Atom& a : jd.neg.atoms) CHECK(a.w > 0.0);
    const DiscreteCharge diff = mix({{1.0, jd.pos}, {-1.0, jd.neg}});
    const DiscreteCharge orig = coalesced(m);
    size_t oi = 0;
    for (const Atom& a : diff.atoms) {
      if (a.w == 0.0) continue;
      while (oi < orig.atoms.size() && orig.atoms[oi].w == 0.0) ++oi;
      REQUIRE(oi < orig.atoms.size());
      CHECK(dist(a.p, orig.atoms[oi].p) <= 1e-12);
      CHECK(a.w == doctest::Approx(orig.atoms[oi].w).epsilon(1e-12));
      ++oi;
    }
  }
}

TEST_CASE("restrict") {
  const SetExpr far_ball = SetExpr::ball(Point{10.0, 0.0}, 1.0);
  CHECK(restrict_to(DiscreteCharge::dirac(Point{0.0, 0.0}), far_ball).atoms.empty());

  DiscreteCharge m;
  m.d = 2;
  m.components.push_back(uniform_ball(Point::zero(2), 0.4, 1.0, 16));
  const SetExpr big = SetExpr::ball(Point::zero(2), 1.0);
  CHECK(restrict_to(m, big).components.size() == 1);

  const SetExpr small = SetExpr::ball(Point::zero(2), 0.2);
  CHECK_THROWS_AS(restrict_to(m, small), std::invalid_argument);

  // flattened uniform on the unit disk restricted to half radius: area ratio
  DiscreteCharge unit;
  unit.d = 2;
  unit.components.push_back(uniform_ball(Point::zero(2), 1.0, 1.0, 64));
  const DiscreteCharge flat = flatten(unit);
  const DiscreteCharge inner = restrict_to(flat, SetExpr::ball(Point::zero(2), 0.5, true));
  CHECK(total_mass(inner) == doctest::Approx(0.25).epsilon(0.08));
}

TEST_CASE("ball mass") {
  const DiscreteCharge d0 = DiscreteCharge::dirac(Point::zero(2));
  CHECK(ball_mass(d0, BallQuery{Point::zero(2), 1.0}) == doctest::Approx(1.0));
  CHECK(ball_mass(atoms_charge(2, {}), BallQuery{Point::zero(2), 1.0}) == 0.0);
  // boundary atoms count (closed-ball semantics)
  const DiscreteCharge edge = DiscreteCharge::dirac(Point{1.0, 0.0});
  CHECK(ball_mass(edge, BallQuery{Point::zero(2), 1.0}) == doctest::Approx(1.0));
  // the counterexample atom weight: r1^d / r^d
  DiscreteCharge mu_e_atom = DiscreteCharge::dirac(Point{0.5, 0.0}, 0.01 / 0.64);
  CHECK(ball_mass(mu_e_atom, BallQuery{Point{0.5, 0.0}, 1e-9}) ==
        doctest::Approx(0.015625).epsilon(1e-14));
}

TEST_CASE("integrate under extended-real rules") {
  const Point pole{0.3, 0.3};
  const TestFunction pot = point_potential(pole, 2);
  CHECK(integrate(DiscreteCharge::dirac(pole, 1.0), pot).is_neg_inf());
  CHECK(integrate(DiscreteCharge::dirac(pole, 0.0), pot).value() == 0.0);  // 0 * (-inf) = 0
  CHECK(integrate(DiscreteCharge::dirac(pole, -1.0), pot).is_pos_inf());

  // f == 1 integrates to the total mass
  DiscreteCharge m = atoms_charge(2, {Atom{Point{0.1, 0.2}, 0.7}, Atom{Point{-0.4, 0.0}, 0.6}});
  CHECK(integrate(m, TestFunction::constant(1.0)).value() == doctest::Approx(total_mass(m)));

  // +inf and -inf in one integral is undefined
  DiscreteCharge bad = atoms_charge(2, {Atom{pole, 1.0}, Atom{pole, -1.0}});
  CHECK_THROWS_AS(integrate(bad, pot), UndefinedIntegral);

  // mean-value identity on the 64-node circle rule
  ContinuousComponent circ;
  circ.kind = ContinuousComponent::Kind::SurfaceSphere;
  circ.center = Point::zero(2);
  circ.radius = 1.0;
  circ.total = 1.0;
  circ.level = 64;
  DiscreteCharge sphere;
  sphere.d = 2;
  sphere.components.push_back(circ);
  Polynomial h(2);
  h.add_term({2, 0}, 1.0);
  h.add_term({0, 2}, -1.0);
  CHECK(std::abs(integrate(flatten(sphere), TestFunction::harmonic_poly(h)).value()) <= 1e-12);
}

TEST_CASE("convolution") {
  const DiscreteCharge da = DiscreteCharge::dirac(Point{0.25, 0.0});
  const DiscreteCharge db = DiscreteCharge::dirac(Point{0.0, 0.5});
  const DiscreteCharge dc = convolve(da, db);
  REQUIRE(dc.atoms.size() == 1);
  CHECK(dist(dc.atoms[0].p, Point{0.25, 0.5}) <= 1e-15);

  // delta at the origin is the identity
  DiscreteCharge m = atoms_charge(2, {Atom{Point{0.1, 0.2}, 0.5}, Atom{Point{-0.3, 0.4}, 1.5}});
  const DiscreteCharge id = convolve(DiscreteCharge::dirac(Point::zero(2)), m);
  const DiscreteCharge ms = coalesced(m);
  REQUIRE(id.atoms.size() == ms.atoms.size());
  for (size_t i = 0; i < id.atoms.size(); ++i) {
    CHECK(dist(id.atoms[i].p, ms.atoms[i].p) <= 1e-15);
    CHECK(id.atoms[i].w == doctest::Approx(ms.atoms[i].w));
  }

  // 3 x 3 atoms: brute-force pair enumeration oracle
  DiscreteCharge a = atoms_charge(2, {Atom{Point{0.0, 0.0}, 1.0}, Atom{Point{1.0, 0.0}, 2.0},
                                      Atom{Point{0.0, 1.0}, 3.0}});
  DiscreteCharge b = atoms_charge(2, {Atom{Point{0.5, 0.0}, -1.0}, Atom{Point{0.0, 0.5}, 0.5},
                                      Atom{Point{0.25, 0.25}, 2.0}});
  const DiscreteCharge ab = convolve(a, b);
  CHECK(ab.atoms.size() == 9);
  double oracle_mass = 0.0;
  for (const Atom& x : a.atoms)
    for (const Atom& y : b.atoms) oracle_mass += x.w * y.w;
  CHECK(total_mass(ab) == doctest::Approx(oracle_mass).epsilon(1e-13));
  CHECK(total_mass(ab) == doctest::Approx(total_mass(a) * total_mass(b)).epsilon(1e-12));
}

TEST_CASE("convolution mass multiplicativity on random charges") {
  SplitMix64 rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    DiscreteCharge a, b;
    a.d = b.d = 2;
    for (int i = 0; i < 6; ++i)
      a.atoms.push_back(Atom{Point{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(-1, 1)});
    for (int i = 0; i < 5; ++i)
      b.atoms.push_back(Atom{Point{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(-1, 1)});
    CHECK(total_mass(convolve(a, b)) ==
          doctest::Approx(total_mass(a) * total_mass(b)).epsilon(1e-12));
  }
}

TEST_CASE("mix") {
  DiscreteCharge m = atoms_charge(2, {Atom{Point{0.3, 0.0}, 1.0}});
  const DiscreteCharge same = mix({{1.0, m}});
  CHECK(total_mass(same) == doctest::Approx(1.0));

  ContinuousComponent circ;
  circ.kind = ContinuousComponent::Kind::SurfaceSphere;
  circ.center = Point{0.0, 0.0};
  circ.radius = 0.5;
  circ.total = 1.0;
  circ.level = 16;
  DiscreteCharge omega;
  omega.d = 2;
  omega.components.push_back(circ);
  const DiscreteCharge mixture = mix({{0.5, DiscreteCharge::dirac(Point{0.1, 0.0})}, {0.5, omega}});
  CHECK(total_mass(mixture) == doctest::Approx(1.0).epsilon(1e-14));

  // two disjoint ball measures with weights summing to one
  DiscreteCharge w1, w2;
  w1.d = w2.d = 2;
  ContinuousComponent s1 = circ, s2 = circ;
  s1.center = Point{-2.0, 0.0};
  s2.center = Point{2.0, 0.0};
  w1.components.push_back(s1);
  w2.components.push_back(s2);
  const DiscreteCharge jm = mix({{0.5, w1}, {0.5, w2}});
  CHECK(total_mass(jm) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(total_mass(flatten(jm)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pushforward") {
  const Point v{0.4, -0.2};
  const DiscreteCharge shifted =
      pushforward(DiscreteCharge::dirac(Point::zero(2)), [&v](const Point& p) { return p + v; });
  REQUIRE(shifted.atoms.size() == 1);
  CHECK(dist(shifted.atoms[0].p, v) <= 1e-15);

  DiscreteCharge m = atoms_charge(2, {Atom{Point{0.1, 0.2}, 0.5}, Atom{Point{-0.3, 0.4}, 1.5}});
  const DiscreteCharge same = pushforward(m, [](const Point& p) { return p; });
  CHECK(total_mass(same) == doctest::Approx(total_mass(m)));

  // shifting a ball discretization moves its ball mass with it
  DiscreteCharge ball;
  ball.d = 2;
  ball.components.push_back(uniform_ball(Point::zero(2), 0.5, 1.0, 32));
  const DiscreteCharge flat = flatten(ball);
  const double before = ball_mass(flat, BallQuery{Point::zero(2), 0.25});
  const DiscreteCharge moved = pushforward(flat, [&v](const Point& p) { return p + v; });
  CHECK(ball_mass(moved, BallQuery{v, 0.25}) == doctest::Approx(before).epsilon(1e-12));

  CHECK_THROWS_AS(
      pushforward(m, [](const Point&) -> Point { throw std::runtime_error("outside chart"); }),
      std::invalid_argument);
}

TEST_CASE("integrate is linear in the charge") {
  SplitMix64 rng(42);
  Polynomial p(2);
  p.add_term({1, 0}, 0.5);
  p.add_term({0, 2}, 1.25);
  p.add_term({0, 0}, -0.3);
  const TestFunction f = TestFunction::smooth_sbh(p);
  for (int trial = 0; trial < 10; ++trial) {
    DiscreteCharge a, b;
    a.d = b.d = 2;
    for (int i = 0; i < 5; ++i)
      a.atoms.push_back(Atom{Point{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(-1, 1)});
    for (int i = 0; i < 7; ++i)
      b.atoms.push_back(Atom{Point{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(-1, 1)});
    const double alpha = rng.uniform(-2, 2), beta = rng.uniform(-2, 2);
    const double lhs = integrate(mix({{alpha, a}, {beta, b}}), f).value();
    const double rhs = alpha * integrate(a, f).value() + beta * integrate(b, f).value();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("charge json round trip") {
  DiscreteCharge m;
  m.d = 2;
  m.atoms.push_back(Atom{Point{0.5, 0.0}, 0.015625});
  m.components.push_back(uniform_ball(Point::zero(2), 0.8, 1.0, 128));
  const DiscreteCharge back = charge_from_json(charge_to_json(m));
  CHECK(back.d == 2);
  REQUIRE(back.atoms.size() == 1);
  CHECK(back.atoms[0].w == doctest::Approx(0.015625));
  REQUIRE(back.components.size() == 1);
  CHECK(back.components[0].level == 128);
  CHECK(back.components[0].kind == ContinuousComponent::Kind::UniformBall);
}
