// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Every tolerance is pinned here; the process exits nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bal/balayage.hpp"
#include "bal/construct.hpp"
#include "bal/hull.hpp"
#include "bal/lyons.hpp"
#include "bal/quad.hpp"
#include "bal/rng.hpp"
#include "bal/scenario.hpp"
#include "bal/testfn.hpp"

using namespace bal;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::printf("      FAILED: %s\n", what.c_str());
  }
}

void criterion(int id, const char* title, const std::function<bool()>& body) {
  const int before = g_failures;
  bool threw = false;
  std::string err;
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    threw = true;
    err = e.what();
  }
  const bool pass = ok && !threw && g_failures == before;
  if (threw) std::printf("      EXCEPTION: %s\n", err.c_str());
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, title);
  if (!pass && g_failures == before) ++g_failures;
}

DiscreteCharge uniform_ball_charge(int d, Point c, double r, double total, int level) {
  ContinuousComponent comp;
  comp.kind = ContinuousComponent::Kind::UniformBall;
  comp.center = std::move(c);
  comp.radius = r;
  comp.total = total;
  comp.level = level;
  DiscreteCharge m;
  m.d = d;
  m.components.push_back(comp);
  return m;
}

DiscreteCharge mollifier_charge(int d, Point c, double r, int level) {
  ContinuousComponent comp;
  comp.kind = ContinuousComponent::Kind::Mollifier;
  comp.center = std::move(c);
  comp.radius = r;
  comp.total = 1.0;
  comp.level = level;
  DiscreteCharge m;
  m.d = d;
  m.components.push_back(comp);
  return m;
}

LyonsFixture example5_fixture(int level) {
  LyonsFixture f;
  f.d = 2;
  f.r0 = 0.3;
  f.r = 0.8;
  f.excisions.push_back(Excision{Point{0.5, 0.0}, 0.1});
  f.level = level;
  return f;
}

}  // namespace

int main() {
  const SetExpr unit_disk = SetExpr::ball(Point::zero(2), 1.0);
  std::printf("acceptance: computational balayage toolkit\n");

  // ------------------------------------------------------------------ 1
  criterion(1, "example 5 end to end (d=2, r0=0.3, r=0.8, e1=(0.5,0), r1=0.1)", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const LyonsFixture f = example5_fixture(256);
    const CounterexampleCharges ch = build_counterexample(f);
    const FamilyDescriptor desc = make_default_descriptor(2, unit_disk, 424242);
    const CounterexampleReport rep =
        verify_counterexample(ch, f, desc, 8, {5.0, 10.0, 20.0, 40.0, 50.0}, 1e-7);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    expect(rep.sbh_pair.pass, "(a) theta <= mu over the default subharmonic family");
    expect(rep.sbh_pair.worst_margin.finite() && rep.sbh_pair.worst_margin.value() >= -1e-7,
           "(a) worst margin >= -1e-7");
    expect(rep.har_mu_e.pass, "(b) theta <= mu_E over the degree-8 harmonic family");
    expect(rep.har_max_abs_margin <= 1e-6, "(b) |margins| <= 1e-6 at level >= 128");
    expect(std::abs(ball_mass(flatten(ch.mu_e), BallQuery{Point{0.5, 0.0}, 1e-9}) - 0.015625) <=
               1e-12,
           "(c) mu_E(B(e1, 1e-9)) = 0.015625 to 1e-12");
    expect(rep.sweep.first_failing_m.has_value() && *rep.sweep.first_failing_m <= 50.0,
           "(d) polar witness sweep finds a violating truncation M <= 50");
    expect(seconds <= 10.0, "runtime <= 10 s");
    std::printf("      worst sbh margin %.3e, max |har margin| %.3e, first failing M %s, %.2f s\n",
                rep.sbh_pair.worst_margin.as_double(), rep.har_max_abs_margin,
                rep.sweep.first_failing_m ? format17(*rep.sweep.first_failing_m).c_str() : "none",
                seconds);
    return true;
  });

  // ------------------------------------------------------------------ 2
  criterion(2, "poisson reproducing property on B(0,0.5) at x=(0.3,0.1), n=512", [&] {
    const Ball ball(Point::zero(2), 0.5);
    const Point x{0.3, 0.1};
    const DiscreteCharge omega = harmonic_measure_ball(ball, x, 512);
    double worst = 0.0;
    for (const Polynomial& h : harmonic_poly_basis(2, 6).members)
      worst = std::max(worst,
                       std::abs(integrate(omega, TestFunction::harmonic_poly(h)).value() - h.eval(x)));
    expect(worst <= 1e-6, "max over degree-6 basis of |I(h) - h(x)| <= 1e-6");

    const FamilyDescriptor desc = make_default_descriptor(2, unit_disk, 11);
    const JensenVerdict jv = verify_jensen(omega, x, build_subharmonic_family(desc, 2), 1e-6);
    expect(jv.pass, "verify_jensen passes at eps = 1e-6");
    const EqualityVerdict av = verify_arens_singer(omega, x, harmonic_poly_basis(2, 6), 1e-6);
    expect(av.pass, "verify_arens_singer passes at eps = 1e-6");
    std::printf("      reproducing error %.3e, jensen worst %.3e, as worst %.3e\n", worst,
                jv.margins.worst_margin.as_double(), av.worst_abs_margin);
    return true;
  });

  // ------------------------------------------------------------------ 3
  criterion(3, "mass relations agree with direct arithmetic on 20 random pairs", [] {
    SplitMix64 rng(900913);
    for (int trial = 0; trial < 20; ++trial) {
      DiscreteCharge theta, mu;
      theta.d = mu.d = 2;
      const int nt = 1 + static_cast<int>(rng.next() % 10);
      const int nm = 1 + static_cast<int>(rng.next() % 10);
      double ts = 0.0, ms = 0.0;
      for (int i = 0; i < nt; ++i) {
        const double w = rng.uniform(-1.0, 1.0);
        theta.atoms.push_back(Atom{Point{rng.uniform(-1, 1), rng.uniform(-1, 1)}, w});
        ts += w;
      }
      for (int i = 0; i < nm; ++i) {
        const double w = rng.uniform(-1.0, 1.0);
        mu.atoms.push_back(Atom{Point{rng.uniform(-1, 1), rng.uniform(-1, 1)}, w});
        ms += w;
      }
      const MassRelationReport rep = mass_relations(theta, mu, true, true);
      expect(rep.item1_pass == (ts <= ms + 1e-12), "item 1 agrees with direct masses");
      expect(rep.item2_pass == (std::abs(ts - ms) <= 1e-12), "item 2 agrees with direct masses");
    }
    return true;
  });

  // ------------------------------------------------------------------ 4
  criterion(4, "convolution chain and the family-integral identity", [&] {
    const DiscreteCharge theta = flatten(uniform_ball_charge(2, Point::zero(2), 0.3, 1.0, 64));
    const DiscreteCharge mu = flatten(uniform_ball_charge(2, Point::zero(2), 0.8, 1.0, 64));
    const DiscreteCharge iota = flatten(mollifier_charge(2, Point::zero(2), 0.05, 16));

    const DiscreteCharge beta = convolution_balayage(mu, iota, unit_disk);
    const FamilyDescriptor desc = make_default_descriptor(2, unit_disk, 5);
    const auto family = build_subharmonic_family(desc, 2);
    const BalayageVerdict v = check(theta, beta, family, 1e-7);
    expect(v.pass, "check(theta, iota * mu, F_sbh) passes at composed tolerance");

    const DiscreteCharge by_integral =
        family_integral_balayage(mu, MeasureFamily::parallel_shift(iota), unit_disk);
    expect(by_integral.atoms.size() == beta.atoms.size(),
           "family integral and convolution have the same atom count");
    double worst = 0.0;
    for (size_t i = 0; i < std::min(by_integral.atoms.size(), beta.atoms.size()); ++i) {
      worst = std::max(worst, dist(by_integral.atoms[i].p, beta.atoms[i].p));
      worst = std::max(worst, std::abs(by_integral.atoms[i].w - beta.atoms[i].w));
    }
    expect(worst <= 1e-12, "atom-for-atom discrepancy <= 1e-12");
    std::printf("      chain worst margin %.3e (tol %.3e), atom discrepancy %.3e\n",
                v.worst_margin.as_double(), v.tolerance, worst);
    return true;
  });

  // ------------------------------------------------------------------ 5
  criterion(5, "mollifier smoothing preserves the verdict and removes atoms", [&] {
    const DiscreteCharge theta = flatten(uniform_ball_charge(2, Point::zero(2), 0.3, 1.0, 32));
    const DiscreteCharge mu = flatten(uniform_ball_charge(2, Point::zero(2), 0.8, 1.0, 32));
    const FamilyDescriptor desc = make_default_descriptor(2, unit_disk, 424242);
    const auto family = build_subharmonic_family(desc, 2);
    const BalayageVerdict before = check(theta, mu, family, 1e-7);
    expect(before.pass, "the atomic measure passes before smoothing");

    const DiscreteCharge smoothed = smooth(mu, 0.05, 8, unit_disk);
    expect(smoothed.atoms.empty(), "smoothed output carries zero point atoms");
    const BalayageVerdict after = check(theta, flatten(smoothed), family, 1e-7);
    expect(after.pass, "smoothed measure still passes at composed tolerance");
    std::printf("      margins before %.3e, after %.3e (tol %.3e)\n",
                before.worst_margin.as_double(), after.worst_margin.as_double(), after.tolerance);
    return true;
  });

  // ------------------------------------------------------------------ 6
  criterion(6, "hull engine on the shell fixture and 50 random scenes", [] {
    const double h = 1.0 / 256.0;
    const BoundingBox box{Point{-2.2, -2.2}, Point{2.2, 2.2}};
    const GridMask o_mask = rasterize(SetExpr::ball(Point::zero(2), 1.0), box, h);
    const GridMask big_mask = rasterize(SetExpr::ball(Point::zero(2), 2.0), box, h);
    const GridMask k_mask = rasterize(SetExpr::annulus(Point::zero(2), 0.45, 0.55), box, h);

    const HullReport rep = inward_filled_hull(o_mask, k_mask);
    expect(rep.algorithms_agree, "definition and complement algorithms agree cell-exactly");
    const double target = M_PI * 0.55 * 0.55;
    expect(std::abs(rep.hull.area() - target) <= 0.03 * target, "hull area = pi 0.55^2 within 3%");

    const HullPropertyReport koc = check_hull_properties(o_mask, big_mask, k_mask, 1);
    expect(koc.monotone, "hull(O) inside hull(B(0,2)) cell-wise");
    expect(koc.idempotent, "hull is idempotent");
    expect(koc.hull_inside_o && koc.hull_compact, "hull stays compactly inside O");

    SplitMix64 rng(60446);
    const double hr = 1.0 / 64.0;
    const BoundingBox rbox{Point{-1.3, -1.3}, Point{1.3, 1.3}};
    int scenes = 0;
    while (scenes < 50) {
      std::vector<SetExpr> parts;
      const int n_add = 1 + static_cast<int>(rng.next() % 3);
      for (int i = 0; i < n_add; ++i)
        parts.push_back(SetExpr::ball(Point{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)},
                                      rng.uniform(0.15, 0.5)));
      SetExpr o_expr = parts.size() == 1 ? parts[0] : SetExpr::unite(parts);
      SetExpr k_expr = SetExpr::ball(Point{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)},
                                     rng.uniform(0.1, 0.45));
      for (int cut = static_cast<int>(rng.next() % 3); cut > 0; --cut)
        k_expr = SetExpr::diff(k_expr,
                               SetExpr::ball(Point{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)},
                                             rng.uniform(0.05, 0.25)));
      const GridMask scene_o = rasterize(o_expr, rbox, hr);
      if (scene_o.set_count() == 0) continue;
      GridMask scene_k = rasterize(k_expr, rbox, hr);
      for (size_t i = 0; i < scene_k.cells.size(); ++i)
        scene_k.cells[i] = static_cast<uint8_t>(scene_k.cells[i] && scene_o.cells[i]);
      const HullReport r = inward_filled_hull(scene_o, scene_k);  // throws on disagreement
      expect(r.algorithms_agree, "random scene agreement");
      ++scenes;
    }
    std::printf("      shell hull area %.6f (target %.6f), %d random scenes agreed\n",
                rep.hull.area(), target, scenes);
    return true;
  });

  // ------------------------------------------------------------------ 7
  criterion(7, "hull equality and max-combo inequality at the 0.8 poles", [] {
    const HullEqualityReport rep = hull_equality_fixture(2, 512);
    expect(rep.equality_margin <= 1e-7, "|h(0) - sphere mean| <= 1e-7 for the 0.8 pole");
    expect(rep.inequality_margin >= -1e-7, "max-combo margin >= -1e-7");
    std::printf("      equality margin %.3e, inequality margin %.6f\n", rep.equality_margin,
                rep.inequality_margin);
    return true;
  });

  // ------------------------------------------------------------------ 8
  criterion(8, "riesz normalization: log potential mass and the constants", [] {
    const TestFunction f = truncate(point_potential(Point::zero(2), 2), 20.0);
    const BoundingBox box{Point{-0.5, -0.5}, Point{0.5, 0.5}};
    const DiscreteCharge riesz = riesz_measure_grid(f, box, 1.0 / 400.0);
    const double mass = ball_mass(riesz, BallQuery{Point::zero(2), 0.2});
    expect(std::abs(mass - 1.0) <= 0.02, "mass in B(0, 0.2) = 1 +- 0.02 at h = 1/400");

    expect(std::abs(constants(2).c - 1.0 / (2.0 * M_PI)) <= 1e-12, "c_2 = 1/(2 pi)");
    expect(std::abs(constants(3).c - 1.0 / (4.0 * M_PI)) <= 1e-12, "c_3 = 1/(4 pi)");
    expect(std::abs(constants(3).b[3] - 4.0 * M_PI / 3.0) <= 1e-12, "b_3 = 4 pi / 3");
    std::printf("      riesz mass %.6f\n", mass);
    return true;
  });

  // ------------------------------------------------------------------ 9
  criterion(9, "checker algebra on 100 seeded random instances", [] {
    SplitMix64 rng(777001);
    const SetExpr region = SetExpr::ball(Point::zero(2), 2.0);
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
      DiscreteCharge theta, mu;
      theta.d = mu.d = 2;
      const int n = 2 + static_cast<int>(rng.next() % 10);
      for (int i = 0; i < n; ++i) {
        const Point p{rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9)};
        const double w = rng.uniform(0.0, 1.0);
        theta.atoms.push_back(Atom{p, w});
        mu.atoms.push_back(Atom{p, w * (1.0 + rng.uniform(0.0, 0.3))});
      }
      FamilyDescriptor desc =
          make_default_descriptor(2, SetExpr::ball(Point::zero(2), 1.2), rng.next(),
                                  2 + static_cast<int>(rng.next() % 3), 5);
      const auto family = build_subharmonic_family(desc, 2);
      const BalayageVerdict full = check(theta, mu, family, 1e-9);

      std::vector<TestFunction> sub;
      for (const auto& h : family)
        if (rng.uniform() < 0.5) sub.push_back(h);
      if (!sub.empty()) {
        const BalayageVerdict part = check(theta, mu, sub, 1e-9);
        if (full.pass && !part.pass) ++violations;
        if (part.worst_margin < full.worst_margin) ++violations;
      }

      const BalayageVerdict restricted =
          check(restrict_to(theta, region), restrict_to(mu, region), family, 1e-9);
      if (restricted.pass != full.pass) ++violations;
      if (restricted.worst_margin.as_double() != full.worst_margin.as_double()) ++violations;
    }
    expect(violations == 0, "zero violations over 100 instances");
    std::printf("      violations: %d\n", violations);
    return true;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d failure(s)\n", g_failures);
  return 1;
}
