#include "bal/construct.hpp"

#include <algorithm>
#include <cmath>

#include "bal/balayage.hpp"
#include "bal/quad.hpp"
#include "bal/testfn.hpp"

namespace bal {

namespace {

double support_radius_about(const DiscreteCharge& m, const Point& center) {
  double r = 0.0;
  for (const Atom& a : m.atoms)
    if (a.w != 0.0) r = std::max(r, dist(a.p, center));
  return r;
}

double support_diameter(const DiscreteCharge& m) {
  double d2 = 0.0;
  for (size_t i = 0; i < m.atoms.size(); ++i) {
    if (m.atoms[i].w == 0.0) continue;
    for (size_t j = i + 1; j < m.atoms.size(); ++j) {
      if (m.atoms[j].w == 0.0) continue;
      d2 = std::max(d2, dist(m.atoms[i].p, m.atoms[j].p));
    }
  }
  return d2;
}

// Distance from the (atom) support of mu to the domain boundary; every atom
// must lie inside the domain.
double support_boundary_distance(const DiscreteCharge& mu, const SetExpr& domain, const char* op) {
  double dist_to_boundary = std::numeric_limits<double>::infinity();
  for (const Atom& a : mu.atoms) {
    if (a.w == 0.0) continue;
    const double sd = domain.signed_boundary_dist(a.p);
    if (sd >= 0.0)
      throw std::invalid_argument(std::string(op) + ": support atom outside the domain");
    dist_to_boundary = std::min(dist_to_boundary, -sd);
  }
  return dist_to_boundary;
}

// Probability + Jensen screening of a candidate iota at 0: exact mass and
// positivity, harmonic reproduction at degree 2, and a ring of truncated
// log/Newton potentials around the support.
void require_jensen_at_origin(const DiscreteCharge& iota, const char* op) {
  const double mass = total_mass(iota);
  if (std::abs(mass - 1.0) > 1e-9 + iota.quad_budget)
    throw std::invalid_argument(std::string(op) + ": iota0 is not a probability measure");
  for (const Atom& a : iota.atoms)
    if (a.w < -1e-15)
      throw std::invalid_argument(std::string(op) + ": iota0 has negative atoms");

  const Point origin = Point::zero(iota.d);
  const double r = std::max(support_radius_about(iota, origin), 1e-9);
  std::vector<TestFunction> screen;
  const HarmonicBasis basis = harmonic_poly_basis(iota.d, 2);
  for (const Polynomial& p : basis.members) {
    screen.push_back(TestFunction::harmonic_poly(p));
    screen.push_back(negation(TestFunction::harmonic_poly(p)));
  }
  for (int k = 0; k < 8; ++k) {
    Point pole = Point::zero(iota.d);
    pole[0] = 1.6 * r * std::cos(2.0 * M_PI * k / 8.0 + 0.37);
    pole[1] = 1.6 * r * std::sin(2.0 * M_PI * k / 8.0 + 0.37);
    screen.push_back(truncate(point_potential(pole, iota.d), 40.0));
  }
  const BalayageVerdict v = check(DiscreteCharge::dirac(origin), iota, screen, 1e-6);
  if (!v.pass)
    throw std::invalid_argument(std::string(op) + ": iota0 failed the Jensen screening at 0");
}

}  // namespace

DiscreteCharge harmonic_measure_ball(const Ball& ball, const Point& x, int level) {
  const int d = x.dim();
  if (ball.center.dim() != d) throw std::invalid_argument("harmonic_measure_ball: dimension mismatch");
  const double a = dist(x, ball.center);
  if (a >= ball.radius)
    throw std::invalid_argument("harmonic_measure_ball: x must lie strictly inside the ball");

  DiscretizedComponent sphere = unit_sphere_rule(d, level);
  DiscreteCharge out;
  out.d = d;
  out.atoms.reserve(sphere.atoms.size());
  const double r2 = ball.radius * ball.radius - a * a;
  for (const Atom& s : sphere.atoms) {
    const Point zeta = ball.center + ball.radius * s.p;
    const double k = r2 / (ball.radius * std::pow(dist(x, zeta), d));
    out.atoms.push_back(Atom{zeta, s.w * k});
  }
  double sum = 0.0;
  for (const Atom& at : out.atoms) sum += at.w;
  for (Atom& at : out.atoms) at.w /= sum;
  // kernel-weighted sphere rule; reuse the sphere budget scaled by the
  // kernel spread
  const double kernel_spread = (ball.radius + a) / (ball.radius - a);
  out.quad_budget = sphere.err_budget * kernel_spread;
  return coalesced(out);
}

DiscreteCharge jensen_mixture(double a, const Point& x, double b, const Ball& ball, int level) {
  if (a < 0.0 || b < 0.0 || std::abs(a + b - 1.0) > 1e-12)
    throw std::invalid_argument("jensen_mixture: need a, b >= 0 with a + b = 1");
  if (dist(x, ball.center) >= ball.radius)
    throw std::invalid_argument("jensen_mixture: x must lie strictly inside the ball");
  std::vector<std::pair<double, DiscreteCharge>> parts;
  if (a > 0.0) parts.emplace_back(a, DiscreteCharge::dirac(x));
  if (b > 0.0) parts.emplace_back(b, harmonic_measure_ball(ball, x, level));
  return mix(parts);
}

MeasureFamily MeasureFamily::parallel_shift(DiscreteCharge iota0) {
  require_flattened(iota0, "MeasureFamily::parallel_shift");
  MeasureFamily f;
  f.base_ = std::move(iota0);
  return f;
}

MeasureFamily MeasureFamily::table(std::vector<std::pair<Point, DiscreteCharge>> entries) {
  MeasureFamily f;
  for (const auto& e : entries) require_flattened(e.second, "MeasureFamily::table");
  f.table_ = std::move(entries);
  return f;
}

DiscreteCharge MeasureFamily::at(const Point& x) const {
  if (base_) {
    return pushforward(*base_, [&x](const Point& y) { return y + x; });
  }
  for (const auto& [p, m] : table_)
    if (dist(p, x) <= 1e-12) return m;
  throw std::invalid_argument("MeasureFamily: no entry for the requested point");
}

const DiscreteCharge& MeasureFamily::base() const {
  if (!base_) throw std::logic_error("MeasureFamily: not a shift family");
  return *base_;
}

double MeasureFamily::max_support_radius() const {
  if (base_) return support_radius_about(*base_, Point::zero(base_->d));
  double r = 0.0;
  for (const auto& [x, m] : table_) r = std::max(r, support_radius_about(m, x));
  return r;
}

DiscreteCharge convolution_balayage(const DiscreteCharge& mu, const DiscreteCharge& iota0,
                                    const SetExpr& domain) {
  require_flattened(mu, "convolution_balayage");
  require_flattened(iota0, "convolution_balayage");
  require_jensen_at_origin(iota0, "convolution_balayage");

  const double diam = support_diameter(iota0);
  const double half_dist = 0.5 * support_boundary_distance(mu, domain, "convolution_balayage");
  if (diam >= half_dist)
    throw std::invalid_argument(
        "convolution_balayage: measured diam supp iota0 = " + std::to_string(diam) +
        " is not below half the support-boundary distance " + std::to_string(half_dist));
  return convolve(iota0, mu);
}

DiscreteCharge family_integral_balayage(const DiscreteCharge& mu, const MeasureFamily& fam,
                                        const std::optional<SetExpr>& domain) {
  require_flattened(mu, "family_integral_balayage");
  for (const Atom& a : mu.atoms)
    if (a.w < -1e-15)
      throw std::invalid_argument("family_integral_balayage: mu must be positive");

  double half_dist = std::numeric_limits<double>::infinity();
  if (domain) half_dist = 0.5 * support_boundary_distance(mu, *domain, "family_integral_balayage");

  std::vector<std::pair<double, DiscreteCharge>> parts;
  parts.reserve(mu.atoms.size());
  for (const Atom& a : mu.atoms) {
    DiscreteCharge iota = fam.at(a.p);
    if (domain) {
      const double sr = support_radius_about(iota, a.p);
      if (sr >= half_dist)
        throw std::invalid_argument(
            "family_integral_balayage: iota_x support radius violates the half-distance condition");
    }
    parts.emplace_back(a.w, std::move(iota));
  }
  return mix(parts);
}

DiscreteCharge smooth(const DiscreteCharge& mu, const std::function<double(const Point&)>& radius,
                      int level, const SetExpr& domain) {
  require_flattened(mu, "smooth");
  DiscreteCharge out;
  out.d = mu.d;
  out.quad_budget = mu.quad_budget;
  for (const Atom& a : mu.atoms) {
    if (a.w == 0.0) continue;
    const double sd = domain.signed_boundary_dist(a.p);
    if (sd >= 0.0) throw std::invalid_argument("smooth: atom outside the domain");
    const double r_user = radius(a.p);
    if (!(r_user > 0.0)) throw std::invalid_argument("smooth: radius must be positive at every atom");
    const double r_eff = std::min(r_user, 0.4 * (-sd));
    ContinuousComponent c;
    c.kind = ContinuousComponent::Kind::Mollifier;
    c.center = a.p;
    c.radius = r_eff;
    c.total = a.w;
    c.level = level;
    out.components.push_back(std::move(c));
  }
  return out;
}

DiscreteCharge smooth(const DiscreteCharge& mu, double radius, int level, const SetExpr& domain) {
  return smooth(mu, [radius](const Point&) { return radius; }, level, domain);
}

}  // namespace bal
