#include "bal/quad.hpp"

#include <algorithm>
#include <cmath>

#include "bal/rng.hpp"

namespace bal {

namespace {

// Heuristic error budgets folded into checker tolerances downstream.
double polar_budget(double total, int n_radial, int n_sphere) {
  return std::abs(total) * (1.0 / (static_cast<double>(n_radial) * n_radial) +
                            1.0 / (static_cast<double>(n_sphere) * n_sphere));
}

double grid_budget(double total, int level) {
  return std::abs(total) * 2.0 / std::pow(static_cast<double>(level), 1.8);
}

void renormalize(std::vector<Atom>& atoms, double total) {
  double s = 0.0;
  for (const Atom& a : atoms) s += a.w;
  if (s == 0.0) throw std::runtime_error("discretize: degenerate rule, zero weight sum");
  const double f = total / s;
  for (Atom& a : atoms) a.w *= f;
  // deterministic output ordering across layouts and thread counts
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return lex_less(a.p, b.p); });
}

// Midpoint tensor grid over [-r, r]^d around the center, one atom per cell
// whose center passes `keep`, weighted by `density` at the cell center.
std::vector<Atom> grid_atoms(const Point& center, double radius, int level, int d,
                             const std::function<double(double)>& density) {
  const double h = 2.0 * radius / level;
  std::vector<Atom> atoms;
  std::vector<int> idx(static_cast<size_t>(d), 0);
  for (;;) {
    Point p = center;
    double r2 = 0.0;
    for (int i = 0; i < d; ++i) {
      const double off = -radius + (idx[static_cast<size_t>(i)] + 0.5) * h;
      p[i] += off;
      r2 += off * off;
    }
    const double w = density(std::sqrt(r2) / radius);
    if (w > 0.0) atoms.push_back(Atom{std::move(p), w});
    int axis = 0;
    while (axis < d && ++idx[static_cast<size_t>(axis)] == level) {
      idx[static_cast<size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == d) break;
  }
  return atoms;
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre P_n and derivative by recurrence
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<size_t>(i)] = -x;
    rule.nodes[static_cast<size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(n - 1 - i)] = w;
  }
  return rule;
}

DiscretizedComponent unit_sphere_rule(int d, int level) {
  if (level < 2) throw std::invalid_argument("unit_sphere_rule: level >= 2 required");
  DiscretizedComponent out;
  if (d == 2) {
    const int n = level;
    out.atoms.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double th = 2.0 * M_PI * j / n;
      out.atoms.push_back(Atom{Point{std::cos(th), std::sin(th)}, 1.0 / n});
    }
    out.err_budget = 2.0 / (static_cast<double>(n) * n);
  } else if (d == 3) {
    const int nt = level, nphi = 2 * level;
    const GaussLegendreRule gl = gauss_legendre(nt);
    out.atoms.reserve(static_cast<size_t>(nt) * nphi);
    for (int m = 0; m < nt; ++m) {
      const double t = gl.nodes[static_cast<size_t>(m)];
      const double st = std::sqrt(std::max(0.0, 1.0 - t * t));
      const double wt = gl.weights[static_cast<size_t>(m)] / 2.0;  // cos-polar weight, sums to 1
      for (int j = 0; j < nphi; ++j) {
        const double phi = 2.0 * M_PI * j / nphi;
        out.atoms.push_back(Atom{Point{st * std::cos(phi), st * std::sin(phi), t}, wt / nphi});
      }
    }
    out.err_budget = 2.0 / (static_cast<double>(nt) * nphi);
  } else {
    // Monte Carlo fallback for d > 3, declared 1/sqrt(N) accuracy.
    const int n = level * level;
    SplitMix64 rng(0xB5A1E5CE5A17ULL ^ (static_cast<uint64_t>(d) << 32) ^ static_cast<uint64_t>(level));
    out.atoms.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      Point p = Point::zero(d);
      double r;
      do {
        for (int i = 0; i < d; ++i) p[i] = rng.normal();
        r = norm(p);
      } while (r < 1e-12);
      out.atoms.push_back(Atom{(1.0 / r) * p, 1.0 / n});
    }
    out.err_budget = 1.0 / std::sqrt(static_cast<double>(n));
  }
  return out;
}

DiscretizedComponent discretize_uniform_ball(const ContinuousComponent& c, int d) {
  if (c.kind != ContinuousComponent::Kind::UniformBall)
    throw std::invalid_argument("discretize_uniform_ball: wrong component kind");
  if (c.level < 2) throw std::invalid_argument("discretize_uniform_ball: level >= 2 required");
  DiscretizedComponent out;

  if (c.layout == ContinuousComponent::Layout::Grid) {
    out.atoms = grid_atoms(c.center, c.radius, c.level, d,
                           [](double t) { return t <= 1.0 ? 1.0 : 0.0; });
    out.err_budget = grid_budget(c.total, c.level);
    renormalize(out.atoms, c.total);
    return out;
  }

  // Polar product rule: Gauss-Legendre in radius against the t^(d-1) volume
  // factor, tensored with the unit-sphere rule. Exact for polynomials up to
  // the sphere rule's trigonometric degree.
  const int nr = std::max(2, c.level / 2);
  const int sphere_level = d == 2 ? 2 * c.level : std::max(2, c.level / 2);
  const GaussLegendreRule gl = gauss_legendre(nr);
  const DiscretizedComponent sphere = unit_sphere_rule(d, sphere_level);

  std::vector<double> radii(static_cast<size_t>(nr)), rho(static_cast<size_t>(nr));
  for (int k = 0; k < nr; ++k) {
    const double t = 0.5 * c.radius * (gl.nodes[static_cast<size_t>(k)] + 1.0);
    radii[static_cast<size_t>(k)] = t;
    rho[static_cast<size_t>(k)] = gl.weights[static_cast<size_t>(k)] * 0.5 * c.radius *
                                  static_cast<double>(d) * std::pow(t, d - 1) /
                                  std::pow(c.radius, d);
  }
  out.atoms.reserve(static_cast<size_t>(nr) * sphere.atoms.size());
  for (int k = 0; k < nr; ++k)
    for (const Atom& s : sphere.atoms)
      out.atoms.push_back(Atom{c.center + radii[static_cast<size_t>(k)] * s.p,
                               rho[static_cast<size_t>(k)] * s.w});
  renormalize(out.atoms, c.total);
  const int n_sphere = static_cast<int>(sphere.atoms.size());
  out.err_budget = polar_budget(c.total, nr, d == 2 ? n_sphere : sphere_level);
  return out;
}

DiscretizedComponent discretize_sphere(const ContinuousComponent& c, int d) {
  if (c.kind != ContinuousComponent::Kind::SurfaceSphere)
    throw std::invalid_argument("discretize_sphere: wrong component kind");
  DiscretizedComponent out = unit_sphere_rule(d, c.level);
  for (Atom& a : out.atoms) a.p = c.center + c.radius * a.p;
  renormalize(out.atoms, c.total);
  out.err_budget *= std::abs(c.total);
  return out;
}

double mollifier_bump(double t) {
  if (std::abs(t) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

DiscretizedComponent discretize_mollifier(const ContinuousComponent& c, int d) {
  if (c.kind != ContinuousComponent::Kind::Mollifier)
    throw std::invalid_argument("discretize_mollifier: wrong component kind");
  if (c.level < 8)
    throw std::invalid_argument("discretize_mollifier: level >= 8 required to resolve the bump");
  DiscretizedComponent out;
  // The tensor grid is invariant under coordinate permutations and sign
  // flips and the weights depend on |y| only, so the discrete measure
  // inherits the orthogonal-group invariance of the density. Nodes are laid
  // out on the unit ball and scaled by the radius, which realizes the
  // scaling law alpha_r(S) = alpha_1(S/r) by construction.
  out.atoms = grid_atoms(Point::zero(d), 1.0, c.level, d, mollifier_bump);
  for (Atom& a : out.atoms) a.p = c.center + c.radius * a.p;
  renormalize(out.atoms, c.total);
  out.err_budget = grid_budget(c.total, c.level);
  return out;
}

DiscretizedComponent discretize(const ContinuousComponent& c, int d) {
  switch (c.kind) {
    case ContinuousComponent::Kind::UniformBall:
      return discretize_uniform_ball(c, d);
    case ContinuousComponent::Kind::SurfaceSphere:
      return discretize_sphere(c, d);
    case ContinuousComponent::Kind::Mollifier:
      return discretize_mollifier(c, d);
  }
  throw std::logic_error("discretize: bad kind");
}

DiscreteCharge flatten(const DiscreteCharge& m) {
  DiscreteCharge out;
  out.d = m.d;
  out.atoms = m.atoms;
  out.quad_budget = m.quad_budget;
  for (const ContinuousComponent& c : m.components) {
    if (c.center.dim() != m.d) throw std::invalid_argument("flatten: component dimension mismatch");
    DiscretizedComponent dc = discretize(c, m.d);
    out.atoms.insert(out.atoms.end(), std::make_move_iterator(dc.atoms.begin()),
                     std::make_move_iterator(dc.atoms.end()));
    out.quad_budget += dc.err_budget;
  }
  return coalesced(out);
}

}  // namespace bal
