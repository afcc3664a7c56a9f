#pragma once

// Discretizers turning continuous components (uniform volume on balls,
// surface measure on spheres, mollifier densities) into atom lists with a
// heuristic error budget, plus flatten().

#include <vector>

#include "bal/measure.hpp"

namespace bal {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Nodes and weights by Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre(int n);

struct DiscretizedComponent {
  std::vector<Atom> atoms;
  double err_budget = 0.0;
};

// Unit-sphere rule in R^d with weights summing to 1.
//   d = 2: `level` equally spaced angles, equal weights.
//   d = 3: Gauss-Legendre in the polar cosine (level nodes) x uniform
//          azimuth (2*level nodes).
//   d > 3: Monte Carlo fallback (level^2 nodes, declared 1/sqrt(N) accuracy).
DiscretizedComponent unit_sphere_rule(int d, int level);

DiscretizedComponent discretize_uniform_ball(const ContinuousComponent& c, int d);
DiscretizedComponent discretize_sphere(const ContinuousComponent& c, int d);
DiscretizedComponent discretize_mollifier(const ContinuousComponent& c, int d);

DiscretizedComponent discretize(const ContinuousComponent& c, int d);

// The standard bump profile exp(-1/(1-t^2)) for |t| < 1, 0 otherwise.
double mollifier_bump(double t);

// Discretizes every component, appends the atoms, accumulates the error
// budgets, coalesces. Total mass is preserved to 1e-12 relative error.
DiscreteCharge flatten(const DiscreteCharge& m);

}  // namespace bal
