#pragma once

// Builders for swept measures: Poisson harmonic measure on balls, Jensen
// mixtures, the measure-family integral and convolution constructions, and
// mollifier smoothing.

#include <functional>
#include <optional>
#include <vector>

#include "bal/measure.hpp"

namespace bal {

// Sphere discretization of the harmonic measure of `ball` at `x`, weights
// proportional to the Poisson kernel (R^2 - |x-c|^2) / (R |x - zeta|^d),
// normalized to total mass 1. `x` must be strictly inside.
DiscreteCharge harmonic_measure_ball(const Ball& ball, const Point& x, int level);

// a * delta_x + b * harmonic measure of the ball at x, with a + b = 1.
DiscreteCharge jensen_mixture(double a, const Point& x, double b, const Ball& ball, int level);

// Assignment x -> iota_x: either parallel shifts of one base measure
// centered at the origin, or an explicit finite table.
class MeasureFamily {
 public:
  static MeasureFamily parallel_shift(DiscreteCharge iota0);
  static MeasureFamily table(std::vector<std::pair<Point, DiscreteCharge>> entries);

  DiscreteCharge at(const Point& x) const;  // throws when no entry matches
  // Largest distance from x to the support of iota_x, over possible x.
  double max_support_radius() const;
  bool is_shift_family() const { return base_.has_value(); }
  const DiscreteCharge& base() const;

 private:
  MeasureFamily() = default;
  std::optional<DiscreteCharge> base_;
  std::vector<std::pair<Point, DiscreteCharge>> table_;
};

// beta = iota0 * mu (classical convolution). Requires iota0 to be a
// verified Jensen probability measure at 0 and the measured support
// diameter of iota0 to stay below half the distance from supp mu to the
// domain boundary.
DiscreteCharge convolution_balayage(const DiscreteCharge& mu, const DiscreteCharge& iota0,
                                    const SetExpr& domain);

// beta = sum_i w_i * iota_{x_i}, the finite-mixture realization of the
// measure-valued integral. When a domain is given, each iota_x support is
// checked against the half-distance condition.
DiscreteCharge family_integral_balayage(const DiscreteCharge& mu, const MeasureFamily& fam,
                                        const std::optional<SetExpr>& domain = std::nullopt);

// Replaces every atom by a mollifier component centered there with radius
// min(radius(x), 0.4 * dist(x, boundary)), scaled by the atom weight. The
// result carries no point atoms.
DiscreteCharge smooth(const DiscreteCharge& mu, const std::function<double(const Point&)>& radius,
                      int level, const SetExpr& domain);

DiscreteCharge smooth(const DiscreteCharge& mu, double radius, int level, const SetExpr& domain);

}  // namespace bal
