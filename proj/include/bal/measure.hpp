#pragma once

// Finite representation of charges and positive measures: point atoms plus
// tagged continuous components awaiting discretization. Integration follows
// extended-real conventions with 0 * (+-inf) = 0.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "bal/geom.hpp"

namespace bal {

// Raised when an integral evaluates to (+inf) + (-inf).
struct UndefinedIntegral : std::runtime_error {
  UndefinedIntegral() : std::runtime_error("undefined integral: (+inf) + (-inf)") {}
};

// Value in R ∪ {-inf, +inf}. Scaling follows x*(+-inf) = +-inf for x > 0
// and 0*(+-inf) = 0; addition of opposite infinities throws.
class ExtendedReal {
 public:
  ExtendedReal() : v_(0.0) {}
  ExtendedReal(double v) : v_(v) {}  // NOLINT: intentionally implicit

  static ExtendedReal neg_inf() { return ExtendedReal(-std::numeric_limits<double>::infinity()); }
  static ExtendedReal pos_inf() { return ExtendedReal(std::numeric_limits<double>::infinity()); }

  bool finite() const { return std::isfinite(v_); }
  bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }
  bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }

  // Finite value; throws on infinities.
  double value() const {
    if (!finite()) throw std::domain_error("ExtendedReal::value on infinity");
    return v_;
  }
  // Raw double, +-inf for the infinities.
  double as_double() const { return v_; }

  ExtendedReal scaled(double w) const {
    if (finite()) return ExtendedReal(w * v_);
    if (w == 0.0) return ExtendedReal(0.0);
    return ExtendedReal(w > 0 ? v_ : -v_);
  }

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.finite() && b.finite()) return ExtendedReal(a.v_ + b.v_);
    if (a.is_pos_inf() && b.is_neg_inf()) throw UndefinedIntegral();
    if (a.is_neg_inf() && b.is_pos_inf()) throw UndefinedIntegral();
    return a.finite() ? b : a;
  }
  friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) {
    return a + b.scaled(-1.0);
  }
  ExtendedReal operator-() const { return scaled(-1.0); }

  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ >= b.v_; }
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ == b.v_; }

  friend ExtendedReal max(const ExtendedReal& a, const ExtendedReal& b) { return a < b ? b : a; }

 private:
  double v_;
};

struct Atom {
  Point p;
  double w = 0.0;
};

// A continuous measure tagged for later discretization. `level` is the
// discretization parameter; `layout` selects the node layout for uniform
// balls (polar product rule by default, midpoint grid as an alternative).
struct ContinuousComponent {
  enum class Kind { UniformBall, SurfaceSphere, Mollifier };
  enum class Layout { Polar, Grid };

  Kind kind = Kind::UniformBall;
  Point center;
  double radius = 1.0;
  double total = 1.0;
  int level = 64;
  Layout layout = Layout::Polar;

  // Closed ball certainly containing the component's support.
  Ball support_ball() const { return Ball(center, radius, true); }
};

// Finite signed measure: atoms plus components. `quad_budget` accumulates
// the heuristic discretization-error estimates of everything that has been
// flattened into the atom list; the balayage checker folds it into its
// tolerance.
struct DiscreteCharge {
  int d = 2;
  std::vector<Atom> atoms;
  std::vector<ContinuousComponent> components;
  double quad_budget = 0.0;

  bool flattened() const { return components.empty(); }

  static DiscreteCharge dirac(Point p, double w = 1.0) {
    DiscreteCharge m;
    m.d = p.dim();
    m.atoms.push_back(Atom{std::move(p), w});
    return m;
  }
};

// Closed-ball query: atoms on the boundary are counted.
struct BallQuery {
  Point center;
  double radius = 0.0;
};

double total_mass(const DiscreteCharge& m);

// Atoms within 1e-12 of each other merged into one (weights summed, first
// point kept), output sorted lexicographically. Exact-zero weights from the
// merge are kept so cancellation stays visible to jordan().
DiscreteCharge coalesced(const DiscreteCharge& m);

struct JordanDecomposition {
  DiscreteCharge pos;
  DiscreteCharge neg;
  double total_variation = 0.0;
};

JordanDecomposition jordan(const DiscreteCharge& m);

DiscreteCharge restrict_to(const DiscreteCharge& m, const SetExpr& region);

double ball_mass(const DiscreteCharge& m, const BallQuery& q);

DiscreteCharge convolve(const DiscreteCharge& a, const DiscreteCharge& b);

DiscreteCharge mix(const std::vector<std::pair<double, DiscreteCharge>>& parts);

DiscreteCharge pushforward(const DiscreteCharge& m, const std::function<Point(const Point&)>& map);

void require_flattened(const DiscreteCharge& m, const char* op);

// Sum of w_i * f(x_i) under extended-real rules. Throws UndefinedIntegral
// when positive and negative infinities collide.
template <class F>
ExtendedReal integrate(const DiscreteCharge& m, F&& f) {
  require_flattened(m, "integrate");
  double finite_sum = 0.0;
  bool has_neg = false, has_pos = false;
  for (const Atom& a : m.atoms) {
    const ExtendedReal v = f(a.p);
    if (v.finite()) {
      finite_sum += a.w * v.value();
    } else if (a.w != 0.0) {
      const bool neg = v.is_neg_inf() == (a.w > 0.0);
      (neg ? has_neg : has_pos) = true;
    }
  }
  if (has_neg && has_pos) throw UndefinedIntegral();
  if (has_neg) return ExtendedReal::neg_inf();
  if (has_pos) return ExtendedReal::pos_inf();
  return ExtendedReal(finite_sum);
}

nlohmann::json charge_to_json(const DiscreteCharge& m);
DiscreteCharge charge_from_json(const nlohmann::json& j);

}  // namespace bal
