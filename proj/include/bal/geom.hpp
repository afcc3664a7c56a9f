#pragma once

// Geometric primitives: points in R^d (d >= 2, runtime dimension), balls,
// a small constructive-set language over balls, sphere inversion, the
// Kelvin value rule, and the dimensional constants s_{d-1}, b_p, c_d.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace bal {

struct Point {
  std::vector<double> x;

  Point() = default;
  explicit Point(std::vector<double> coords) : x(std::move(coords)) {}
  Point(std::initializer_list<double> coords) : x(coords) {}
  static Point zero(int d) { return Point(std::vector<double>(static_cast<size_t>(d), 0.0)); }

  int dim() const { return static_cast<int>(x.size()); }
  double operator[](int i) const { return x[static_cast<size_t>(i)]; }
  double& operator[](int i) { return x[static_cast<size_t>(i)]; }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);
bool operator==(const Point& a, const Point& b);

double norm(const Point& a);
double dist(const Point& a, const Point& b);

// Strict lexicographic coordinate order; the deterministic atom order used
// everywhere a charge is sorted or coalesced.
bool lex_less(const Point& a, const Point& b);

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

struct Ball {
  Point center;
  double radius = 1.0;
  bool closed = false;

  Ball() = default;
  Ball(Point c, double r, bool is_closed = false) : center(std::move(c)), radius(r), closed(is_closed) {
    if (!(radius > 0.0)) throw std::invalid_argument("Ball: radius must be positive");
  }

  bool contains(const Point& p) const {
    const double d = dist(p, center);
    return closed ? d <= radius : d < radius;
  }
};

// Axis-aligned box, used by rasterization and grid sweeps.
struct BoundingBox {
  Point lo, hi;
  int dim() const { return lo.dim(); }
  bool contains(const Point& p) const;
};

// Expression tree over ball leaves with union and difference nodes.
// diff(a, b1, b2, ...) means a \ (b1 ∪ b2 ∪ ...). An annulus is sugar for
// diff(outer, inner). This is the only set representation in the toolkit.
class SetExpr {
 public:
  enum class Op { Leaf, Union, Diff };

  static SetExpr ball(Ball b);
  static SetExpr ball(Point center, double radius, bool closed = false);
  static SetExpr unite(std::vector<SetExpr> parts);
  static SetExpr diff(SetExpr a, SetExpr b);
  // {r_inner <= |x - c| <= r_outer} when closed, open shell otherwise.
  static SetExpr annulus(Point center, double r_inner, double r_outer, bool closed = true);

  bool contains(const Point& p) const;

  // Signed distance to the boundary built from leaf distances: negative
  // inside, positive outside. Exact for leaves; conservative (never larger
  // in magnitude than the true inside-distance) for unions and differences
  // of overlapping leaves.
  double signed_boundary_dist(const Point& p) const;

  // Box of leaf ball boxes. Differences use the box of the minuend.
  BoundingBox bounding_box() const;

  Op op() const { return op_; }
  const std::optional<Ball>& leaf() const { return leaf_; }
  const std::vector<SetExpr>& args() const { return args_; }

  nlohmann::json to_json() const;
  static SetExpr from_json(const nlohmann::json& j);

 private:
  SetExpr() = default;
  Op op_ = Op::Leaf;
  std::optional<Ball> leaf_;
  std::vector<SetExpr> args_;
};

// Dimensional constants: s = s_{d-1} (unit-sphere surface area),
// b[p] = unit-ball volume in R^p for p <= d, c = Riesz normalization.
struct DimConstants {
  int d = 2;
  double s = 0.0;
  std::vector<double> b;
  double c = 0.0;
};

// Gamma at half-integer arguments via the recursion from Gamma(1/2) and
// Gamma(1); exact for every argument that occurs here.
double gamma_half_integer(int twice_x);

double sphere_surface_area(int d);  // s_{d-1}
double unit_ball_volume(int p);     // b_p, b_0 = 0

DimConstants constants(int d);

// Inversion in the unit sphere centered at o: o + (p-o)/|p-o|^2.
Point invert(const Point& p, const Point& o);

// Kelvin value rule: the transformed function at invert(x, o) takes the
// value |x-o|^(d-2) * u(x).
double kelvin_value(double u_at_x, const Point& x, const Point& o, int d);

}  // namespace bal
