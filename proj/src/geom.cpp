#include "bal/geom.hpp"

#include <algorithm>
#include <limits>

namespace bal {

namespace {

void require_same_dim(const Point& a, const Point& b, const char* what) {
  if (a.dim() != b.dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b, "Point+");
  Point r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b, "Point-");
  Point r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

Point operator*(double s, const Point& a) {
  Point r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] *= s;
  return r;
}

bool operator==(const Point& a, const Point& b) { return a.x == b.x; }

double norm(const Point& a) {
  double s = 0.0;
  for (double v : a.x) s += v * v;
  return std::sqrt(s);
}

double dist(const Point& a, const Point& b) {
  require_same_dim(a, b, "dist");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double dv = a[i] - b[i];
    s += dv * dv;
  }
  return std::sqrt(s);
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
}

nlohmann::json point_to_json(const Point& p) { return nlohmann::json(p.x); }

Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("point: expected non-empty array");
  std::vector<double> c;
  c.reserve(j.size());
  for (const auto& v : j) c.push_back(v.get<double>());
  return Point(std::move(c));
}

bool BoundingBox::contains(const Point& p) const {
  for (int i = 0; i < dim(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

SetExpr SetExpr::ball(Ball b) {
  SetExpr e;
  e.op_ = Op::Leaf;
  e.leaf_ = std::move(b);
  return e;
}

SetExpr SetExpr::ball(Point center, double radius, bool closed) {
  return ball(Ball(std::move(center), radius, closed));
}

SetExpr SetExpr::unite(std::vector<SetExpr> parts) {
  if (parts.empty()) throw std::invalid_argument("SetExpr::unite: empty union");
  SetExpr e;
  e.op_ = Op::Union;
  e.args_ = std::move(parts);
  return e;
}

SetExpr SetExpr::diff(SetExpr a, SetExpr b) {
  SetExpr e;
  e.op_ = Op::Diff;
  e.args_.push_back(std::move(a));
  e.args_.push_back(std::move(b));
  return e;
}

SetExpr SetExpr::annulus(Point center, double r_inner, double r_outer, bool closed) {
  if (!(0.0 < r_inner && r_inner < r_outer))
    throw std::invalid_argument("SetExpr::annulus: need 0 < r_inner < r_outer");
  // closed shell = closed outer ball minus open inner ball
  return diff(ball(center, r_outer, closed), ball(center, r_inner, !closed));
}

bool SetExpr::contains(const Point& p) const {
  switch (op_) {
    case Op::Leaf:
      return leaf_->contains(p);
    case Op::Union:
      for (const auto& a : args_)
        if (a.contains(p)) return true;
      return false;
    case Op::Diff:
      if (!args_[0].contains(p)) return false;
      for (size_t i = 1; i < args_.size(); ++i)
        if (args_[i].contains(p)) return false;
      return true;
  }
  return false;
}

double SetExpr::signed_boundary_dist(const Point& p) const {
  switch (op_) {
    case Op::Leaf:
      return dist(p, leaf_->center) - leaf_->radius;
    case Op::Union: {
      double sd = std::numeric_limits<double>::infinity();
      for (const auto& a : args_) sd = std::min(sd, a.signed_boundary_dist(p));
      return sd;
    }
    case Op::Diff: {
      double sd = args_[0].signed_boundary_dist(p);
      for (size_t i = 1; i < args_.size(); ++i) sd = std::max(sd, -args_[i].signed_boundary_dist(p));
      return sd;
    }
  }
  return 0.0;
}

BoundingBox SetExpr::bounding_box() const {
  switch (op_) {
    case Op::Leaf: {
      const Ball& b = *leaf_;
      Point lo = b.center, hi = b.center;
      for (int i = 0; i < lo.dim(); ++i) {
        lo[i] -= b.radius;
        hi[i] += b.radius;
      }
      return BoundingBox{lo, hi};
    }
    case Op::Union: {
      BoundingBox box = args_[0].bounding_box();
      for (size_t k = 1; k < args_.size(); ++k) {
        const BoundingBox other = args_[k].bounding_box();
        for (int i = 0; i < box.dim(); ++i) {
          box.lo[i] = std::min(box.lo[i], other.lo[i]);
          box.hi[i] = std::max(box.hi[i], other.hi[i]);
        }
      }
      return box;
    }
    case Op::Diff:
      return args_[0].bounding_box();
  }
  throw std::logic_error("SetExpr::bounding_box: bad op");
}

nlohmann::json SetExpr::to_json() const {
  switch (op_) {
    case Op::Leaf:
      return nlohmann::json{{"ball",
                             {{"center", point_to_json(leaf_->center)},
                              {"radius", leaf_->radius},
                              {"closed", leaf_->closed}}}};
    case Op::Union:
    case Op::Diff: {
      nlohmann::json args = nlohmann::json::array();
      for (const auto& a : args_) args.push_back(a.to_json());
      return nlohmann::json{{"op", op_ == Op::Union ? "union" : "diff"}, {"args", std::move(args)}};
    }
  }
  throw std::logic_error("SetExpr::to_json: bad op");
}

SetExpr SetExpr::from_json(const nlohmann::json& j) {
  if (j.contains("ball")) {
    const auto& b = j.at("ball");
    return ball(point_from_json(b.at("center")), b.at("radius").get<double>(),
                b.value("closed", false));
  }
  const std::string op = j.at("op").get<std::string>();
  const auto& args = j.at("args");
  if (!args.is_array() || args.empty()) throw std::invalid_argument("SetExpr: empty args");
  std::vector<SetExpr> parts;
  parts.reserve(args.size());
  for (const auto& a : args) parts.push_back(from_json(a));
  if (op == "union") return unite(std::move(parts));
  if (op == "diff") {
    if (parts.size() < 2) throw std::invalid_argument("SetExpr: diff needs >= 2 args");
    SetExpr e;
    e.op_ = Op::Diff;
    e.args_ = std::move(parts);
    return e;
  }
  throw std::invalid_argument("SetExpr: unknown op '" + op + "'");
}

double gamma_half_integer(int twice_x) {
  if (twice_x <= 0) throw std::invalid_argument("gamma_half_integer: argument must be positive");
  if (twice_x == 1) return std::sqrt(M_PI);  // Gamma(1/2)
  if (twice_x == 2) return 1.0;              // Gamma(1)
  const double xm1 = 0.5 * static_cast<double>(twice_x - 2);
  return xm1 * gamma_half_integer(twice_x - 2);
}

double sphere_surface_area(int d) {
  if (d < 1) throw std::invalid_argument("sphere_surface_area: d >= 1 required");
  return 2.0 * std::pow(M_PI, 0.5 * d) / gamma_half_integer(d);
}

double unit_ball_volume(int p) {
  if (p < 0) throw std::invalid_argument("unit_ball_volume: p >= 0 required");
  if (p == 0) return 0.0;
  return sphere_surface_area(p) / static_cast<double>(p);
}

DimConstants constants(int d) {
  if (d < 2) throw std::invalid_argument("constants: d >= 2 required");
  DimConstants k;
  k.d = d;
  k.s = sphere_surface_area(d);
  k.b.resize(static_cast<size_t>(d) + 1);
  for (int p = 0; p <= d; ++p) k.b[static_cast<size_t>(p)] = unit_ball_volume(p);
  k.c = 1.0 / (k.s * (1.0 + std::max(0.0, static_cast<double>(d - 3))));
  return k;
}

Point invert(const Point& p, const Point& o) {
  require_same_dim(p, o, "invert");
  const Point v = p - o;
  double r2 = 0.0;
  for (double c : v.x) r2 += c * c;
  if (r2 == 0.0) throw std::domain_error("invert: pole at inversion center");
  return o + (1.0 / r2) * v;
}

double kelvin_value(double u_at_x, const Point& x, const Point& o, int d) {
  if (d < 2) throw std::invalid_argument("kelvin_value: d >= 2 required");
  const double r = dist(x, o);
  if (r == 0.0) throw std::domain_error("kelvin_value: undefined at inversion center");
  return std::pow(r, static_cast<double>(d - 2)) * u_at_x;
}

}  // namespace bal
