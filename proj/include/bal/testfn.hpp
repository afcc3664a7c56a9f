#pragma once

// Test classes for the balayage checker: harmonic polynomial bases, point
// potentials and their truncations, smooth subharmonic samples, max
// combinations, plus the finite-difference Laplacian and grid Riesz-measure
// estimation.

#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "bal/measure.hpp"

namespace bal {

// Multivariate polynomial as a sorted term list (exponent vector, coefficient).
class Polynomial {
 public:
  using Term = std::pair<std::vector<int>, double>;

  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial monomial(std::vector<int> exponents, double coeff);

  void add_term(std::vector<int> exponents, double coeff);

  double eval(const Point& x) const;
  Polynomial laplacian() const;

  int dim() const { return dim_; }
  int degree() const;
  double max_abs_coeff() const;
  const std::vector<Term>& terms() const { return terms_; }

  Polynomial scaled(double f) const;

  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  int dim_;
  std::vector<Term> terms_;  // sorted by exponent vector, no duplicates
};

struct HarmonicBasis {
  int d = 2;
  int max_degree = 0;
  std::vector<Polynomial> members;
};

// Basis of the null space of p -> laplacian(p) on polynomials of degree
// <= N, computed from the Laplacian constraint matrix. Members are
// normalized to max |coefficient| = 1 and verified harmonic by symbolic
// second derivatives. N > 12 is rejected (conditioning guard).
HarmonicBasis harmonic_poly_basis(int d, int N);

// Expected null-space dimension (binomial count identity), used as a
// cross-check in tests.
long harmonic_basis_dimension(int d, int N);

class TestFunction {
 public:
  enum class Kind {
    Constant,
    HarmonicPoly,
    SmoothSbh,
    PointPotential,
    TruncatedPotential,
    Negation,
    MaxCombo
  };
  enum class Tag { Harmonic, Subharmonic };

  static TestFunction constant(double value);
  static TestFunction harmonic_poly(Polynomial p);
  // Smooth subharmonic sample; the caller owns the subharmonicity claim
  // (e.g. |x|^2, or h^2 for harmonic h).
  static TestFunction smooth_sbh(Polynomial p);
  static TestFunction max_combo(TestFunction a, TestFunction b);

  ExtendedReal operator()(const Point& x) const;

  Kind kind() const { return kind_; }
  Tag tag() const { return tag_; }
  const std::vector<Point>& poles() const { return poles_; }

  nlohmann::json descriptor() const;

  friend TestFunction point_potential(Point pole, int d);
  friend TestFunction truncate(const TestFunction& f, double m);
  friend TestFunction negation(const TestFunction& h);

 private:
  TestFunction() = default;

  Kind kind_ = Kind::Constant;
  Tag tag_ = Tag::Harmonic;
  double param_ = 0.0;  // Constant value, or truncation level M
  int kernel_dim_ = 0;  // PointPotential kernel dimension
  Point pole_;
  std::optional<Polynomial> poly_;
  std::vector<Point> poles_;
  std::vector<std::shared_ptr<const TestFunction>> ops_;
};

// log|x - pole| for d = 2, -|x - pole|^(2-d) for d >= 3; subharmonic on
// R^d with value -inf at the pole.
TestFunction point_potential(Point pole, int d);

// x -> max(f(x), -m); subharmonic when f is, finite everywhere.
TestFunction truncate(const TestFunction& f, double m);

// -h for harmonic-tagged h only.
TestFunction negation(const TestFunction& h);

// (2d+1)-point central stencil estimate of the Laplacian; throws when a
// stencil sample is not finite.
double laplacian_fd(const TestFunction& f, const Point& x, double h);

// Grid Riesz-measure estimate: atoms at the grid nodes of `box` with
// weights c_d * (stencil Laplacian) * h^d.
DiscreteCharge riesz_measure_grid(const TestFunction& f, const BoundingBox& box, double h);

// Descriptor of the default seeded checker family.
struct FamilyDescriptor {
  int harmonic_degree = 6;
  std::vector<Point> potential_poles;
  std::vector<double> truncations = {5.0, 10.0, 20.0, 40.0};
  uint64_t seed = 1;

  nlohmann::json to_json() const;
  static FamilyDescriptor from_json(const nlohmann::json& j);
};

// Poles drawn from a scrambled low-discrepancy set over the domain.
FamilyDescriptor make_default_descriptor(int d, const SetExpr& domain, uint64_t seed,
                                         int degree = 6, int n_poles = 20);

// Harmonic basis members, truncated point potentials (pole-major,
// truncation-minor), then seeded max-combos of random harmonic pairs.
std::vector<TestFunction> build_subharmonic_family(const FamilyDescriptor& desc, int d);

// Basis members and their negations.
std::vector<TestFunction> build_harmonic_family(int d, int degree);

}  // namespace bal
