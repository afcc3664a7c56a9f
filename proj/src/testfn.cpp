#include "bal/testfn.hpp"

#include <algorithm>
#include <cmath>

#include "bal/rng.hpp"

namespace bal {

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Monomial exponent vectors with |alpha| <= max_deg, ordered by total
// degree then lexicographically.
std::vector<std::vector<int>> monomials_up_to(int d, int max_deg) {
  std::vector<std::vector<int>> out;
  if (max_deg < 0) return out;
  std::vector<int> cur(static_cast<size_t>(d), 0);
  for (int deg = 0; deg <= max_deg; ++deg) {
    // enumerate compositions of `deg` into d parts, lexicographically
    std::function<void(int, int)> rec = [&](int axis, int remaining) {
      if (axis == d - 1) {
        cur[static_cast<size_t>(axis)] = remaining;
        out.push_back(cur);
        return;
      }
      for (int e = remaining; e >= 0; --e) {
        cur[static_cast<size_t>(axis)] = e;
        rec(axis + 1, remaining - e);
      }
    };
    rec(0, deg);
  }
  return out;
}

}  // namespace

Polynomial Polynomial::monomial(std::vector<int> exponents, double coeff) {
  Polynomial p(static_cast<int>(exponents.size()));
  p.add_term(std::move(exponents), coeff);
  return p;
}

void Polynomial::add_term(std::vector<int> exponents, double coeff) {
  if (static_cast<int>(exponents.size()) != dim_)
    throw std::invalid_argument("Polynomial: exponent dimension mismatch");
  if (coeff == 0.0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                             [](const Term& t, const std::vector<int>& e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponents) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{std::move(exponents), coeff});
  }
}

double Polynomial::eval(const Point& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("Polynomial::eval: dimension mismatch");
  double s = 0.0;
  for (const Term& t : terms_) {
    double m = t.second;
    for (int i = 0; i < dim_; ++i) {
      const double xi = x[i];
      for (int e = 0; e < t.first[static_cast<size_t>(i)]; ++e) m *= xi;
    }
    s += m;
  }
  return s;
}

Polynomial Polynomial::laplacian() const {
  Polynomial out(dim_);
  for (const Term& t : terms_)
    for (int i = 0; i < dim_; ++i) {
      const int e = t.first[static_cast<size_t>(i)];
      if (e >= 2) {
        std::vector<int> ex = t.first;
        ex[static_cast<size_t>(i)] = e - 2;
        out.add_term(std::move(ex), t.second * e * (e - 1));
      }
    }
  return out;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const Term& t : terms_) {
    int s = 0;
    for (int e : t.first) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const Term& t : terms_) m = std::max(m, std::abs(t.second));
  return m;
}

Polynomial Polynomial::scaled(double f) const {
  Polynomial out(dim_);
  for (const Term& t : terms_) out.add_term(t.first, f * t.second);
  return out;
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : terms_) terms.push_back({{"e", t.first}, {"c", t.second}});
  return nlohmann::json{{"dim", dim_}, {"terms", std::move(terms)}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  Polynomial p(j.at("dim").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("e").get<std::vector<int>>(), t.at("c").get<double>());
  return p;
}

long harmonic_basis_dimension(int d, int N) {
  // dim ker = #monomials(<=N) - #monomials(<=N-2); the Laplacian is onto.
  return binomial(N + d, d) - (N >= 2 ? binomial(N - 2 + d, d) : 0);
}

HarmonicBasis harmonic_poly_basis(int d, int N) {
  if (d < 2) throw std::invalid_argument("harmonic_poly_basis: d >= 2 required");
  if (N < 0) throw std::invalid_argument("harmonic_poly_basis: N >= 0 required");
  if (N > 12) throw std::invalid_argument("harmonic_poly_basis: N > 12 rejected (conditioning guard)");

  const std::vector<std::vector<int>> cols = monomials_up_to(d, N);
  const std::vector<std::vector<int>> rows = monomials_up_to(d, N - 2);
  const size_t nc = cols.size(), nr = rows.size();

  std::vector<std::vector<double>> a(nr, std::vector<double>(nc, 0.0));
  // comparator matching the (degree, reverse-lex) order of monomials_up_to
  auto row_of = [&rows](const std::vector<int>& e) {
    const auto it = std::lower_bound(rows.begin(), rows.end(), e,
                                     [](const std::vector<int>& r, const std::vector<int>& v) {
                                       int dr = 0, dv = 0;
                                       for (int q : r) dr += q;
                                       for (int q : v) dv += q;
                                       if (dr != dv) return dr < dv;
                                       return v < r;
                                     });
    return static_cast<size_t>(it - rows.begin());
  };
  for (size_t c = 0; c < nc; ++c) {
    const Polynomial lap = Polynomial::monomial(cols[c], 1.0).laplacian();
    for (const auto& t : lap.terms()) a[row_of(t.first)][c] += t.second;
  }

  // Reduced row echelon form with partial pivoting.
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t best = r;
    for (size_t i = r + 1; i < nr; ++i)
      if (std::abs(a[i][c]) > std::abs(a[best][c])) best = i;
    if (std::abs(a[best][c]) < 1e-9) continue;
    std::swap(a[r], a[best]);
    const double piv = a[r][c];
    for (size_t j = 0; j < nc; ++j) a[r][j] /= piv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      const double f = a[i][c];
      if (f == 0.0) continue;
      for (size_t j = 0; j < nc; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  HarmonicBasis basis;
  basis.d = d;
  basis.max_degree = N;
  std::vector<bool> is_pivot(nc, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    Polynomial p(d);
    p.add_term(cols[c], 1.0);
    for (size_t i = 0; i < pivot_col.size(); ++i)
      if (a[i][c] != 0.0) p.add_term(cols[pivot_col[i]], -a[i][c]);
    // normalize so that both the values and the fourth-derivative sums stay
    // bounded on the unit ball; the latter keeps centered-stencil residuals
    // below h^2 for every degree
    double l1 = 0.0, l1_fourth = 0.0;
    for (const auto& t : p.terms()) {
      l1 += std::abs(t.second);
      for (int e : t.first)
        if (e >= 4)
          l1_fourth += std::abs(t.second) * e * (e - 1) * (e - 2) * (e - 3);
    }
    p = p.scaled(1.0 / std::max(l1, l1_fourth / 6.0));
    const Polynomial lap = p.laplacian();
    if (lap.max_abs_coeff() > 1e-9)
      throw std::logic_error("harmonic_poly_basis: member failed the symbolic Laplacian check");
    basis.members.push_back(std::move(p));
  }
  if (static_cast<long>(basis.members.size()) != harmonic_basis_dimension(d, N))
    throw std::logic_error("harmonic_poly_basis: unexpected null-space dimension");
  return basis;
}

TestFunction TestFunction::constant(double value) {
  TestFunction f;
  f.kind_ = Kind::Constant;
  f.tag_ = Tag::Harmonic;
  f.param_ = value;
  return f;
}

TestFunction TestFunction::harmonic_poly(Polynomial p) {
  if (p.laplacian().max_abs_coeff() > 1e-9 * std::max(1.0, p.max_abs_coeff()))
    throw std::invalid_argument("TestFunction::harmonic_poly: polynomial is not harmonic");
  TestFunction f;
  f.kind_ = Kind::HarmonicPoly;
  f.tag_ = Tag::Harmonic;
  f.poly_ = std::move(p);
  return f;
}

TestFunction TestFunction::smooth_sbh(Polynomial p) {
  TestFunction f;
  f.kind_ = Kind::SmoothSbh;
  f.tag_ = Tag::Subharmonic;
  f.poly_ = std::move(p);
  return f;
}

TestFunction TestFunction::max_combo(TestFunction a, TestFunction b) {
  TestFunction f;
  f.kind_ = Kind::MaxCombo;
  f.tag_ = Tag::Subharmonic;
  // -inf only where both operands are
  for (const Point& p : a.poles_)
    for (const Point& q : b.poles_)
      if (p.dim() == q.dim() && dist(p, q) == 0.0) f.poles_.push_back(p);
  f.ops_.push_back(std::make_shared<const TestFunction>(std::move(a)));
  f.ops_.push_back(std::make_shared<const TestFunction>(std::move(b)));
  return f;
}

TestFunction point_potential(Point pole, int d) {
  if (d < 2) throw std::invalid_argument("point_potential: d >= 2 required");
  TestFunction f;
  f.kind_ = TestFunction::Kind::PointPotential;
  f.tag_ = TestFunction::Tag::Subharmonic;
  f.kernel_dim_ = d;
  f.pole_ = pole;
  f.poles_.push_back(std::move(pole));
  return f;
}

TestFunction truncate(const TestFunction& f, double m) {
  TestFunction t;
  t.kind_ = TestFunction::Kind::TruncatedPotential;
  t.tag_ = TestFunction::Tag::Subharmonic;
  t.param_ = m;
  t.ops_.push_back(std::make_shared<const TestFunction>(f));
  return t;
}

TestFunction negation(const TestFunction& h) {
  if (h.tag() != TestFunction::Tag::Harmonic)
    throw std::invalid_argument("negation: only harmonic-tagged functions can be negated");
  TestFunction f;
  f.kind_ = TestFunction::Kind::Negation;
  f.tag_ = TestFunction::Tag::Harmonic;
  f.ops_.push_back(std::make_shared<const TestFunction>(h));
  return f;
}

ExtendedReal TestFunction::operator()(const Point& x) const {
  switch (kind_) {
    case Kind::Constant:
      return ExtendedReal(param_);
    case Kind::HarmonicPoly:
    case Kind::SmoothSbh:
      return ExtendedReal(poly_->eval(x));
    case Kind::PointPotential: {
      const double r = dist(x, pole_);
      if (r == 0.0) return ExtendedReal::neg_inf();
      if (kernel_dim_ == 2) return ExtendedReal(std::log(r));
      return ExtendedReal(-std::pow(r, 2.0 - kernel_dim_));
    }
    case Kind::TruncatedPotential:
      return max((*ops_[0])(x), ExtendedReal(-param_));
    case Kind::Negation:
      return -(*ops_[0])(x);
    case Kind::MaxCombo:
      return max((*ops_[0])(x), (*ops_[1])(x));
  }
  throw std::logic_error("TestFunction: bad kind");
}

nlohmann::json TestFunction::descriptor() const {
  switch (kind_) {
    case Kind::Constant:
      return {{"kind", "constant"}, {"value", param_}};
    case Kind::HarmonicPoly:
      return {{"kind", "harmonic_poly"}, {"poly", poly_->to_json()}};
    case Kind::SmoothSbh:
      return {{"kind", "smooth_sbh"}, {"poly", poly_->to_json()}};
    case Kind::PointPotential:
      return {{"kind", "point_potential"}, {"pole", point_to_json(pole_)}, {"kernel_dim", kernel_dim_}};
    case Kind::TruncatedPotential: {
      nlohmann::json j = {{"kind", "truncated"}, {"m", param_}};
      j["of"] = ops_[0]->descriptor();
      return j;
    }
    case Kind::Negation:
      return {{"kind", "negation"}, {"of", ops_[0]->descriptor()}};
    case Kind::MaxCombo:
      return {{"kind", "max_combo"}, {"a", ops_[0]->descriptor()}, {"b", ops_[1]->descriptor()}};
  }
  throw std::logic_error("TestFunction: bad kind");
}

double laplacian_fd(const TestFunction& f, const Point& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("laplacian_fd: h > 0 required");
  const ExtendedReal fc = f(x);
  if (!fc.finite()) throw std::domain_error("laplacian_fd: non-finite sample at the stencil center");
  double acc = 0.0;
  Point y = x;
  for (int i = 0; i < x.dim(); ++i) {
    y[i] = x[i] + h;
    const ExtendedReal fp = f(y);
    y[i] = x[i] - h;
    const ExtendedReal fm = f(y);
    y[i] = x[i];
    if (!fp.finite() || !fm.finite())
      throw std::domain_error("laplacian_fd: pole within the stencil");
    acc += fp.value() + fm.value() - 2.0 * fc.value();
  }
  return acc / (h * h);
}

DiscreteCharge riesz_measure_grid(const TestFunction& f, const BoundingBox& box, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("riesz_measure_grid: h > 0 required");
  const int d = box.dim();
  const DimConstants k = constants(d);
  const double cell = std::pow(h, d);
  std::vector<int> counts(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    counts[static_cast<size_t>(i)] = static_cast<int>(std::floor((box.hi[i] - box.lo[i]) / h + 1e-9)) + 1;

  DiscreteCharge out;
  out.d = d;
  std::vector<int> idx(static_cast<size_t>(d), 0);
  for (;;) {
    Point p = box.lo;
    for (int i = 0; i < d; ++i) p[i] += idx[static_cast<size_t>(i)] * h;
    const double w = k.c * laplacian_fd(f, p, h) * cell;
    out.atoms.push_back(Atom{std::move(p), w});
    int axis = 0;
    while (axis < d && ++idx[static_cast<size_t>(axis)] == counts[static_cast<size_t>(axis)]) {
      idx[static_cast<size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == d) break;
  }
  return out;
}

nlohmann::json FamilyDescriptor::to_json() const {
  nlohmann::json poles = nlohmann::json::array();
  for (const Point& p : potential_poles) poles.push_back(point_to_json(p));
  return nlohmann::json{{"harmonic_degree", harmonic_degree},
                        {"potential_poles", std::move(poles)},
                        {"truncations", truncations},
                        {"seed", seed}};
}

FamilyDescriptor FamilyDescriptor::from_json(const nlohmann::json& j) {
  FamilyDescriptor d;
  d.harmonic_degree = j.at("harmonic_degree").get<int>();
  d.potential_poles.clear();
  for (const auto& p : j.at("potential_poles")) d.potential_poles.push_back(point_from_json(p));
  d.truncations = j.at("truncations").get<std::vector<double>>();
  d.seed = j.at("seed").get<uint64_t>();
  return d;
}

FamilyDescriptor make_default_descriptor(int d, const SetExpr& domain, uint64_t seed, int degree,
                                         int n_poles) {
  FamilyDescriptor desc;
  desc.harmonic_degree = degree;
  desc.seed = seed;
  desc.potential_poles = halton_in_set(domain, n_poles, seed);
  (void)d;
  return desc;
}

namespace {

constexpr int kMaxCombos = 10;

Polynomial random_harmonic_combo(const HarmonicBasis& basis, SplitMix64& rng) {
  Polynomial p(basis.d);
  for (const Polynomial& b : basis.members) {
    const double c = rng.normal();
    for (const auto& t : b.terms()) p.add_term(t.first, c * t.second);
  }
  const double scale = p.max_abs_coeff();
  return scale > 0.0 ? p.scaled(1.0 / scale) : p;
}

}  // namespace

std::vector<TestFunction> build_subharmonic_family(const FamilyDescriptor& desc, int d) {
  std::vector<TestFunction> family;
  const HarmonicBasis basis = harmonic_poly_basis(d, desc.harmonic_degree);
  for (const Polynomial& p : basis.members) family.push_back(TestFunction::harmonic_poly(p));
  for (const Point& pole : desc.potential_poles) {
    const TestFunction pot = point_potential(pole, d);
    for (double m : desc.truncations) family.push_back(truncate(pot, m));
  }
  SplitMix64 rng(desc.seed ^ 0xC2B2AE3D27D4EB4FULL);
  for (int i = 0; i < kMaxCombos; ++i) {
    TestFunction a = TestFunction::harmonic_poly(random_harmonic_combo(basis, rng));
    TestFunction b = TestFunction::harmonic_poly(random_harmonic_combo(basis, rng));
    family.push_back(TestFunction::max_combo(std::move(a), std::move(b)));
  }
  return family;
}

std::vector<TestFunction> build_harmonic_family(int d, int degree) {
  std::vector<TestFunction> family;
  const HarmonicBasis basis = harmonic_poly_basis(d, degree);
  for (const Polynomial& p : basis.members) family.push_back(TestFunction::harmonic_poly(p));
  for (const Polynomial& p : basis.members) family.push_back(negation(TestFunction::harmonic_poly(p)));
  return family;
}

}  // namespace bal
