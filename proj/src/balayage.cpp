#include "bal/balayage.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace bal {

namespace {

nlohmann::json margin_json(const ExtendedReal& m) {
  if (m.is_neg_inf()) return "-inf";
  if (m.is_pos_inf()) return "+inf";
  return m.value();
}

int env_thread_cap() {
  const char* v = std::getenv("BALAYAGE_THREADS");
  if (v == nullptr) return 1;
  const int n = std::atoi(v);
  return std::clamp(n, 1, 64);
}

}  // namespace

nlohmann::json BalayageVerdict::to_json() const {
  return nlohmann::json{{"pass", pass},
                        {"inconclusive", inconclusive},
                        {"worst_margin", margin_json(worst_margin)},
                        {"witness", witness},
                        {"witness_index", witness_index},
                        {"skipped", skipped},
                        {"family_size", family_size},
                        {"tolerance", tolerance}};
}

BalayageVerdict check(const DiscreteCharge& theta, const DiscreteCharge& mu,
                      const std::vector<TestFunction>& family, double eps, bool fold_budgets) {
  require_flattened(theta, "check");
  require_flattened(mu, "check");
  const double budgets = theta.quad_budget + mu.quad_budget;

  BalayageVerdict v;
  v.family_size = static_cast<int>(family.size());
  v.tolerance = fold_budgets ? eps + budgets : eps;

  // margins evaluated independently per member; reduction stays in index
  // order so the verdict is identical for any thread count
  const size_t n = family.size();
  std::vector<std::optional<ExtendedReal>> margins(n);
  auto eval_range = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      try {
        const ExtendedReal a = integrate(theta, family[i]);
        const ExtendedReal b = integrate(mu, family[i]);
        margins[i] = b - a;
      } catch (const UndefinedIntegral&) {
        margins[i] = std::nullopt;
      }
    }
  };
  const int threads = std::min<int>(env_thread_cap(), static_cast<int>(n));
  if (threads <= 1 || n < 8) {
    eval_range(0, n);
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const size_t lo = t * chunk, hi = std::min(n, lo + chunk);
      if (lo < hi) pool.emplace_back(eval_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (size_t i = 0; i < n; ++i) {
    if (!margins[i]) {
      ++v.skipped;
      continue;
    }
    if (*margins[i] < v.worst_margin || v.witness_index < 0) {
      v.worst_margin = *margins[i];
      v.witness_index = static_cast<int>(i);
    }
  }
  if (v.witness_index >= 0) v.witness = family[static_cast<size_t>(v.witness_index)].descriptor();
  v.pass = v.worst_margin >= ExtendedReal(-v.tolerance);
  const bool noise_level_fail =
      !v.pass && v.worst_margin.finite() && v.worst_margin.value() >= -(budgets + 1e-15);
  v.inconclusive = (v.skipped * 10 > v.family_size) || noise_level_fail;
  return v;
}

nlohmann::json MassRelationReport::to_json() const {
  return nlohmann::json{{"theta_mass", theta_mass},   {"mu_mass", mu_mass},
                        {"item1_checked", item1_checked}, {"item1_pass", item1_pass},
                        {"item2_checked", item2_checked}, {"item2_pass", item2_pass}};
}

MassRelationReport mass_relations(const DiscreteCharge& theta, const DiscreteCharge& mu,
                                  bool family_has_one, bool family_has_minus_one) {
  MassRelationReport r;
  r.theta_mass = total_mass(theta);
  r.mu_mass = total_mass(mu);
  const double tol = 1e-12;
  if (family_has_one) {
    r.item1_checked = true;
    r.item1_pass = r.theta_mass <= r.mu_mass + tol;
  }
  if (family_has_one && family_has_minus_one) {
    r.item2_checked = true;
    r.item2_pass = std::abs(r.theta_mass - r.mu_mass) <= tol;
  }
  return r;
}

nlohmann::json JensenVerdict::to_json() const {
  return nlohmann::json{{"pass", pass},
                        {"positive", positive},
                        {"mass_ok", mass_ok},
                        {"mass", mass},
                        {"margins", margins.to_json()}};
}

JensenVerdict verify_jensen(const DiscreteCharge& mu, const Point& x,
                            const std::vector<TestFunction>& family, double eps) {
  require_flattened(mu, "verify_jensen");
  JensenVerdict v;
  v.positive = std::all_of(mu.atoms.begin(), mu.atoms.end(),
                           [](const Atom& a) { return a.w >= -1e-15; });
  v.mass = total_mass(mu);
  v.mass_ok = std::abs(v.mass - 1.0) <= eps + mu.quad_budget + 1e-12;
  v.margins = check(DiscreteCharge::dirac(x), mu, family, eps);
  v.pass = v.positive && v.mass_ok && v.margins.pass;
  return v;
}

nlohmann::json EqualityVerdict::to_json() const {
  return nlohmann::json{{"pass", pass},
                        {"worst_abs_margin", worst_abs_margin},
                        {"witness", witness},
                        {"witness_index", witness_index},
                        {"tolerance", tolerance}};
}

EqualityVerdict verify_arens_singer(const DiscreteCharge& mu, const Point& x,
                                    const HarmonicBasis& basis, double eps) {
  require_flattened(mu, "verify_arens_singer");
  EqualityVerdict v;
  v.tolerance = eps + mu.quad_budget;
  for (size_t i = 0; i < basis.members.size(); ++i) {
    const TestFunction h = TestFunction::harmonic_poly(basis.members[i]);
    const double margin = integrate(mu, h).value() - basis.members[i].eval(x);
    if (std::abs(margin) > v.worst_abs_margin || v.witness_index < 0) {
      v.worst_abs_margin = std::abs(margin);
      v.witness_index = static_cast<int>(i);
      v.witness = h.descriptor();
    }
  }
  v.pass = v.worst_abs_margin <= v.tolerance;
  return v;
}

nlohmann::json PolarSweepReport::to_json() const {
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& [m, margin] : margins) ms.push_back({{"m", m}, {"margin", margin}});
  nlohmann::json j{{"precondition_ok", precondition_ok},
                   {"note", note},
                   {"margins", std::move(ms)},
                   {"tolerance", tolerance}};
  j["first_failing_m"] = first_failing_m ? nlohmann::json(*first_failing_m) : nlohmann::json();
  return j;
}

PolarSweepReport polar_witness_sweep(const DiscreteCharge& theta, const DiscreteCharge& mu,
                                     const Point& e, const std::vector<double>& m_list,
                                     double eps) {
  require_flattened(theta, "polar_witness_sweep");
  require_flattened(mu, "polar_witness_sweep");
  PolarSweepReport r;
  r.tolerance = eps + theta.quad_budget + mu.quad_budget;
  for (const Atom& a : theta.atoms) {
    if (a.w != 0.0 && dist(a.p, e) < 1e-6) {
      r.note = "witness point lies within 1e-6 of the theta support; no verdict";
      return r;
    }
  }
  r.precondition_ok = true;
  if (!std::is_sorted(m_list.begin(), m_list.end()))
    throw std::invalid_argument("polar_witness_sweep: m_list must be increasing");
  const TestFunction pot = point_potential(e, theta.d);
  for (double m : m_list) {
    const TestFunction h = truncate(pot, m);
    const double margin = (integrate(mu, h) - integrate(theta, h)).value();
    r.margins.emplace_back(m, margin);
    if (!r.first_failing_m && margin < -r.tolerance) r.first_failing_m = m;
  }
  return r;
}

}  // namespace bal
