#pragma once

// The core relation: verdicts and certificates for "theta is swept to mu
// over the test family", mass relations, Jensen / Arens-Singer verification,
// and the polar-witness truncation sweep.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bal/measure.hpp"
#include "bal/testfn.hpp"

namespace bal {

struct BalayageVerdict {
  bool pass = false;
  // Flagged when more than 10% of the family was skipped on undefined
  // integrals, or when a failure is smaller than the quadrature budgets.
  bool inconclusive = false;
  ExtendedReal worst_margin = ExtendedReal::pos_inf();  // min of (mu-side - theta-side)
  int witness_index = -1;
  nlohmann::json witness;  // descriptor of the worst-margin member
  double tolerance = 0.0;  // eps + quadrature budgets of both charges
  int skipped = 0;
  int family_size = 0;

  nlohmann::json to_json() const;
};

// Margin per family member under extended-real rules; a -inf on the mu side
// against a finite theta side fails decisively with that witness. Members
// whose integrals collide as (+inf)+(-inf) are skipped and counted. When
// `fold_budgets` is false the tolerance is exactly `eps` (the strict mode
// the scenario runner uses for eps = 0).
BalayageVerdict check(const DiscreteCharge& theta, const DiscreteCharge& mu,
                      const std::vector<TestFunction>& family, double eps,
                      bool fold_budgets = true);

struct MassRelationReport {
  double theta_mass = 0.0;
  double mu_mass = 0.0;
  bool item1_checked = false;  // 1 in H: theta(O) <= mu(O)
  bool item1_pass = false;
  bool item2_checked = false;  // +-1 in H: theta(O) = mu(O)
  bool item2_pass = false;

  nlohmann::json to_json() const;
};

MassRelationReport mass_relations(const DiscreteCharge& theta, const DiscreteCharge& mu,
                                  bool family_has_one, bool family_has_minus_one);

struct JensenVerdict {
  bool pass = false;
  bool positive = false;
  bool mass_ok = false;
  double mass = 0.0;
  BalayageVerdict margins;

  nlohmann::json to_json() const;
};

// mu positive, mass 1, and integral of h against mu >= h(x) - tol for every
// family member.
JensenVerdict verify_jensen(const DiscreteCharge& mu, const Point& x,
                            const std::vector<TestFunction>& family, double eps);

struct EqualityVerdict {
  bool pass = false;
  double worst_abs_margin = 0.0;
  int witness_index = -1;
  nlohmann::json witness;
  double tolerance = 0.0;

  nlohmann::json to_json() const;
};

// |integral of h against mu - h(x)| <= tol for every basis member
// (two-sided because the harmonic class is closed under negation).
EqualityVerdict verify_arens_singer(const DiscreteCharge& mu, const Point& x,
                                    const HarmonicBasis& basis, double eps);

struct PolarSweepReport {
  bool precondition_ok = false;
  std::string note;
  std::vector<std::pair<double, double>> margins;  // (M, margin at M)
  std::optional<double> first_failing_m;
  double tolerance = 0.0;

  nlohmann::json to_json() const;
};

// Sweeps increasing truncations of the point potential at e and reports the
// first M whose margin drops below -tol; none when mu carries no mass at e.
PolarSweepReport polar_witness_sweep(const DiscreteCharge& theta, const DiscreteCharge& mu,
                                     const Point& e, const std::vector<double>& m_list,
                                     double eps);

}  // namespace bal
