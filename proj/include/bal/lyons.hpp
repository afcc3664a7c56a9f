#pragma once

// The Lyons-type counterexample: a harmonic-family balayage that charges a
// finite (hence polar) point set, detected by the truncated-potential sweep;
// plus the hull equality/inequality fixture.

#include <vector>

#include <json.hpp>

#include "bal/balayage.hpp"
#include "bal/measure.hpp"
#include "bal/testfn.hpp"

namespace bal {

struct Excision {
  Point center;
  double radius = 0.0;
};

struct LyonsFixture {
  int d = 2;
  double r0 = 0.3;
  double r = 0.8;
  double domain_radius = 1.0;       // the ambient ball; needs r0 < r < domain_radius
  std::vector<Excision> excisions;  // finite truncation of the sequence
  int level = 256;                  // discretization level for all components
};

struct CounterexampleCharges {
  DiscreteCharge theta;  // normalized volume on the small ball
  DiscreteCharge mu;     // normalized volume on the large ball
  DiscreteCharge mu_e;   // mu with each excised ball returned as a point atom
};

// theta, mu, mu_E as component charges (not yet flattened). The excised
// mass (r_j / r)^d reappears as the atom weight at e_j, so all three
// charges share total mass 1.
CounterexampleCharges build_counterexample(const LyonsFixture& f);

struct CounterexampleReport {
  BalayageVerdict sbh_pair;        // theta swept to mu over the subharmonic family
  BalayageVerdict har_mu_e;        // theta swept to mu_E over the harmonic family
  double har_max_abs_margin = 0.0;
  PolarSweepReport sweep;          // truncation sweep at the first excision point
  // measured mass in a 1e-9 ball at each e_j against (r_j / r)^d
  std::vector<std::pair<double, double>> excision_masses;
  double mu_e_polar_mass = 0.0;    // sum of the atom weights on the excision set
  bool pass = false;

  nlohmann::json to_json() const;
};

CounterexampleReport verify_counterexample(const CounterexampleCharges& charges, const LyonsFixture& fixture,
                               const FamilyDescriptor& sbh_descriptor, int har_degree,
                               const std::vector<double>& m_list, double eps);

struct HullEqualityReport {
  double equality_margin = 0.0;   // |h(0) - sphere mean| for the outside pole
  double inequality_margin = 0.0; // mu-mean minus value for the max of two potentials
  bool equality_ok = false;
  bool inequality_ok = false;
  bool degenerate_excluded = false;  // pole inside the hull: equality not expected
  double degenerate_gap = 0.0;

  nlohmann::json to_json() const;
};

// theta = dirac at 0, mu = harmonic measure of B(0, 1/2) at 0 inside the
// unit ball; the equality case uses a potential with pole at radius 0.8
// (harmonic near the hull), the inequality case the max of two such
// potentials, and the excluded case a pole at 0.49 inside the hull.
HullEqualityReport hull_equality_fixture(int d, int level);

}  // namespace bal
