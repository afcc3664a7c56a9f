#include "bal/measure.hpp"

#include <algorithm>
#include <cmath>

namespace bal {

namespace {

constexpr double kCoalesceDist = 1e-12;

void require_same_space(const DiscreteCharge& a, const DiscreteCharge& b, const char* op) {
  if (a.d != b.d) throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

// Conservative containment of a closed ball in a set expression.
// Returns +1 provably inside, -1 provably outside, 0 undecided.
int classify_ball(const SetExpr& region, const Ball& b) {
  switch (region.op()) {
    case SetExpr::Op::Leaf: {
      const Ball& leaf = *region.leaf();
      const double c2c = dist(b.center, leaf.center);
      if (c2c + b.radius < leaf.radius || (leaf.closed && c2c + b.radius <= leaf.radius)) return 1;
      if (c2c - b.radius > leaf.radius || (!leaf.closed && c2c - b.radius >= leaf.radius)) return -1;
      return 0;
    }
    case SetExpr::Op::Union: {
      bool undecided = false;
      for (const auto& a : region.args()) {
        const int cls = classify_ball(a, b);
        if (cls == 1) return 1;
        if (cls == 0) undecided = true;
      }
      return undecided ? 0 : -1;
    }
    case SetExpr::Op::Diff: {
      const int base = classify_ball(region.args()[0], b);
      if (base == -1) return -1;
      bool clipped_undecided = false;
      for (size_t i = 1; i < region.args().size(); ++i) {
        const int cls = classify_ball(region.args()[i], b);
        if (cls == 1) return -1;  // wholly removed
        if (cls == 0) clipped_undecided = true;
      }
      if (base == 1 && !clipped_undecided) return 1;
      return 0;
    }
  }
  return 0;
}

}  // namespace

void require_flattened(const DiscreteCharge& m, const char* op) {
  if (!m.flattened())
    throw std::invalid_argument(std::string(op) + ": charge has undiscretized components; flatten first");
}

double total_mass(const DiscreteCharge& m) {
  double s = 0.0;
  for (const Atom& a : m.atoms) s += a.w;
  for (const ContinuousComponent& c : m.components) s += c.total;
  return s;
}

DiscreteCharge coalesced(const DiscreteCharge& m) {
  DiscreteCharge out = m;
  std::sort(out.atoms.begin(), out.atoms.end(),
            [](const Atom& a, const Atom& b) { return lex_less(a.p, b.p); });
  std::vector<Atom> merged;
  merged.reserve(out.atoms.size());
  std::vector<bool> used(out.atoms.size(), false);
  for (size_t i = 0; i < out.atoms.size(); ++i) {
    if (used[i]) continue;
    Atom acc = out.atoms[i];
    // lexicographic sort puts merge candidates within a narrow first-coordinate window
    for (size_t j = i + 1; j < out.atoms.size(); ++j) {
      if (out.atoms[j].p[0] - acc.p[0] > kCoalesceDist) break;
      if (!used[j] && dist(out.atoms[j].p, acc.p) <= kCoalesceDist) {
        acc.w += out.atoms[j].w;
        used[j] = true;
      }
    }
    merged.push_back(std::move(acc));
  }
  out.atoms = std::move(merged);
  return out;
}

JordanDecomposition jordan(const DiscreteCharge& m) {
  require_flattened(m, "jordan");
  const DiscreteCharge c = coalesced(m);
  JordanDecomposition jd;
  jd.pos.d = jd.neg.d = c.d;
  for (const Atom& a : c.atoms) {
    if (a.w > 0.0)
      jd.pos.atoms.push_back(a);
    else if (a.w < 0.0)
      jd.neg.atoms.push_back(Atom{a.p, -a.w});
    jd.total_variation += std::abs(a.w);
  }
  return jd;
}

DiscreteCharge restrict_to(const DiscreteCharge& m, const SetExpr& region) {
  DiscreteCharge out;
  out.d = m.d;
  out.quad_budget = m.quad_budget;
  for (const Atom& a : m.atoms)
    if (region.contains(a.p)) out.atoms.push_back(a);
  for (const ContinuousComponent& c : m.components) {
    const int cls = classify_ball(region, c.support_ball());
    if (cls == 1)
      out.components.push_back(c);
    else if (cls == 0)
      throw std::invalid_argument(
          "restrict_to: component support (center norm " + std::to_string(norm(c.center)) +
          ", radius " + std::to_string(c.radius) +
          ") straddles the region boundary; flatten first");
  }
  return out;
}

double ball_mass(const DiscreteCharge& m, const BallQuery& q) {
  require_flattened(m, "ball_mass");
  double s = 0.0;
  for (const Atom& a : m.atoms)
    if (dist(a.p, q.center) <= q.radius) s += a.w;
  return s;
}

DiscreteCharge convolve(const DiscreteCharge& a, const DiscreteCharge& b) {
  require_same_space(a, b, "convolve");
  require_flattened(a, "convolve");
  require_flattened(b, "convolve");
  DiscreteCharge out;
  out.d = a.d;
  out.atoms.reserve(a.atoms.size() * b.atoms.size());
  for (const Atom& x : a.atoms)
    for (const Atom& y : b.atoms) out.atoms.push_back(Atom{x.p + y.p, x.w * y.w});
  double am = 0.0, bm = 0.0;
  for (const Atom& x : a.atoms) am += std::abs(x.w);
  for (const Atom& y : b.atoms) bm += std::abs(y.w);
  out.quad_budget = a.quad_budget * bm + b.quad_budget * am;
  return coalesced(out);
}

DiscreteCharge mix(const std::vector<std::pair<double, DiscreteCharge>>& parts) {
  DiscreteCharge out;
  if (parts.empty()) return out;
  out.d = parts.front().second.d;
  for (const auto& [coef, m] : parts) {
    require_same_space(out, m, "mix");
    for (const Atom& a : m.atoms) out.atoms.push_back(Atom{a.p, coef * a.w});
    for (const ContinuousComponent& c : m.components) {
      ContinuousComponent sc = c;
      sc.total *= coef;
      out.components.push_back(std::move(sc));
    }
    out.quad_budget += std::abs(coef) * m.quad_budget;
  }
  return coalesced(out);
}

DiscreteCharge pushforward(const DiscreteCharge& m, const std::function<Point(const Point&)>& map) {
  require_flattened(m, "pushforward");
  DiscreteCharge out;
  out.d = m.d;
  out.quad_budget = m.quad_budget;
  out.atoms.reserve(m.atoms.size());
  for (const Atom& a : m.atoms) {
    Point q;
    try {
      q = map(a.p);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("pushforward: map undefined at an atom: ") + e.what());
    }
    if (q.dim() != m.d) throw std::invalid_argument("pushforward: map changed dimension");
    out.atoms.push_back(Atom{std::move(q), a.w});
  }
  return coalesced(out);
}

nlohmann::json charge_to_json(const DiscreteCharge& m) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const Atom& a : m.atoms) atoms.push_back({{"p", point_to_json(a.p)}, {"w", a.w}});
  nlohmann::json comps = nlohmann::json::array();
  for (const ContinuousComponent& c : m.components) {
    const char* kind = c.kind == ContinuousComponent::Kind::UniformBall     ? "uniform_ball"
                       : c.kind == ContinuousComponent::Kind::SurfaceSphere ? "surface_sphere"
                                                                            : "mollifier";
    nlohmann::json jc{{"kind", kind},
                      {"center", point_to_json(c.center)},
                      {"radius", c.radius},
                      {"total", c.total},
                      {"level", c.level}};
    if (c.layout == ContinuousComponent::Layout::Grid) jc["layout"] = "grid";
    comps.push_back(std::move(jc));
  }
  return nlohmann::json{{"d", m.d}, {"atoms", std::move(atoms)}, {"components", std::move(comps)}};
}

DiscreteCharge charge_from_json(const nlohmann::json& j) {
  DiscreteCharge m;
  m.d = j.at("d").get<int>();
  if (m.d < 2) throw std::invalid_argument("charge: d >= 2 required");
  for (const auto& ja : j.value("atoms", nlohmann::json::array())) {
    Atom a{point_from_json(ja.at("p")), ja.at("w").get<double>()};
    if (a.p.dim() != m.d) throw std::invalid_argument("charge: atom dimension mismatch");
    m.atoms.push_back(std::move(a));
  }
  for (const auto& jc : j.value("components", nlohmann::json::array())) {
    ContinuousComponent c;
    const std::string kind = jc.at("kind").get<std::string>();
    if (kind == "uniform_ball")
      c.kind = ContinuousComponent::Kind::UniformBall;
    else if (kind == "surface_sphere")
      c.kind = ContinuousComponent::Kind::SurfaceSphere;
    else if (kind == "mollifier")
      c.kind = ContinuousComponent::Kind::Mollifier;
    else
      throw std::invalid_argument("charge: unknown component kind '" + kind + "'");
    c.center = point_from_json(jc.at("center"));
    if (c.center.dim() != m.d) throw std::invalid_argument("charge: component dimension mismatch");
    c.radius = jc.at("radius").get<double>();
    if (!(c.radius > 0.0)) throw std::invalid_argument("charge: component radius must be positive");
    c.total = jc.at("total").get<double>();
    c.level = jc.value("level", 64);
    if (jc.value("layout", std::string("polar")) == "grid") c.layout = ContinuousComponent::Layout::Grid;
    m.components.push_back(std::move(c));
  }
  return m;
}

}  // namespace bal
