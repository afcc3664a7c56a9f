#include "bal/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>

#include "bal/balayage.hpp"
#include "bal/construct.hpp"
#include "bal/hull.hpp"
#include "bal/lyons.hpp"
#include "bal/quad.hpp"
#include "bal/testfn.hpp"

namespace bal {

namespace {

using nlohmann::json;

double num(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != nullptr && *end == '\0' && end != s.c_str()) return v;
  }
  throw std::invalid_argument(std::string(what) + ": expected a number");
}

int num_int(const json& j, const char* what) {
  const double v = num(j, what);
  if (std::abs(v - std::round(v)) > 1e-9)
    throw std::invalid_argument(std::string(what) + ": expected an integer");
  return static_cast<int>(std::llround(v));
}

// Numeric strings (from round-tripped reports) back to numbers, recursively.
json to_numbers(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = to_numbers(v);
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(to_numbers(v));
    return out;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (!s.empty() && end != nullptr && *end == '\0') return json(v);
  }
  return j;
}

struct Context {
  int d = 2;
  uint64_t seed = 1;
  double eps = 1e-9;
  std::optional<SetExpr> domain;
  std::map<std::string, DiscreteCharge> charges;  // resolved, not flattened
};

const SetExpr& require_domain(const Context& ctx) {
  if (!ctx.domain) throw std::invalid_argument("scenario: this task requires a 'domain'");
  return *ctx.domain;
}

DiscreteCharge resolve_charge_spec(const json& raw, const Context& ctx) {
  const json spec = to_numbers(raw);
  if (spec.contains("builder")) {
    const std::string b = spec.at("builder").get<std::string>();
    if (b == "harmonic_measure_ball") {
      const auto& jb = spec.at("ball");
      const Ball ball(point_from_json(jb.at("center")), num(jb.at("radius"), "ball.radius"));
      return harmonic_measure_ball(ball, point_from_json(spec.at("x")),
                                   num_int(spec.at("level"), "level"));
    }
    if (b == "jensen_mixture") {
      const auto& jb = spec.at("ball");
      const Ball ball(point_from_json(jb.at("center")), num(jb.at("radius"), "ball.radius"));
      return jensen_mixture(num(spec.at("a"), "a"), point_from_json(spec.at("x")),
                            num(spec.at("b"), "b"), ball, num_int(spec.at("level"), "level"));
    }
    throw std::invalid_argument("scenario: unknown builder '" + b + "'");
  }
  DiscreteCharge m = charge_from_json(spec);
  if (m.d != ctx.d) throw std::invalid_argument("scenario: charge dimension differs from scenario dimension");
  return m;
}

const DiscreteCharge& named_charge(const Context& ctx, const json& ref, const char* what) {
  const std::string name = ref.get<std::string>();
  const auto it = ctx.charges.find(name);
  if (it == ctx.charges.end())
    throw std::invalid_argument(std::string(what) + ": unknown charge '" + name + "'");
  return it->second;
}

struct FamilySpec {
  std::vector<TestFunction> members;
  json descriptor;
  bool has_one = false;
  bool has_minus_one = false;
};

FamilySpec resolve_family(const json& fam_in, const Context& ctx) {
  const json fam = fam_in.is_null() ? json::object() : to_numbers(fam_in);
  FamilySpec out;
  const std::string kind = fam.value("kind", std::string("subharmonic"));
  const int degree = fam.contains("harmonic_degree") ? num_int(fam.at("harmonic_degree"), "degree") : 6;
  if (kind == "harmonic") {
    out.members = build_harmonic_family(ctx.d, degree);
    out.descriptor = json{{"kind", "harmonic"}, {"harmonic_degree", degree}};
    out.has_one = out.has_minus_one = true;  // constants and their negations
    return out;
  }
  if (kind != "subharmonic") throw std::invalid_argument("scenario: unknown family kind '" + kind + "'");
  FamilyDescriptor desc;
  if (fam.contains("potential_poles")) {
    desc = FamilyDescriptor::from_json(fam);
  } else {
    const uint64_t seed = fam.contains("seed") ? fam.at("seed").get<uint64_t>() : ctx.seed;
    const int n_poles = fam.contains("n_poles") ? num_int(fam.at("n_poles"), "n_poles") : 20;
    desc = make_default_descriptor(ctx.d, require_domain(ctx), seed, degree, n_poles);
  }
  out.members = build_subharmonic_family(desc, ctx.d);
  out.descriptor = desc.to_json();
  out.descriptor["kind"] = "subharmonic";
  out.has_one = true;  // the harmonic basis contains the constant
  return out;
}

json charge_summary(const DiscreteCharge& m, bool emit_full) {
  double support_radius = 0.0;
  for (const Atom& a : m.atoms)
    if (a.w != 0.0) support_radius = std::max(support_radius, norm(a.p));
  json j{{"atom_count", m.atoms.size()},
         {"component_count", m.components.size()},
         {"mass", total_mass(m)},
         {"quad_budget", m.quad_budget},
         {"support_radius", support_radius}};
  if (emit_full) j["measure"] = charge_to_json(m);
  return j;
}

// ---------------------------------------------------------------- tasks

int run_check(const json& sc, Context& ctx, json& result) {
  const json params = sc.value("check", json::object());
  const DiscreteCharge theta = flatten(named_charge(ctx, params.value("theta", json("theta")), "check"));
  const DiscreteCharge mu = flatten(named_charge(ctx, params.value("mu", json("mu")), "check"));
  const FamilySpec fam = resolve_family(sc.value("family", json()), ctx);
  const BalayageVerdict v = check(theta, mu, fam.members, ctx.eps, ctx.eps > 0.0);
  result["verdict"] = v.to_json();
  result["family"] = fam.descriptor;
  result["mass_relations"] = mass_relations(theta, mu, fam.has_one, fam.has_minus_one).to_json();
  return v.pass ? 0 : 1;
}

int run_jensen(const json& sc, Context& ctx, json& result) {
  const json params = sc.at("jensen");
  const DiscreteCharge mu = flatten(named_charge(ctx, params.at("mu"), "jensen"));
  const Point x = point_from_json(to_numbers(params.at("x")));
  const FamilySpec fam = resolve_family(sc.value("family", json()), ctx);
  const JensenVerdict jv = verify_jensen(mu, x, fam.members, ctx.eps);
  result["jensen"] = jv.to_json();
  result["family"] = fam.descriptor;
  bool ok = jv.pass;
  if (params.contains("arens_singer_degree")) {
    const int deg = num_int(params.at("arens_singer_degree"), "arens_singer_degree");
    const EqualityVerdict av = verify_arens_singer(mu, x, harmonic_poly_basis(ctx.d, deg), ctx.eps);
    result["arens_singer"] = av.to_json();
    ok = ok && av.pass;
  }
  return ok ? 0 : 1;
}

int run_arens_singer(const json& sc, Context& ctx, json& result) {
  const json params = sc.at("as");
  const DiscreteCharge mu = flatten(named_charge(ctx, params.at("mu"), "as"));
  const Point x = point_from_json(to_numbers(params.at("x")));
  const int deg = params.contains("degree") ? num_int(params.at("degree"), "degree") : 6;
  const EqualityVerdict av = verify_arens_singer(mu, x, harmonic_poly_basis(ctx.d, deg), ctx.eps);
  result["arens_singer"] = av.to_json();
  return av.pass ? 0 : 1;
}

int run_construct(const json& sc, Context& ctx, json& result) {
  const json params = to_numbers(sc.at("construct"));
  const std::string op = params.at("op").get<std::string>();
  const bool emit = params.value("emit_measure", false);
  int code = 0;

  if (op == "harmonic_measure" || op == "jensen_mixture") {
    json spec = params;
    spec["builder"] = op == "harmonic_measure" ? "harmonic_measure_ball" : "jensen_mixture";
    const DiscreteCharge m = resolve_charge_spec(spec, ctx);
    result["constructed"] = charge_summary(m, emit);
    return 0;
  }
  if (op == "convolution" || op == "family_integral") {
    const DiscreteCharge mu = flatten(named_charge(ctx, params.at("mu"), "construct"));
    const DiscreteCharge iota0 = flatten(named_charge(ctx, params.at("iota0"), "construct"));
    const SetExpr& domain = require_domain(ctx);
    DiscreteCharge beta;
    if (op == "convolution") {
      beta = convolution_balayage(mu, iota0, domain);
    } else {
      beta = family_integral_balayage(mu, MeasureFamily::parallel_shift(iota0), domain);
    }
    result["constructed"] = charge_summary(beta, emit);
    if (params.value("compare_convolution", false) && op == "family_integral") {
      const DiscreteCharge conv = convolution_balayage(mu, iota0, domain);
      double worst = 0.0;
      // both outputs are coalesced and sorted, so compare position-wise
      if (conv.atoms.size() != beta.atoms.size()) {
        worst = std::numeric_limits<double>::infinity();
      } else {
        for (size_t i = 0; i < conv.atoms.size(); ++i)
          worst = std::max({worst, dist(conv.atoms[i].p, beta.atoms[i].p),
                            std::abs(conv.atoms[i].w - beta.atoms[i].w)});
      }
      result["convolution_discrepancy"] = worst;
      if (!(worst <= 1e-12)) code = 1;
    }
    if (params.contains("check_against")) {
      const DiscreteCharge theta = flatten(named_charge(ctx, params.at("check_against"), "construct"));
      const FamilySpec fam = resolve_family(sc.value("family", json()), ctx);
      const BalayageVerdict v = check(theta, beta, fam.members, ctx.eps);
      result["chain_verdict"] = v.to_json();
      result["family"] = fam.descriptor;
      if (!v.pass) code = 1;
    }
    return code;
  }
  if (op == "smooth") {
    const DiscreteCharge mu = flatten(named_charge(ctx, params.at("mu"), "construct"));
    const SetExpr& domain = require_domain(ctx);
    const double radius = num(params.at("radius"), "radius");
    const int level = params.contains("level") ? num_int(params.at("level"), "level") : 16;
    const DiscreteCharge smoothed = smooth(mu, radius, level, domain);
    result["constructed"] = charge_summary(smoothed, emit);
    result["point_atoms"] = smoothed.atoms.size();
    if (params.contains("check_against")) {
      const DiscreteCharge theta = flatten(named_charge(ctx, params.at("check_against"), "construct"));
      const FamilySpec fam = resolve_family(sc.value("family", json()), ctx);
      const BalayageVerdict v = check(theta, flatten(smoothed), fam.members, ctx.eps);
      result["chain_verdict"] = v.to_json();
      result["family"] = fam.descriptor;
      if (!v.pass) code = 1;
    }
    return code;
  }
  throw std::invalid_argument("construct: unknown op '" + op + "'");
}

int run_hull(const json& sc, Context& ctx, json& result, std::optional<std::string>& csv) {
  (void)ctx;
  const json params = to_numbers(sc.at("hull"));
  const SetExpr o_expr = SetExpr::from_json(params.at("O"));
  const SetExpr k_expr = SetExpr::from_json(params.at("K"));
  const auto& jb = params.at("box");
  const BoundingBox box{point_from_json(jb.at("lo")), point_from_json(jb.at("hi"))};
  const double h = num(params.at("h"), "h");

  const GridMask o_mask = rasterize(o_expr, box, h);
  const GridMask k_mask = rasterize(k_expr, box, h);
  const HullReport hull = inward_filled_hull(o_mask, k_mask);
  result["hull_report"] = hull.to_json();
  result["hull_area"] = hull.hull.area();
  bool ok = hull.algorithms_agree;

  if (params.contains("expected_hull_area")) {
    const double expect = num(params.at("expected_hull_area"), "expected_hull_area");
    const double rtol = params.contains("area_rtol") ? num(params.at("area_rtol"), "area_rtol") : 0.03;
    const bool area_ok = std::abs(hull.hull.area() - expect) <= rtol * std::abs(expect);
    result["area_ok"] = area_ok;
    ok = ok && area_ok;
  }
  if (params.contains("O_big")) {
    const GridMask big_mask = rasterize(SetExpr::from_json(params.at("O_big")), box, h);
    std::optional<int> census;
    if (params.contains("expected_complement_census"))
      census = num_int(params.at("expected_complement_census"), "census");
    const HullPropertyReport props = check_hull_properties(o_mask, big_mask, k_mask, census);
    result["hull_properties"] = props.to_json();
    ok = ok && props.hull_inside_o && props.hull_compact && props.monotone && props.idempotent && props.census_ok;
  }
  if (params.value("emit_csv", false)) csv = hull.hull.centers_csv();
  return ok ? 0 : 1;
}

int run_lyons(const json& sc, Context& ctx, json& result) {
  const json params = to_numbers(sc.at("lyons"));
  LyonsFixture fixture;
  fixture.d = ctx.d;
  fixture.r0 = num(params.at("r0"), "r0");
  fixture.r = num(params.at("r"), "r");
  for (const auto& je : params.at("excisions"))
    fixture.excisions.push_back(Excision{point_from_json(je.at("e")), num(je.at("radius"), "radius")});
  fixture.level = params.contains("level") ? num_int(params.at("level"), "level") : 256;
  const int har_degree = params.contains("harmonic_degree") ? num_int(params.at("harmonic_degree"), "harmonic_degree") : 8;
  std::vector<double> m_list;
  for (const auto& m : params.value("m_list", json::array({5.0, 10.0, 20.0, 40.0, 50.0})))
    m_list.push_back(num(m, "m_list"));

  const CounterexampleCharges charges = build_counterexample(fixture);
  const FamilyDescriptor desc = make_default_descriptor(ctx.d, require_domain(ctx), ctx.seed);
  const CounterexampleReport rep = verify_counterexample(charges, fixture, desc, har_degree, m_list, ctx.eps);
  result["counterexample"] = rep.to_json();
  result["family"] = desc.to_json();
  return rep.pass ? 0 : 1;
}

int run_riesz(const json& sc, Context& ctx, json& result) {
  const json params = to_numbers(sc.at("riesz"));
  const json jf = params.at("function");
  const std::string kind = jf.at("kind").get<std::string>();
  std::optional<TestFunction> f;
  if (kind == "log_pole") {
    const TestFunction pot = point_potential(point_from_json(jf.at("pole")), ctx.d);
    f = jf.contains("trunc") ? truncate(pot, num(jf.at("trunc"), "trunc")) : pot;
  } else if (kind == "abs2") {
    Polynomial p(ctx.d);
    for (int i = 0; i < ctx.d; ++i) {
      std::vector<int> e(static_cast<size_t>(ctx.d), 0);
      e[static_cast<size_t>(i)] = 2;
      p.add_term(std::move(e), 1.0);
    }
    f = TestFunction::smooth_sbh(std::move(p));
  } else if (kind == "harmonic") {
    const HarmonicBasis basis = harmonic_poly_basis(ctx.d, num_int(jf.at("degree"), "degree"));
    const size_t index = static_cast<size_t>(num_int(jf.value("index", json(0)), "index"));
    if (index >= basis.members.size()) throw std::invalid_argument("riesz: basis index out of range");
    f = TestFunction::harmonic_poly(basis.members[index]);
  } else {
    throw std::invalid_argument("riesz: unknown function kind '" + kind + "'");
  }

  const auto& jb = params.at("box");
  const BoundingBox box{point_from_json(jb.at("lo")), point_from_json(jb.at("hi"))};
  const double h = num(params.at("h"), "h");
  const DiscreteCharge riesz = riesz_measure_grid(*f, box, h);

  double tv = 0.0;
  for (const Atom& a : riesz.atoms) tv += std::abs(a.w);
  result["total_mass"] = total_mass(riesz);
  result["total_variation"] = tv;

  bool ok = true;
  json queries = json::array();
  for (const auto& q : params.value("queries", json::array())) {
    const BallQuery query{point_from_json(q.at("center")), num(q.at("radius"), "radius")};
    const double mass = ball_mass(riesz, query);
    json jq{{"center", q.at("center")}, {"radius", query.radius}, {"mass", mass}};
    if (q.contains("expect")) {
      const double expect = num(q.at("expect"), "expect");
      const double tol = q.contains("tol") ? num(q.at("tol"), "tol") : ctx.eps;
      const bool qok = std::abs(mass - expect) <= tol;
      jq["ok"] = qok;
      ok = ok && qok;
    }
    queries.push_back(std::move(jq));
  }
  result["queries"] = std::move(queries);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- fixtures

const std::map<std::string, const char*>& fixtures();

}  // namespace

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

nlohmann::json stringify_floats(const nlohmann::json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = stringify_floats(v);
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(stringify_floats(v));
    return out;
  }
  if (j.is_number_float()) return json(format17(j.get<double>()));
  return j;
}

std::string format_report(const nlohmann::json& report) {
  return stringify_floats(report).dump(2) + "\n";
}

RunResult run_scenario(const nlohmann::json& scenario, const RunOptions& opts) {
  RunResult rr;
  json report;
  try {
    if (!scenario.is_object()) throw std::invalid_argument("scenario: expected a JSON object");
    Context ctx;
    ctx.d = scenario.contains("dimension") ? num_int(scenario.at("dimension"), "dimension") : 2;
    if (ctx.d < 2) throw std::invalid_argument("scenario: dimension >= 2 required");
    ctx.seed = opts.seed ? *opts.seed
                         : (scenario.contains("seed") ? scenario.at("seed").get<uint64_t>() : 1);
    ctx.eps = opts.eps ? *opts.eps : (scenario.contains("eps") ? num(scenario.at("eps"), "eps") : 1e-9);
    if (scenario.contains("domain")) ctx.domain = SetExpr::from_json(to_numbers(scenario.at("domain")));
    const json charge_specs = scenario.value("charges", json::object());
    for (const auto& [name, spec] : charge_specs.items())
      ctx.charges.emplace(name, resolve_charge_spec(spec, ctx));

    const std::string task = scenario.at("task").get<std::string>();
    report["task"] = task;
    report["name"] = scenario.value("name", task);
    report["dimension"] = ctx.d;
    report["seed"] = ctx.seed;
    report["eps"] = ctx.eps;

    json result;
    int code = 2;
    if (task == "check")
      code = run_check(scenario, ctx, result);
    else if (task == "jensen")
      code = run_jensen(scenario, ctx, result);
    else if (task == "as")
      code = run_arens_singer(scenario, ctx, result);
    else if (task == "construct")
      code = run_construct(scenario, ctx, result);
    else if (task == "hull")
      code = run_hull(scenario, ctx, result, rr.csv);
    else if (task == "lyons")
      code = run_lyons(scenario, ctx, result);
    else if (task == "riesz")
      code = run_riesz(scenario, ctx, result);
    else
      throw std::invalid_argument("scenario: unknown task '" + task + "'");

    report["result"] = std::move(result);
    report["exit_code"] = code;
    rr.exit_code = code;
  } catch (const json::exception& e) {
    report = json{{"error", std::string("invalid scenario JSON: ") + e.what()}, {"exit_code", 2}};
    rr.exit_code = 2;
  } catch (const std::invalid_argument& e) {
    report = json{{"error", e.what()}, {"exit_code", 2}};
    rr.exit_code = 2;
  } catch (const std::exception& e) {
    report = json{{"error", e.what()}, {"exit_code", 1}};
    rr.exit_code = 1;
  }
  rr.report = std::move(report);
  return rr;
}

RunResult run_scenario_ref(const std::string& path_or_name, const RunOptions& opts) {
  const char* bundled = fixture_source(path_or_name);
  std::string text;
  if (bundled != nullptr) {
    text = bundled;
  } else {
    std::ifstream in(path_or_name);
    if (!in) {
      RunResult rr;
      rr.exit_code = 2;
      rr.report = json{{"error", "cannot open scenario '" + path_or_name + "'"}, {"exit_code", 2}};
      return rr;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  json scenario;
  try {
    scenario = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.what() carries the byte/line position of the violation
    RunResult rr;
    rr.exit_code = 2;
    rr.report = json{{"error", std::string("scenario is not valid JSON: ") + e.what()},
                     {"exit_code", 2}};
    return rr;
  }
  return run_scenario(scenario, opts);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, src] : fixtures()) names.push_back(name);
  return names;
}

const char* fixture_source(const std::string& name) {
  const auto& fx = fixtures();
  const auto it = fx.find(name);
  return it == fx.end() ? nullptr : it->second;
}

nlohmann::json scenario_schema() {
  return json{
      {"dimension", "int >= 2"},
      {"seed", "uint64; fixes every randomized choice"},
      {"eps", "float tolerance; 0 disables quadrature-budget folding"},
      {"domain", "SetExpr: {\"ball\":{...}} | {\"op\":\"union\"|\"diff\",\"args\":[...]}"},
      {"charges", "name -> measure JSON {d, atoms:[{p,w}], components:[{kind,center,radius,total,level}]} or {builder:...}"},
      {"family",
       "{kind:\"subharmonic\"|\"harmonic\", harmonic_degree, potential_poles?, truncations?, seed?, n_poles?}"},
      {"task", "check | jensen | as | construct | hull | lyons | riesz"},
      {"check", "{theta, mu}"},
      {"jensen", "{mu, x, arens_singer_degree?}"},
      {"as", "{mu, x, degree}"},
      {"construct", "{op: harmonic_measure|jensen_mixture|convolution|family_integral|smooth, ...}"},
      {"hull", "{O, K, box:{lo,hi}, h, O_big?, expected_hull_area?, expected_complement_census?, emit_csv?}"},
      {"lyons", "{r0, r, excisions:[{e,radius}], level, harmonic_degree, m_list}"},
      {"riesz", "{function:{kind:log_pole|abs2|harmonic,...}, box, h, queries:[{center,radius,expect?,tol?}]}"}};
}

namespace {

const std::map<std::string, const char*>& fixtures() {
  static const std::map<std::string, const char*> fx = {
      {"example5", R"json({
  "name": "example5",
  "task": "lyons",
  "dimension": 2,
  "seed": 424242,
  "eps": 1e-7,
  "domain": {"ball": {"center": [0, 0], "radius": 1.0}},
  "lyons": {
    "r0": 0.3,
    "r": 0.8,
    "excisions": [{"e": [0.5, 0.0], "radius": 0.1}],
    "level": 256,
    "harmonic_degree": 8,
    "m_list": [5, 10, 20, 40, 50]
  }
})json"},
      {"hull_shell", R"json({
  "name": "hull_shell",
  "task": "hull",
  "dimension": 2,
  "seed": 1,
  "eps": 0,
  "hull": {
    "O": {"ball": {"center": [0, 0], "radius": 1.0}},
    "K": {"op": "diff", "args": [
      {"ball": {"center": [0, 0], "radius": 0.55, "closed": true}},
      {"ball": {"center": [0, 0], "radius": 0.45}}
    ]},
    "O_big": {"ball": {"center": [0, 0], "radius": 2.0}},
    "box": {"lo": [-2.2, -2.2], "hi": [2.2, 2.2]},
    "h": 0.00390625,
    "expected_hull_area": 0.95033177771091246,
    "area_rtol": 0.03,
    "expected_complement_census": 1
  }
})json"},
      {"jensen_ball", R"json({
  "name": "jensen_ball",
  "task": "jensen",
  "dimension": 2,
  "seed": 11,
  "eps": 1e-6,
  "domain": {"ball": {"center": [0, 0], "radius": 1.0}},
  "charges": {
    "mu": {"builder": "harmonic_measure_ball",
           "ball": {"center": [0, 0], "radius": 0.5},
           "x": [0.3, 0.1],
           "level": 512}
  },
  "jensen": {"mu": "mu", "x": [0.3, 0.1], "arens_singer_degree": 6}
})json"},
      {"convolution_chain", R"json({
  "name": "convolution_chain",
  "task": "construct",
  "dimension": 2,
  "seed": 5,
  "eps": 1e-7,
  "domain": {"ball": {"center": [0, 0], "radius": 1.0}},
  "charges": {
    "theta": {"d": 2, "atoms": [], "components": [
      {"kind": "uniform_ball", "center": [0, 0], "radius": 0.3, "total": 1.0, "level": 64}]},
    "mu": {"d": 2, "atoms": [], "components": [
      {"kind": "uniform_ball", "center": [0, 0], "radius": 0.8, "total": 1.0, "level": 64}]},
    "iota0": {"d": 2, "atoms": [], "components": [
      {"kind": "mollifier", "center": [0, 0], "radius": 0.05, "total": 1.0, "level": 16}]}
  },
  "construct": {"op": "convolution", "mu": "mu", "iota0": "iota0", "check_against": "theta"}
})json"},
      {"riesz_log", R"json({
  "name": "riesz_log",
  "task": "riesz",
  "dimension": 2,
  "seed": 1,
  "eps": 0.02,
  "riesz": {
    "function": {"kind": "log_pole", "pole": [0, 0], "trunc": 20},
    "box": {"lo": [-0.5, -0.5], "hi": [0.5, 0.5]},
    "h": 0.0025,
    "queries": [{"center": [0, 0], "radius": 0.2, "expect": 1.0, "tol": 0.02}]
  }
})json"},
      {"masses", R"json({
  "name": "masses",
  "task": "check",
  "dimension": 2,
  "seed": 7,
  "eps": 1e-9,
  "domain": {"ball": {"center": [0, 0], "radius": 2.0}},
  "charges": {
    "theta": {"d": 2, "atoms": [{"p": [0.1, 0.0], "w": 0.5}, {"p": [-0.1, 0.0], "w": 0.5}],
              "components": []},
    "mu": {"d": 2, "atoms": [], "components": [
      {"kind": "surface_sphere", "center": [0, 0], "radius": 1.0, "total": 1.0, "level": 64}]}
  },
  "family": {"kind": "harmonic", "harmonic_degree": 1},
  "check": {"theta": "theta", "mu": "mu"}
})json"}};
  return fx;
}

}  // namespace

}  // namespace bal
