// Command-line front-end: every analysis the library offers, reported as
// deterministic JSON envelopes on standard output.
//
// Exit codes: 0 ok, 2 domain/input error, 3 undecided orbit verdict.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wickgit/io.hpp"
#include "wickgit/suites.hpp"

using nlohmann::json;
using namespace wickgit;

namespace {

// Option values accept either a file path or inline JSON text.
std::string load_arg(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && (s[pos] == '{' || s[pos] == '[')) return s;
  return read_file(s);
}

bool is_digits(const std::string& s, size_t from) {
  if (from >= s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(from), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

// "oPQ" builds the standard pseudo-orthogonal form; "oN" the compact one;
// anything else is JSON with an optional conjugated embedding.
RealForm parse_form(const std::string& s) {
  if (s.size() >= 2 && s[0] == 'o' && is_digits(s, 1)) {
    if (s.size() == 2) return build_o_pq(0, s[1] - '0');
    if (s.size() == 3) return build_o_pq(s[1] - '0', s[2] - '0');
    throw Error("form shorthand must be oN or oPQ with single digits: '" + s + "'");
  }
  return real_form_from_json(load_arg(s));
}

Vec parse_point(const std::string& csv) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error("could not parse coordinate '" + item + "' in point '" + csv + "'");
    }
  }
  Vec p(static_cast<Eigen::Index>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) p[static_cast<Eigen::Index>(i)] = vals[i];
  return p;
}

json weights_json(const std::vector<std::vector<int>>& support) {
  json a = json::array();
  for (const auto& w : support) a.push_back(w);
  return a;
}

json matrix_json(const Mat& m) { return json::parse(matrix_to_json(m)); }

int emit(const std::string& verb, const std::string& status, const json& payload, long seed) {
  std::cout << report_envelope(verb, status, payload.dump(), seed);
  if (status == "error") return 2;
  if (status == "undecided") return 3;
  return 0;
}

int do_lie_info(const std::string& form_arg) {
  const RealForm f = parse_form(form_arg);
  const auto sig = killing_theta_signature(f);
  json p;
  p["n"] = f.n;
  p["p"] = f.p;
  p["q"] = f.q;
  p["standard_embedding"] = f.standard;
  p["dim"] = f.dim();
  p["dim_t"] = f.dim_t;
  p["dim_p"] = f.dim_p;
  p["killing_signature"] = {sig.first, sig.second};
  return emit("lie-info", "ok", p, 0);
}

int do_triple_check(const std::string& triple_arg) {
  const CompatibleTriple t = triple_from_json(load_arg(triple_arg));
  const TripleReport r = check_compatible_triple(t);
  json p;
  p["commutes"] = r.commutes;
  p["dim_meet"] = r.dim_meet;
  p["dim_meet_i"] = r.dim_meet_i;
  p["direct_sum_ok"] = r.direct_sum_ok;
  p["forms"] = {{"f1", {{"p", t.f1.p}, {"q", t.f1.q}}},
                {"f2", {{"p", t.f2.p}, {"q", t.f2.q}}},
                {"compact", {{"p", t.compact.p}, {"q", t.compact.q}}}};
  return emit("triple-check", "ok", p, 0);
}

int do_roots(const std::string& form_arg) {
  const RealForm f = parse_form(form_arg);
  const RestrictedRootSystem rs = restricted_roots(f, maximal_abelian(f));
  json p;
  p["rank"] = rs.k;
  p["label"] = rs.label;
  p["centralizer_dim"] = rs.m_dim;
  json roots = json::array();
  for (const auto& r : rs.roots)
    roots.push_back({{"coeffs", r.first}, {"multiplicity", r.second}});
  p["roots"] = roots;
  p["positive_roots"] = weights_json(rs.positive_roots);
  p["simple_roots"] = weights_json(rs.simple_roots);
  return emit("roots", "ok", p, 0);
}

int do_bw(const std::string& form_arg, const std::string& tensor_arg) {
  const RealForm f = parse_form(form_arg);
  const Tensor t = tensor_from_json(load_arg(tensor_arg));
  if (t.n() != f.n) throw Error("tensor frame dimension does not match the form");
  const BoostGenerators bg = boost_generators(restricted_roots(f, maximal_abelian(f)));
  const BoostWeightDecomp d = bw_decompose(t, bg);
  json p;
  p["rank"] = d.k;
  p["valence"] = d.valence;
  p["support"] = weights_json(d.support);
  json parts = json::array();
  for (const auto& [w, comp] : d.components)
    parts.push_back({{"weight", w}, {"norm", comp.norm()}});
  p["components"] = parts;
  return emit("bw", "ok", p, 0);
}

int do_sg(const std::string& form_arg, const std::string& tensor_arg) {
  const RealForm f = parse_form(form_arg);
  const Tensor t = tensor_from_json(load_arg(tensor_arg));
  if (t.n() != f.n) throw Error("tensor frame dimension does not match the form");
  const BoostGenerators bg = boost_generators(restricted_roots(f, maximal_abelian(f)));
  const BoostWeightDecomp d = bw_decompose(t, bg);
  const SgResult sg = sg_property(d.support);
  json p;
  p["support"] = weights_json(d.support);
  p["strict"] = sg.strict;
  json lam = json::array();
  for (Eigen::Index i = 0; i < sg.lambda.size(); ++i) lam.push_back(sg.lambda[i]);
  p["lambda"] = lam;
  return emit("sg", "ok", p, 0);
}

int do_orbit(const std::string& rep_arg, const std::string& form_arg, int valence,
             const std::string& vector_arg, long seed, long max_iter) {
  RepAction rep;
  Vec v;
  if (form_arg == "sl2") {
    rep = sl2_adjoint_action();
    v = rep.from_matrix(matrix_from_json(load_arg(vector_arg)));
  } else if (rep_arg == "adjoint") {
    rep = adjoint_action(parse_form(form_arg));
    v = rep.from_matrix(matrix_from_json(load_arg(vector_arg)));
  } else if (rep_arg == "tensor") {
    rep = tensor_action(parse_form(form_arg), valence);
    v = rep.from_tensor(tensor_from_json(load_arg(vector_arg)));
  } else {
    throw Error("unknown representation '" + rep_arg + "' (adjoint or tensor)");
  }
  FlowConfig cfg;
  cfg.seed = static_cast<unsigned>(seed);
  cfg.max_iter = max_iter;
  const OrbitReport r = kempf_ness_flow(v, rep, cfg);
  const json p = json::parse(orbit_report_to_json(r));
  const bool undecided = r.verdict == OrbitReport::Verdict::Undecided;
  return emit("orbit", undecided ? "undecided" : "ok", p, seed);
}

int do_lorentz_canon(const std::string& form_arg, const std::string& vector_arg) {
  const RealForm f = parse_form(form_arg);
  const Mat x = matrix_from_json(load_arg(vector_arg));
  const CanonicalForm c = lorentz_canonical_form(x, f);
  json p;
  p["rotation_params"] = c.rotation_params;
  p["kernel_vector_norms"] = c.kernel_vector_norms;
  p["canonical_matrix"] = matrix_json(c.residual);
  p["conjugator"] = matrix_json(c.conjugator);
  return emit("lorentz-canon", "ok", p, 0);
}

int do_walker(const std::string& metric_arg, const std::string& point_csv) {
  const MetricFile mf = metric_from_json(load_arg(metric_arg));
  if (mf.kind != "walker" || !mf.walker)
    throw Error("the walker verb needs a metric file of kind \"walker\"");
  Vec point;
  if (!point_csv.empty()) point = parse_point(point_csv);
  const WalkerClass cls = walker_classify(*mf.walker, point);
  const WalkerCurvature wc = walker_curvature(*mf.walker);

  json p;
  p["tag"] = cls.tag;
  p["coordinate_tag"] = cls.coordinate_tag;
  p["closed"] = cls.closed;
  p["pattern"] = {{"negative_sum", cls.has_negative_sum},
                  {"balanced_positive", cls.has_balanced_positive},
                  {"balanced_negative", cls.has_balanced_negative},
                  {"zero_weight", cls.has_zero_weight}};
  p["support"] = weights_json(walker_boost_weights(wc));
  json lam = json::array();
  for (Eigen::Index i = 0; i < cls.sg.lambda.size(); ++i) lam.push_back(cls.sg.lambda[i]);
  p["sg"] = {{"strict", cls.sg.strict}, {"lambda", lam}};
  p["flow"] = json::parse(orbit_report_to_json(cls.flow));
  p["flow_agrees"] = cls.flow_agrees;
  json pt = json::array();
  for (Eigen::Index i = 0; i < cls.point.size(); ++i) pt.push_back(cls.point[i]);
  p["point"] = pt;
  return emit("walker", "ok", p, 0);
}

json curvature_payload(const CurvatureData& c, bool with_span) {
  json p;
  switch (c.frame_tag) {
    case CurvatureData::Frame::Coordinate: p["frame"] = "coordinate"; break;
    case CurvatureData::Frame::NullCoframe: p["frame"] = "null-coframe"; break;
    case CurvatureData::Frame::LeftInvariant: p["frame"] = "left-invariant"; break;
  }
  json pt = json::array();
  for (Eigen::Index i = 0; i < c.point.size(); ++i) pt.push_back(c.point[i]);
  p["point"] = pt;
  p["metric"] = matrix_json(c.metric);
  p["ricci"] = matrix_json(c.ricci);
  p["ricci_max"] = c.ricci.cwiseAbs().maxCoeff();
  p["scalar"] = c.scalar;
  p["riemann_norm"] = c.riemann.norm();
  if (with_span) p["span_dim"] = curvature_span_dim(c);
  return p;
}

int do_curvature(const std::string& metric_arg, const std::string& point_csv) {
  const MetricFile mf = metric_from_json(load_arg(metric_arg));
  if (mf.kind == "frame") {
    const FrameCurvature fc = lie_group_curvature(*mf.frame);
    json p = curvature_payload(fc.numeric(), true);
    const auto c = fc.einstein_constant();
    if (c) p["einstein_constant"] = rational_to_string(*c);
    return emit("curvature", "ok", p, 0);
  }
  if (mf.kind == "walker") {
    const WalkerCurvature wc = walker_curvature(*mf.walker);
    Vec point = point_csv.empty() ? (Vec(4) << 0.3, 0.5, 0.7, 0.9).finished()
                                  : parse_point(point_csv);
    json p = curvature_payload(wc.at(point), false);
    p["support"] = weights_json(walker_boost_weights(wc));
    return emit("curvature", "ok", p, 0);
  }
  if (!mf.coord) throw Error("metric file carries no evaluator");
  if (point_csv.empty()) throw Error("coordinate metrics need --point");
  const CurvatureData c = coord_curvature(*mf.coord, parse_point(point_csv));
  return emit("curvature", "ok", curvature_payload(c, true), 0);
}

int do_g2(bool wick, const std::string& point_csv) {
  const CoordMetric m = g2_metric(wick);
  Vec point(7);
  if (point_csv.empty())
    point << 2.0, 0.3, 0.7, 0.45, 0.2, 0.6, 0.15;
  else
    point = parse_point(point_csv);
  const CurvatureData c = coord_curvature(m, point);
  json p = curvature_payload(c, true);
  const auto sig = form_signature(c.metric);
  p["signature"] = {sig.first, sig.second};
  p["wick"] = wick;
  return emit("g2", "ok", p, 0);
}

int do_hermitian(const std::string& triple_arg, int valence, long seed) {
  const CompatibleTriple t = triple_from_json(load_arg(triple_arg));
  const HermitianReport r = check_compatible_hermitian(t, valence, static_cast<unsigned>(seed));
  json p;
  p["ok"] = r.ok;
  p["valence"] = valence;
  if (!r.violation.empty()) p["violation"] = r.violation;
  return emit("hermitian-check", r.ok ? "ok" : "error", p, seed);
}

int do_suite(const std::string& name, long seed) {
  const SuiteResult r = run_suite(name, static_cast<unsigned>(seed));
  json items = json::array();
  std::vector<SuiteItem> sorted = r.items;
  std::sort(sorted.begin(), sorted.end(),
            [](const SuiteItem& a, const SuiteItem& b) { return a.id < b.id; });
  for (const SuiteItem& it : sorted)
    items.push_back({{"id", it.id}, {"pass", it.pass}, {"detail", it.detail}});
  json p;
  p["name"] = r.name;
  p["passed"] = r.passed();
  p["items"] = items;
  return emit("suite", "ok", p, seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wickgit: real-form, orbit and curvature analyses with JSON reports"};
  app.require_subcommand(1);

  std::string form, triple, tensor, vector_arg, metric, point_csv, rep = "adjoint";
  std::string suite_name;
  int valence = 1;
  long seed = 0;
  long max_iter = 100000;
  bool wick = false;

  auto* lie = app.add_subcommand("lie-info", "Dimensions and Killing signature of a real form");
  lie->add_option("--form", form, "oPQ shorthand or JSON")->required();

  auto* tc = app.add_subcommand("triple-check", "Compatibility report for a standard triple");
  tc->add_option("--triple", triple, "JSON {p1,q1,p2,q2} or file")->required();

  auto* rt = app.add_subcommand("roots", "Restricted root system of a real form");
  rt->add_option("--form", form, "oPQ shorthand or JSON")->required();

  auto* bw = app.add_subcommand("bw", "Boost-weight decomposition of a tensor");
  bw->add_option("--form", form, "oPQ shorthand or JSON")->required();
  bw->add_option("--tensor", tensor, "tensor JSON or file")->required();

  auto* sg = app.add_subcommand("sg", "Weight-support cone feasibility for a tensor");
  sg->add_option("--form", form, "oPQ shorthand or JSON")->required();
  sg->add_option("--tensor", tensor, "tensor JSON or file")->required();

  auto* orb = app.add_subcommand("orbit", "Norm-minimizing flow verdict for a vector");
  orb->add_option("--rep", rep, "adjoint (default) or tensor");
  orb->add_option("--form", form, "oPQ shorthand, sl2, or JSON")->required();
  orb->add_option("--valence", valence, "tensor valence (tensor rep only)");
  orb->add_option("--vector", vector_arg, "matrix or tensor JSON or file")->required();
  orb->add_option("--seed", seed, "echoed into the report");
  orb->add_option("--max-iter", max_iter, "flow iteration cap");

  auto* lc = app.add_subcommand("lorentz-canon", "Canonical form of a minimal Lorentz element");
  lc->add_option("--form", form, "oPQ shorthand (q = 1) or JSON")->required();
  lc->add_option("--vector", vector_arg, "matrix JSON or file")->required();

  auto* wk = app.add_subcommand("walker", "Weight-support type of a Walker metric");
  wk->add_option("--metric", metric, "metric JSON of kind walker")->required();
  wk->add_option("--point", point_csv, "u,v,U,V evaluation point for the flow");

  auto* cv = app.add_subcommand("curvature", "Connection and curvature of a metric");
  cv->add_option("--metric", metric, "metric JSON or file")->required();
  cv->add_option("--point", point_csv, "comma-separated evaluation point");

  auto* g2c = app.add_subcommand("g2", "Curvature summary of the cohomogeneity-one metric");
  g2c->add_flag("--wick", wick, "use the neutral-signature partner");
  g2c->add_option("--point", point_csv, "7 coordinates, r first (default r = 2 sample)");

  auto* hc = app.add_subcommand("hermitian-check", "Invariant Hermitian product on tensors");
  hc->add_option("--triple", triple, "JSON {p1,q1,p2,q2} or file")->required();
  hc->add_option("--valence", valence, "tensor valence (default 1)");
  hc->add_option("--seed", seed, "sampling seed");

  auto* su = app.add_subcommand("suite", "Run a named verification suite");
  su->add_option("name", suite_name, "walker-table | einstein | g2 | lorentz | sl2-orbits | triples")
      ->required();
  su->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json p{{"code", "usage"}, {"message", e.what()}};
    std::cout << report_envelope("(parse)", "error", p.dump(), 0);
    return 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (app.got_subcommand(lie)) return do_lie_info(form);
    if (app.got_subcommand(tc)) return do_triple_check(triple);
    if (app.got_subcommand(rt)) return do_roots(form);
    if (app.got_subcommand(bw)) return do_bw(form, tensor);
    if (app.got_subcommand(sg)) return do_sg(form, tensor);
    if (app.got_subcommand(orb))
      return do_orbit(rep, form, valence, vector_arg, seed, max_iter);
    if (app.got_subcommand(lc)) return do_lorentz_canon(form, vector_arg);
    if (app.got_subcommand(wk)) return do_walker(metric, point_csv);
    if (app.got_subcommand(cv)) return do_curvature(metric, point_csv);
    if (app.got_subcommand(g2c)) return do_g2(wick, point_csv);
    if (app.got_subcommand(hc)) return do_hermitian(triple, valence, seed);
    if (app.got_subcommand(su)) return do_suite(suite_name, seed);
    throw Error("unrecognized verb");
  } catch (const Error& e) {
    json p{{"code", "domain_error"}, {"message", e.what()}};
    std::cout << report_envelope(verb, "error", p.dump(), seed);
    return 2;
  } catch (const std::exception& e) {
    json p{{"code", "internal_error"}, {"message", e.what()}};
    std::cout << report_envelope(verb, "error", p.dump(), seed);
    return 2;
  }
}
