#include "wickgit/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wickgit {

using nlohmann::json;

namespace {

json parse_checked(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << "malformed JSON at byte " << e.byte << ": " << e.what();
    throw Error(os.str());
  }
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing field '") + key + "'");
  return *it;
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw Error(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double require_number(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) throw Error(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) throw Error(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Mat matrix_from(const json& v, const char* what) {
  if (!v.is_array() || v.empty()) throw Error(std::string(what) + " must be a non-empty array of rows");
  const int rows = static_cast<int>(v.size());
  int cols = -1;
  Mat m;
  for (int i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array()) throw Error(std::string(what) + " rows must be arrays");
    if (cols < 0) {
      cols = static_cast<int>(row.size());
      if (cols == 0) throw Error(std::string(what) + " rows must be non-empty");
      m = Mat(rows, cols);
    }
    if (static_cast<int>(row.size()) != cols) throw Error(std::string(what) + " rows have unequal lengths");
    for (int jcol = 0; jcol < cols; ++jcol) {
      if (!row[jcol].is_number()) throw Error(std::string(what) + " entries must be numbers");
      m(i, jcol) = row[jcol].get<double>();
    }
  }
  return m;
}

Rational rational_from(const json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(std::string(what) + " must be an integer or a rational string like \"1/2\"");
}

json number_array(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json complex_pairs(const std::vector<Complex>& cs) {
  json a = json::array();
  for (const Complex& c : cs) a.push_back(json::array({c.real(), c.imag()}));
  return a;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RealForm real_form_from_json(const std::string& text) {
  const json j = parse_checked(text);
  if (!j.is_object()) throw Error("real form document must be a JSON object");
  const int n = require_int(j, "n");
  const int p = require_int(j, "p");
  const int q = require_int(j, "q");
  if (p < 0 || q < 0 || p + q != n) throw Error("real form needs p >= 0, q >= 0, p + q = n");
  RealForm f = build_o_pq(p, q);
  auto it = j.find("embedding");
  if (it == j.end() || (it->is_string() && it->get<std::string>() == "standard")) return f;
  if (it->is_object()) {
    const Mat g = matrix_from(require(*it, "conjugator"), "embedding conjugator");
    if (g.rows() != n || g.cols() != n) throw Error("embedding conjugator must be n x n");
    return conjugated_form(f, g.cast<Complex>());
  }
  throw Error("embedding must be \"standard\" or an object with a conjugator");
}

CompatibleTriple triple_from_json(const std::string& text) {
  const json j = parse_checked(text);
  if (!j.is_object()) throw Error("triple document must be a JSON object");
  const int p1 = require_int(j, "p1"), q1 = require_int(j, "q1");
  const int p2 = require_int(j, "p2"), q2 = require_int(j, "q2");
  if (p1 + q1 != p2 + q2) throw Error("triple forms must act on the same ambient dimension");
  return make_standard_triple(p1, q1, p2, q2);
}

Tensor tensor_from_json(const std::string& text) {
  const json j = parse_checked(text);
  if (!j.is_object()) throw Error("tensor document must be a JSON object");
  const int n = require_int(j, "n");
  const int valence = require_int(j, "valence");
  if (n < 1 || valence < 0) throw Error("tensor needs n >= 1 and valence >= 0");
  Tensor t(n, valence);
  auto it = j.find("components");
  if (it == j.end()) return t;
  if (!it->is_array()) throw Error("field 'components' must be an array");
  std::set<std::vector<int>> seen;
  for (const json& comp : *it) {
    if (!comp.is_object()) throw Error("tensor components must be objects");
    const json& idx = require(comp, "idx");
    if (!idx.is_array() || static_cast<int>(idx.size()) != valence)
      throw Error("component idx must list one 1-based index per slot");
    std::vector<int> iv(valence);
    for (int s = 0; s < valence; ++s) {
      if (!idx[s].is_number_integer()) throw Error("component indices must be integers");
      const int a = idx[s].get<int>();
      if (a < 1 || a > n) throw Error("component index out of range (indices are 1-based)");
      iv[s] = a - 1;
    }
    if (!seen.insert(iv).second) throw Error("duplicate component index in tensor document");
    const double re = require_number(comp, "re");
    if (comp.contains("im") && comp["im"].get<double>() != 0.0)
      throw Error("tensor components must be real (nonzero \"im\" is not supported)");
    t.at(iv) = re;
  }
  return t;
}

Mat matrix_from_json(const std::string& text) {
  return matrix_from(parse_checked(text), "matrix");
}

MetricFile metric_from_json(const std::string& text) {
  const json j = parse_checked(text);
  if (!j.is_object()) throw Error("metric document must be a JSON object");
  MetricFile out;
  out.kind = require_string(j, "kind");
  if (out.kind == "frame") {
    FrameMetric m;
    m.dim = require_int(j, "dim");
    if (m.dim < 1) throw Error("frame metric needs dim >= 1");
    m.c.assign(static_cast<size_t>(m.dim) * m.dim * m.dim, Rational(0));
    const json& cs = require(j, "c");
    if (!cs.is_array()) throw Error("field 'c' must be an array of structure constants");
    for (const json& e : cs) {
      const int k = require_int(e, "k"), i = require_int(e, "i"), jj = require_int(e, "j");
      if (k < 1 || k > m.dim || i < 1 || i > m.dim || jj < 1 || jj > m.dim)
        throw Error("structure constant index out of range (indices are 1-based)");
      const Rational value = rational_from(require(e, "value"), "structure constant value");
      if (i == jj && value != 0) throw Error("structure constants c^k_ii must vanish");
      const Rational& existing = m.structure(k - 1, i - 1, jj - 1);
      if (existing != 0 && existing != value)
        throw Error("conflicting duplicate structure constant entries");
      m.set_structure(k - 1, i - 1, jj - 1, value);
    }
    const json& eta = require(j, "eta");
    if (!eta.is_array() || static_cast<int>(eta.size()) != m.dim)
      throw Error("field 'eta' must be a dim x dim array");
    m.eta = RatMat(m.dim, m.dim);
    for (int r = 0; r < m.dim; ++r) {
      if (!eta[r].is_array() || static_cast<int>(eta[r].size()) != m.dim)
        throw Error("field 'eta' must be a dim x dim array");
      for (int cidx = 0; cidx < m.dim; ++cidx)
        m.eta(r, cidx) = rational_from(eta[r][cidx], "eta entry");
    }
    m.validate();
    out.frame = m;
  } else if (out.kind == "walker") {
    out.walker = WalkerSpec::parse(require_string(j, "A"), require_string(j, "B"),
                                   require_string(j, "C"));
  } else if (out.kind == "g2") {
    out.coord = g2_metric(false);
  } else if (out.kind == "g2split") {
    out.coord = g2_metric(true);
  } else if (out.kind == "coord-builtin") {
    const std::string name = require_string(j, "name");
    if (name == "flat") {
      const json& dj = require(j, "diag");
      if (!dj.is_array() || dj.empty()) throw Error("flat metric needs a non-empty 'diag' array");
      Vec d(dj.size());
      for (size_t i = 0; i < dj.size(); ++i) {
        if (!dj[i].is_number()) throw Error("'diag' entries must be numbers");
        d[static_cast<Eigen::Index>(i)] = dj[i].get<double>();
      }
      out.coord = flat_metric(d);
    } else if (name == "sphere") {
      out.coord = sphere_metric();
    } else {
      throw Error("unknown builtin coordinate metric: " + name);
    }
  } else {
    throw Error("unknown metric kind: " + out.kind);
  }
  return out;
}

std::string tensor_to_json(const Tensor& t) {
  json j;
  j["n"] = t.n();
  j["valence"] = t.valence();
  json comps = json::array();
  for (Eigen::Index f = 0; f < t.size(); ++f) {
    const double v = t.data()[f];
    if (v == 0.0) continue;
    const std::vector<int> idx = t.unflat(f);
    json c;
    json ia = json::array();
    for (int a : idx) ia.push_back(a + 1);
    c["idx"] = ia;
    c["re"] = v;
    c["im"] = 0.0;
    comps.push_back(c);
  }
  j["components"] = comps;
  return j.dump(2);
}

std::string matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index jcol = 0; jcol < m.cols(); ++jcol) row.push_back(m(i, jcol));
    rows.push_back(row);
  }
  return rows.dump(2);
}

std::string orbit_report_to_json(const OrbitReport& r) {
  json j;
  j["verdict"] = verdict_name(r.verdict);
  j["certificate"] = r.certificate;
  j["gradient_norm"] = r.final_gradient_norm;
  j["final_norm"] = r.final_norm;
  j["iterations"] = r.iterations;
  j["displacement"] = r.displacement;
  j["norm_trace"] = r.norm_trace;
  if (r.orbit_dim_start >= 0) j["orbit_dim_start"] = r.orbit_dim_start;
  if (r.orbit_dim_end >= 0) j["orbit_dim_end"] = r.orbit_dim_end;
  if (!r.char_poly_start.empty()) j["invariants_start"] = complex_pairs(r.char_poly_start);
  if (!r.char_poly_end.empty()) j["invariants_end"] = complex_pairs(r.char_poly_end);
  if (r.minimal_vector) j["minimal_vector"] = number_array(*r.minimal_vector);
  if (r.limit_vector) j["limit_vector"] = number_array(*r.limit_vector);
  return j.dump(2);
}

std::string report_envelope(const std::string& verb, const std::string& status,
                            const std::string& payload_json, long seed) {
  json j;
  j["verb"] = verb;
  j["status"] = status;
  j["payload"] = parse_checked(payload_json);
  j["seed"] = seed;
  j["versions"] = {{"schema", kReportSchema}, {"tool", kToolVersion}};
  return j.dump(2) + "\n";
}

}  // namespace wickgit
