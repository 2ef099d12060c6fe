#include "wickgit/suites.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "wickgit/orbits.hpp"
#include "wickgit/realforms.hpp"

namespace wickgit {
namespace {

std::mt19937_64 rng_for(unsigned seed, unsigned salt) {
  return std::mt19937_64(0x9E3779B97F4A7C15ULL * (seed + 1) + salt);
}

double unif(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

std::string sci(double v) {
  std::ostringstream o;
  o << std::scientific << std::setprecision(2) << v;
  return o.str();
}

void add(SuiteResult& r, const std::string& id, bool pass, const std::string& detail) {
  r.items.push_back(SuiteItem{id, pass, detail});
}

// ---------------------------------------------------------------------------
// walker-table
// ---------------------------------------------------------------------------

SuiteResult walker_suite(unsigned) {
  SuiteResult out{"walker-table", {}};

  struct Row {
    const char* id;
    const char* a;
    const char* b;
    const char* tag;
    bool closed;
  };
  // One metric per type row; coefficients are arbitrary nonzero rationals.
  const Row rows[] = {
      {"ds1", "V", "2*v^4", "W1", false},
      {"ds2", "2*v^2 + 3*V^2", "5*v^2 + 7*V^2", "W2", true},
      {"ds3", "2*v^2 + 3*V^2", "5*V^2", "W3", false},
      {"ds4", "2*v^2", "3*V^2", "W4", true},
  };

  for (const Row& row : rows) {
    const WalkerSpec w = WalkerSpec::parse(row.a, row.b, "0");
    const WalkerClass cls = walker_classify(w);

    {
      const bool ok = cls.tag == row.tag && cls.closed == row.closed;
      std::ostringstream d;
      d << "tag=" << cls.tag << " (coordinate coframe " << cls.coordinate_tag
        << "), closed=" << (cls.closed ? "yes" : "no") << ", expected " << row.tag << "/"
        << (row.closed ? "yes" : "no");
      add(out, std::string(row.id) + "-type", ok, d.str());
    }

    {
      // The flow must land on the table verdict; for W3 an honest undecided
      // is acceptable as long as the flow never claims the orbit closed.
      bool ok;
      if (std::string(row.tag) == "W3")
        ok = cls.flow.verdict != OrbitReport::Verdict::Closed;
      else
        ok = cls.flow_agrees;
      std::ostringstream d;
      d << "verdict=" << verdict_name(cls.flow.verdict)
        << (cls.flow.certificate.empty() ? "" : " [" + cls.flow.certificate + "]")
        << ", |grad|=" << sci(cls.flow.final_gradient_norm)
        << ", iters=" << cls.flow.iterations;
      add(out, std::string(row.id) + "-flow", ok, d.str());
    }

    {
      // Strict feasibility of the support cone is necessary (not sufficient)
      // for a non-closed orbit, so it must fire exactly on the coordinate
      // rows W1 and W3.
      const bool expect = cls.coordinate_tag == "W1" || cls.coordinate_tag == "W3";
      std::ostringstream d;
      d << "strict=" << (cls.sg.strict ? "yes" : "no");
      if (cls.sg.lambda.size() == 2)
        d << ", lambda=(" << cls.sg.lambda[0] << ", " << cls.sg.lambda[1] << ")";
      add(out, std::string(row.id) + "-sg", cls.sg.strict == expect, d.str());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// einstein
// ---------------------------------------------------------------------------

SuiteResult einstein_suite(unsigned) {
  SuiteResult out{"einstein", {}};
  const Rational expected(1, 4);

  const FrameMetric compact = FrameMetric::su2_sum({Rational(1), Rational(1)});
  const FrameCurvature fc = lie_group_curvature(compact);
  const auto c1 = fc.einstein_constant();
  add(out, "compact-einstein", c1.has_value() && *c1 == expected,
      c1 ? "Ric = (" + rational_to_string(*c1) + ") h exactly" : "not Einstein");

  const FrameMetric wick = wick_rotate_frame_metric(compact);
  Mat eta(wick.dim, wick.dim);
  for (int i = 0; i < wick.dim; ++i)
    for (int j = 0; j < wick.dim; ++j) eta(i, j) = to_double(wick.eta(i, j));
  const auto sig = form_signature(eta);
  add(out, "wick-signature", sig == std::make_pair(4, 2),
      "signature (" + std::to_string(sig.first) + ", " + std::to_string(sig.second) + ")");

  const FrameCurvature wc = lie_group_curvature(wick);
  const auto c2 = wc.einstein_constant();
  add(out, "wick-einstein", c2.has_value() && *c2 == expected,
      c2 ? "Ric = (" + rational_to_string(*c2) + ") h exactly" : "not Einstein");
  return out;
}

// ---------------------------------------------------------------------------
// g2
// ---------------------------------------------------------------------------

SuiteResult g2_suite(unsigned seed) {
  SuiteResult out{"g2", {}};
  auto g = rng_for(seed, 11);

  const CoordMetric riem = g2_metric(false);
  const CoordMetric wick = g2_metric(true);

  double max_ric = 0.0, max_wick_ric = 0.0;
  bool sig_ok = true;
  std::pair<int, int> bad_sig{0, 0};
  for (int i = 0; i < 10; ++i) {
    Vec p(7);
    p[0] = unif(g, 1.5, 5.0);
    for (int k = 1; k < 7; ++k) p[k] = unif(g, -1.0, 1.0);

    const CurvatureData c = coord_curvature(riem, p);
    max_ric = std::max(max_ric, c.ricci.cwiseAbs().maxCoeff());

    const CurvatureData cw = coord_curvature(wick, p);
    max_wick_ric = std::max(max_wick_ric, cw.ricci.cwiseAbs().maxCoeff());
    const auto sig = form_signature(cw.metric);
    if (sig != std::make_pair(4, 3)) {
      sig_ok = false;
      bad_sig = sig;
    }
  }
  add(out, "ricci-flat", max_ric < 1e-6, "max |Ric| = " + sci(max_ric) + " over 10 points");
  add(out, "wick-ricci-flat", max_wick_ric < 1e-6,
      "max |Ric| = " + sci(max_wick_ric) + " over 10 points");
  add(out, "wick-signature", sig_ok,
      sig_ok ? "(4, 3) at all 10 points"
             : "found (" + std::to_string(bad_sig.first) + ", " + std::to_string(bad_sig.second) +
                   ")");

  Vec p2(7);
  p2 << 2.0, 0.3, 0.7, 0.45, 0.2, 0.6, 0.15;
  const int span = curvature_span_dim(coord_curvature(riem, p2));
  const int wspan = curvature_span_dim(coord_curvature(wick, p2));
  add(out, "span", span >= 1 && span <= 14,
      "curvature span dimension " + std::to_string(span) + " at r = 2");
  add(out, "wick-span", wspan >= 1 && wspan <= 14,
      "curvature span dimension " + std::to_string(wspan) + " at r = 2");

  const CoframeField su2 = su2_coframe();
  const CoframeField sl2 = sl2_wick_coframe();
  double worst_su2 = 0.0, worst_sl2 = 0.0;
  for (int i = 0; i < 50; ++i) {
    Vec p3(3);
    for (int k = 0; k < 3; ++k) p3[k] = unif(g, -1.0, 1.0);
    worst_su2 = std::max(worst_su2, maurer_cartan_residual(su2, p3));
    Vec p4(3);
    for (int k = 0; k < 3; ++k) p4[k] = unif(g, -1.0, 1.0);
    worst_sl2 = std::max(worst_sl2, maurer_cartan_residual(sl2, p4));
  }
  add(out, "mc-su2", worst_su2 <= 1e-10,
      "max residual " + sci(worst_su2) + " over 50 points, all three relations");
  add(out, "mc-sl2", worst_sl2 <= 1e-10,
      "max residual " + sci(worst_sl2) + " over 50 points, all three relations");
  return out;
}

// ---------------------------------------------------------------------------
// sl2-orbits
// ---------------------------------------------------------------------------

Mat sl2_elem(double a, double b, double c) {
  Mat x(2, 2);
  x << a, b, c, -a;
  return x;
}

// Traceless 2x2 matrix with a clean discriminant margin (far from the
// nilpotent cone), so the semisimple oracle is unambiguous.
Mat random_clean_sl2(std::mt19937_64& g) {
  for (;;) {
    const double a = unif(g, -2.0, 2.0);
    const double b = unif(g, -2.0, 2.0);
    const double c = unif(g, -2.0, 2.0);
    if (std::abs(a * a + b * c) > 1e-2) return sl2_elem(a, b, c);
  }
}

// Exactly nilpotent element: rotation + diagonal-boost conjugates of a
// strictly upper triangular matrix (both keep the discriminant at zero up to
// roundoff, and the construction knows the answer regardless).
Mat random_nilpotent_sl2(std::mt19937_64& g) {
  const double lam = unif(g, 0.2, 2.0);
  const double th = unif(g, 0.0, 6.28318530717958648);
  const double t = unif(g, -0.5, 0.5);
  Mat n0 = Mat::Zero(2, 2);
  n0(0, 1) = lam;
  Mat r(2, 2);
  r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = std::exp(t);
  d(1, 1) = std::exp(-t);
  const Mat s = r * d;
  Mat sinv = Mat::Zero(2, 2);
  sinv = d.inverse() * r.transpose();
  return s * n0 * sinv;
}

// Distance from w to the SO(2)-orbit of m under the adjoint action, by a
// coarse angular scan refined with golden sections.
double so2_orbit_distance(const RepAction& rep, const Vec& w, const Vec& m) {
  const Mat mm = rep.to_matrix(m);
  auto dist = [&](double th) {
    Mat r(2, 2);
    r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    return (w - rep.from_matrix(r * mm * r.transpose())).norm();
  };
  const int grid = 1024;
  double best = dist(0.0), best_th = 0.0;
  const double two_pi = 6.28318530717958648;
  for (int i = 1; i < grid; ++i) {
    const double th = two_pi * i / grid;
    const double v = dist(th);
    if (v < best) {
      best = v;
      best_th = th;
    }
  }
  double lo = best_th - two_pi / grid, hi = best_th + two_pi / grid;
  const double phi = 0.61803398874989485;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = dist(x1), f2 = dist(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = dist(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = dist(x2);
    }
  }
  return std::min(f1, f2);
}

SuiteResult sl2_suite(unsigned seed) {
  SuiteResult out{"sl2-orbits", {}};
  const RepAction rep = sl2_adjoint_action();
  RepAction compact = rep;
  compact.p_basis.clear();

  {
    const auto rc = sl2_real_orbit_count(sl2_elem(0, 1, -1));
    add(out, "count-rotation", rc.count == 2,
        "rotation generator splits into " + std::to_string(rc.count) + " real orbits");
    const auto bc = sl2_real_orbit_count(sl2_elem(1, 0, 0));
    add(out, "count-boost", bc.count == 1,
        "boost generator gives " + std::to_string(bc.count) + " real orbit");
  }

  {
    auto g = rng_for(seed, 21);
    int disagree = 0, undecided = 0;
    std::string first_bad;
    for (int i = 0; i < 500; ++i) {
      Mat x;
      bool expect_closed;
      if (i < 440) {
        x = random_clean_sl2(g);
        expect_closed = true;  // semisimple either way the discriminant signs
      } else if (i < 490) {
        x = random_nilpotent_sl2(g);
        expect_closed = false;  // nonzero nilpotent
      } else {
        // Semisimple but within a whisker of the nilpotent cone: the hard
        // region where an honest undecided is tolerated.
        do {
          x = random_nilpotent_sl2(g);
          x(0, 0) += unif(g, -1e-6, 1e-6);
          x(1, 1) = -x(0, 0);
          x(0, 1) += unif(g, -1e-6, 1e-6);
          x(1, 0) += unif(g, -1e-6, 1e-6);
        } while (std::abs(x(0, 0) * x(0, 0) + x(0, 1) * x(1, 0)) < 1e-9);
        expect_closed = true;
      }
      const OrbitReport r = kempf_ness_flow(rep.from_matrix(x), rep);
      if (r.verdict == OrbitReport::Verdict::Undecided) {
        ++undecided;
      } else if ((r.verdict == OrbitReport::Verdict::Closed) != expect_closed) {
        ++disagree;
        if (first_bad.empty()) {
          std::ostringstream d;
          d << "sample " << i << ": verdict " << verdict_name(r.verdict) << " vs oracle "
            << (expect_closed ? "Closed" : "NonClosed");
          first_bad = d.str();
        }
      }
    }
    std::ostringstream d;
    d << disagree << " disagreements, " << undecided << " undecided of 500";
    if (!first_bad.empty()) d << "; " << first_bad;
    add(out, "flow-oracle", disagree == 0 && undecided <= 10, d.str());
  }

  {
    auto g = rng_for(seed, 22);
    bool ok = true;
    double worst = 0.0;
    std::string why;
    for (int i = 0; i < 20; ++i) {
      const Mat x = random_clean_sl2(g);
      const Vec v = rep.from_matrix(x);
      Vec w;
      try {
        w = intersect_with_compact(v, rep, compact);
      } catch (const Error& e) {
        ok = false;
        why = e.what();
        break;
      }
      if (!is_minimal(w, rep)) {
        ok = false;
        why = "witness fails the gradient test";
        break;
      }
      const OrbitReport fr = kempf_ness_flow(v, rep);
      if (!fr.minimal_vector) {
        ok = false;
        why = "flow did not certify the orbit closed";
        break;
      }
      worst = std::max(worst, so2_orbit_distance(rep, w, *fr.minimal_vector));
    }
    if (ok && worst > 1e-8) {
      ok = false;
      why = "witness strays from the flowed orbit";
    }
    add(out, "witness-minimal", ok,
        ok ? "20 closed-orbit seeds; max distance to the flowed orbit " + sci(worst)
           : why + "; max distance " + sci(worst));
  }

  {
    auto g = rng_for(seed, 23);
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double b = unif(g, 0.5, 2.0);
      const Vec v = rep.from_matrix(sl2_elem(0, b, -b));
      const Vec w = intersect_with_compact(v, rep, compact);
      worst = std::max(worst, (w - v).norm());
      if ((w - v).norm() != 0.0) ok = false;
    }
    add(out, "witness-so2", ok,
        "rotation seeds returned " + std::string(ok ? "unchanged" : "moved") + ", max shift " +
            sci(worst));
  }
  return out;
}

// ---------------------------------------------------------------------------
// lorentz
// ---------------------------------------------------------------------------

// Random minimal element of o(d,1) in the adapted frame: x = [[A, w],[w^T, 0]]
// with A skew of prescribed even rank and A w = 0, so [x, theta x] = 0.
Mat random_lorentz_minimal(std::mt19937_64& g, int d, int rotations, bool zero_w) {
  Mat blk = Mat::Zero(d, d);
  for (int t = 0; t < rotations; ++t) {
    const double th = unif(g, 0.3, 2.5);
    blk(2 * t, 2 * t + 1) = th;
    blk(2 * t + 1, 2 * t) = -th;
  }
  const Mat q = random_orthogonal(d, static_cast<unsigned>(g()));
  Mat a = q * blk * q.transpose();
  a = 0.5 * (a - a.transpose().eval());
  Vec w = Vec::Zero(d);
  const int kdim = d - 2 * rotations;
  if (kdim > 0 && !zero_w) {
    Vec c = Vec::Zero(d);
    for (int j = 2 * rotations; j < d; ++j) c[j] = unif(g, -1.5, 1.5);
    w = q * c;
  }
  Mat x = Mat::Zero(d + 1, d + 1);
  x.topLeftCorner(d, d) = a;
  x.topRightCorner(d, 1) = w;
  x.bottomLeftCorner(1, d) = w.transpose();
  return x;
}

std::vector<double> canonical_record(const CanonicalForm& c, int max_rot) {
  std::vector<double> rec(static_cast<size_t>(max_rot) + 1, 0.0);
  for (size_t i = 0; i < c.rotation_params.size() && i < static_cast<size_t>(max_rot); ++i)
    rec[i] = c.rotation_params[i];
  double wnorm2 = 0.0;
  for (double v : c.kernel_vector_norms) wnorm2 += v * v;
  rec.back() = std::sqrt(wnorm2);
  return rec;
}

double record_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SuiteResult lorentz_suite(unsigned seed) {
  SuiteResult out{"lorentz", {}};

  for (int n = 3; n <= 6; ++n) {
    const int d = n - 1;
    const int max_rot = d / 2;
    const RealForm f = build_o_pq(d, 1);
    auto g = rng_for(seed, 30 + static_cast<unsigned>(n));

    std::vector<CanonicalForm> forms;
    std::vector<std::vector<double>> records;
    bool pairs_ok = true;
    double worst_pair = 0.0;
    std::string pair_why;

    for (int i = 0; i < 100; ++i) {
      const int rot = i % (max_rot + 1);
      const bool zero_w = (i % 7 == 0);
      const Mat x = random_lorentz_minimal(g, d, rot, zero_w);

      CanonicalForm c1;
      try {
        c1 = lorentz_canonical_form(x, f);
      } catch (const Error& e) {
        pairs_ok = false;
        pair_why = std::string("canonical form failed: ") + e.what();
        break;
      }

      // Conjugate by a random block rotation of the compact subgroup; the
      // canonical form must not move.
      Mat k = Mat::Identity(n, n);
      k.topLeftCorner(d, d) = random_special_orthogonal(d, static_cast<unsigned>(g()));
      const Mat x2 = k * x * k.transpose();
      CanonicalForm c2;
      try {
        c2 = lorentz_canonical_form(x2, f);
      } catch (const Error& e) {
        pairs_ok = false;
        pair_why = std::string("conjugated canonical form failed: ") + e.what();
        break;
      }

      double gap = record_gap(canonical_record(c1, max_rot), canonical_record(c2, max_rot));
      gap = std::max(gap, (c1.residual - c2.residual).cwiseAbs().maxCoeff());
      worst_pair = std::max(worst_pair, gap);
      if (gap > 1e-8) pairs_ok = false;

      forms.push_back(c1);
      records.push_back(canonical_record(c1, max_rot));
    }

    std::ostringstream dp;
    dp << "100 conjugate pairs, max canonical-form gap " << sci(worst_pair);
    if (!pair_why.empty()) dp << "; " << pair_why;
    add(out, "n" + std::to_string(n) + "-kpairs", pairs_ok, dp.str());

    // Distinct invariant records must give distinct canonical frames.
    bool sep_ok = pairs_ok && records.size() == 100;
    int separated = 0, distinct = 0;
    if (sep_ok) {
      for (size_t i = 0; i < records.size(); ++i)
        for (size_t j = i + 1; j < records.size(); ++j) {
          if (record_gap(records[i], records[j]) <= 1e-6) continue;
          ++distinct;
          const double frame_gap =
              (forms[i].residual - forms[j].residual).cwiseAbs().maxCoeff();
          if (frame_gap > 1e-8) ++separated;
        }
      sep_ok = separated == distinct && distinct > 0;
    }
    add(out, "n" + std::to_string(n) + "-separation", sep_ok,
        std::to_string(separated) + " of " + std::to_string(distinct) +
            " distinct-record pairs separated");
  }

  const SwappedBlockReport sw = swapped_block_example(1.0, 2.0, 2, 2);
  add(out, "swapped-block", sw.same_compact_orbit && !sw.same_kk_orbit,
      std::string("compact orbit ") + (sw.same_compact_orbit ? "same" : "distinct") +
          ", block-diagonal orbit " + (sw.same_kk_orbit ? "same" : "distinct"));
  return out;
}

// ---------------------------------------------------------------------------
// triples
// ---------------------------------------------------------------------------

SuiteResult triples_suite(unsigned seed) {
  SuiteResult out{"triples", {}};

  int total = 0, commute_fail = 0, sum_fail = 0;
  std::string first_bad;
  for (int n = 2; n <= 6; ++n)
    for (int p1 = 0; p1 <= n; ++p1)
      for (int p2 = 0; p2 <= n; ++p2) {
        const CompatibleTriple t = make_standard_triple(p1, n - p1, p2, n - p2);
        const TripleReport r = check_compatible_triple(t);
        ++total;
        if (!r.commutes) ++commute_fail;
        if (!r.direct_sum_ok) ++sum_fail;
        if ((!r.commutes || !r.direct_sum_ok) && first_bad.empty()) {
          std::ostringstream d;
          d << "(" << p1 << "," << (n - p1) << ") vs (" << p2 << "," << (n - p2) << ")";
          first_bad = d.str();
        }
      }
  add(out, "commute", commute_fail == 0,
      std::to_string(total - commute_fail) + " of " + std::to_string(total) +
          " standard triples have commuting conjugations" +
          (first_bad.empty() ? "" : "; first failure " + first_bad));
  add(out, "direct-sum", sum_fail == 0,
      std::to_string(total - sum_fail) + " of " + std::to_string(total) +
          " split as (W meet W~) + (W meet iW~) exactly");

  {
    // Simple noncompact pairs of non-isomorphic real forms with the same
    // complexification: both Cartan-part intersections stay nontrivial.
    const std::pair<std::pair<int, int>, std::pair<int, int>> pairs[] = {
        {{4, 1}, {3, 2}}, {{5, 1}, {4, 2}}, {{5, 1}, {3, 3}}, {{4, 2}, {3, 3}}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& pr : pairs) {
      const RealForm f1 = build_o_pq(pr.first.first, pr.first.second);
      const RealForm f2 = build_o_pq(pr.second.first, pr.second.second);
      const auto dims = intersect_cartan_parts(f1, f2);
      if (dims.first < 1 || dims.second < 1) ok = false;
      d << "(" << pr.first.first << "," << pr.first.second << ")&(" << pr.second.first << ","
        << pr.second.second << "): t meet " << dims.first << ", p meet " << dims.second << "  ";
    }
    add(out, "cartan-meets", ok, d.str());
  }

  {
    bool ok = true;
    int checked = 0;
    std::string bad;
    for (int n = 2; n <= 6; ++n)
      for (int p = 0; p <= n; ++p) {
        const int q = n - p;
        const RealForm f = build_o_pq(p, q);
        const auto sig = killing_theta_signature(f);
        const int expect_t = p * (p - 1) / 2 + q * (q - 1) / 2;
        const int expect_p = p * q;
        ++checked;
        if (sig != std::make_pair(expect_t, expect_p)) {
          ok = false;
          if (bad.empty())
            bad = "o(" + std::to_string(p) + "," + std::to_string(q) + ") gave (" +
                  std::to_string(sig.first) + "," + std::to_string(sig.second) + ")";
        }
      }
    add(out, "killing-signature", ok,
        std::to_string(checked) + " forms match (p(p-1)/2 + q(q-1)/2, pq) exactly" +
            (bad.empty() ? "" : "; " + bad));
  }

  {
    bool ok = true;
    int checked = 0;
    std::string bad;
    for (int n = 2; n <= 6 && ok; ++n)
      for (int p1 = 0; p1 <= n && ok; ++p1)
        for (int p2 = 0; p2 <= n && ok; ++p2)
          for (int val = 1; val <= 2; ++val) {
            const CompatibleTriple t = make_standard_triple(p1, n - p1, p2, n - p2);
            const HermitianReport hr = check_compatible_hermitian(t, val, seed);
            ++checked;
            if (!hr.ok) {
              ok = false;
              bad = hr.violation;
              break;
            }
          }
    add(out, "hermitian", ok,
        std::to_string(checked) + " (triple, valence) cases invariant and real-valued" +
            (bad.empty() ? "" : "; " + bad));
  }
  return out;
}

}  // namespace

bool SuiteResult::passed() const {
  if (items.empty()) return false;
  for (const SuiteItem& it : items)
    if (!it.pass) return false;
  return true;
}

std::vector<std::string> suite_names() {
  return {"walker-table", "einstein", "g2", "lorentz", "sl2-orbits", "triples"};
}

SuiteResult run_suite(const std::string& name, unsigned seed) {
  if (name == "walker-table") return walker_suite(seed);
  if (name == "einstein") return einstein_suite(seed);
  if (name == "g2") return g2_suite(seed);
  if (name == "lorentz") return lorentz_suite(seed);
  if (name == "sl2-orbits") return sl2_suite(seed);
  if (name == "triples") return triples_suite(seed);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace wickgit
