#include <benchmark/benchmark.h>

#include "wickgit/geometry.hpp"
#include "wickgit/io.hpp"
#include "wickgit/orbits.hpp"
#include "wickgit/rootsys.hpp"

using namespace wickgit;

static void BM_KempfNessFlowSl2(benchmark::State& state) {
  const RepAction rep = sl2_adjoint_action();
  Mat g(2, 2), x(2, 2);
  g << 1, 4, 0, 1;
  x << 0.5, 0, 0, -0.5;
  const Vec v = rep.from_matrix(g * x * g.inverse());
  for (auto _ : state) {
    const OrbitReport r = kempf_ness_flow(v, rep);
    benchmark::DoNotOptimize(r.final_norm);
  }
}
BENCHMARK(BM_KempfNessFlowSl2);

static void BM_WalkerCurvatureExact(benchmark::State& state) {
  const WalkerSpec w = WalkerSpec::parse("2*v^2 + 3*V^2", "5*v^2 + 7*V^2", "0");
  for (auto _ : state) {
    const WalkerCurvature wc = walker_curvature(w);
    benchmark::DoNotOptimize(wc.riemann.size());
  }
}
BENCHMARK(BM_WalkerCurvatureExact);

static void BM_TensorFlowNeutral(benchmark::State& state) {
  const WalkerCurvature wc = walker_curvature(WalkerSpec::parse("2*v^2", "3*V^2", "0"));
  const Vec p = (Vec(4) << 0.3, 0.5, 0.7, 0.9).finished();
  const CurvatureData cd = wc.at(p);
  const double s2 = 1.0 / std::sqrt(2.0);
  Mat n(4, 4);
  n.col(0) = (Vec(4) << s2, -s2, 0, 0).finished();
  n.col(1) = (Vec(4) << 0, 0, s2, -s2).finished();
  n.col(2) = (Vec(4) << s2, s2, 0, 0).finished();
  n.col(3) = (Vec(4) << 0, 0, s2, s2).finished();
  const Vec v = cd.riemann.in_frame(n).data();
  const RepAction rep = tensor_action(build_o_pq(2, 2), 4);
  for (auto _ : state) {
    const OrbitReport r = kempf_ness_flow(v, rep);
    benchmark::DoNotOptimize(r.final_norm);
  }
}
BENCHMARK(BM_TensorFlowNeutral);

static void BM_BoostWeightDecompose(benchmark::State& state) {
  const RealForm f = build_o_pq(2, 2);
  const BoostGenerators bg = boost_generators(restricted_roots(f, maximal_abelian(f)));
  Tensor t(4, 4);
  double fill = 0.1;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    t.data()[i] = fill;
    fill = 0.8 * fill + 0.05;
  }
  for (auto _ : state) {
    const BoostWeightDecomp d = bw_decompose(t, bg);
    benchmark::DoNotOptimize(d.support.size());
  }
}
BENCHMARK(BM_BoostWeightDecompose);

static void BM_SkewNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Mat m = Mat::Random(n, n);
  m = 0.5 * (m - m.transpose()).eval();
  for (auto _ : state) {
    const SkewNormalForm nf = skew_normal_form(m);
    benchmark::DoNotOptimize(nf.params.size());
  }
}
BENCHMARK(BM_SkewNormalForm)->Arg(6)->Arg(12)->Arg(24);

static void BM_G2RicciPoint(benchmark::State& state) {
  const CoordMetric m = g2_metric(false);
  Vec p(7);
  p << 2.0, 0.3, 0.7, 0.45, 0.2, 0.6, 0.15;
  for (auto _ : state) {
    const CurvatureData c = coord_curvature(m, p);
    benchmark::DoNotOptimize(c.scalar);
  }
}
BENCHMARK(BM_G2RicciPoint)->Unit(benchmark::kMillisecond);

static void BM_LorentzCanonicalForm(benchmark::State& state) {
  const RealForm f = build_o_pq(5, 1);
  Mat blk = Mat::Zero(5, 5);
  blk(0, 1) = 1.3; blk(1, 0) = -1.3;
  blk(2, 3) = 0.4; blk(3, 2) = -0.4;
  const Mat q = random_orthogonal(5, 3);
  const Mat a = q * blk * q.transpose();
  Vec w = q.col(4);
  Mat x = Mat::Zero(6, 6);
  x.topLeftCorner(5, 5) = a;
  x.topRightCorner(5, 1) = w;
  x.bottomLeftCorner(1, 5) = w.transpose();
  for (auto _ : state) {
    const CanonicalForm c = lorentz_canonical_form(x, f);
    benchmark::DoNotOptimize(c.rotation_params.size());
  }
}
BENCHMARK(BM_LorentzCanonicalForm);

BENCHMARK_MAIN();
