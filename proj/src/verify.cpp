#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include "dicut/blowup.hpp"
#include "dicut/error.hpp"
#include "dicut/harness.hpp"
#include "dicut/smoothing.hpp"
#include "dicut/snapshot.hpp"
#include "dicut/threads.hpp"
#include "random_objects.hpp"

namespace dicut {

namespace {

using nlohmann::json;
using detail::random_graph;
using detail::random_simplex_array;
using detail::random_simplex_matrix;
using detail::uniform_int;

constexpr double kExact = 1e-12;
constexpr double kWinBound = 17.0 * 624.0;
// Desk-scale multiplier for the pointwise suite at n = 1e4, m = 5e4,
// epsilon = 0.25: every layer samples with p = 1/4, and p = 1/2 after doubling.
constexpr double kPointwiseScale = 5e-15;

template <typename T>
T or_default(T v, T fallback) {
  return v == T{} ? fallback : v;
}

double chi2_upper_tail(double x, double dof) {
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, x));
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t h = xs.size() / 2;
  return xs.size() % 2 ? xs[h] : 0.5 * (xs[h - 1] + xs[h]);
}

Multigraph stream_graph(const Multigraph& g, EdgeStream& s) {
  s.n = g.vertex_count();
  s.edges.clear();
  for (const auto& e : g.edges()) s.edges.push_back({e.from, e.to});
  return g;
}

// ---------------------------------------------------------------------------

json smoothing_sum(const LemmaConfig& c) {
  const int trials = or_default(c.trials, 200);
  Rng rng(derive_seed(c.seed, {1}));
  double drift = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int l = uniform_int(rng, 3, 16);
    const int w = std::min(uniform_int(rng, 1, 5), l - 1);
    const Matrix m = random_simplex_matrix(l, rng);
    drift = std::max(drift, std::abs(smooth_matrix(m, w).sum() - 1.0));
  }
  return {{"pass", drift <= kExact}, {"trials", trials}, {"max_drift", drift}, {"tolerance", kExact}};
}

json projection(const LemmaConfig& c) {
  const int trials = or_default(c.trials, 100);
  Rng rng(derive_seed(c.seed, {2}));
  double diff = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int w = uniform_int(rng, 1, 3);
    const int k = uniform_int(rng, w + 1, 10);
    const int l = uniform_int(rng, w + 1, 10);
    const Array4 a = random_simplex_array(k, l, rng);
    const Matrix lhs = project(smooth_array(a, w));
    const Matrix rhs = smooth_matrix(project(a), w);
    diff = std::max(diff, max_abs_difference(lhs.data(), rhs.data()));
  }
  return {{"pass", diff <= kExact}, {"trials", trials}, {"max_abs_difference", diff}, {"tolerance", kExact}};
}

// Window facts over every index pair of every box with k, l <= max_len.
json window_facts(int max_len, int max_w) {
  bool sizes = true, symmetry = true, counting = true, triangle = true, size_diff = true;
  long long configs = 0;
  auto in_win = [](const Index4& x, const Index4& y, int r) {
    for (int d = 0; d < 4; ++d)
      if (std::abs(x[d] - y[d]) > r) return false;
    return true;
  };
  for (int len = 1; len <= max_len; ++len)
    for (int w = 0; w <= max_w && w < len; ++w)
      for (int w2 = w; w2 <= max_w + 1; ++w2)
        for (int i = 1; i <= len; ++i) {
          const auto inner = window_range(w, len, i);
          const auto outer = window_range(w2, len, i);
          if (outer.size() - inner.size() > 2 * (w2 - w)) size_diff = false;
        }
  for (int k = 1; k <= max_len; ++k)
    for (int l = 1; l <= max_len; ++l)
      for (int w = 0; w <= max_w && w < std::min(k, l); ++w) {
        ++configs;
        std::vector<Index4> box;
        for (int a = 1; a <= k; ++a)
          for (int b = 1; b <= k; ++b)
            for (int i = 1; i <= l; ++i)
              for (int j = 1; j <= l; ++j) box.push_back({a, b, i, j});
        const double lo = std::pow(w + 1, 4);
        const double hi = std::pow(2 * w + 1, 4);
        for (const auto& x : box) {
          const int sz = window_4d_size(w, k, l, x);
          if (sz < lo || sz > hi || sz != static_cast<int>(window_4d(w, k, l, x).size())) sizes = false;
          int containing = 0;
          for (const auto& y : box) {
            const bool xy = in_win(x, y, w);
            if (xy != in_win(y, x, w)) symmetry = false;
            if (in_win(x, y, w)) ++containing;
            // y in Win^{w2}(x) implies Win^{w}(y) inside Win^{w + w2}(x), axis by axis.
            for (int w2 = 0; w2 <= max_w; ++w2) {
              if (!in_win(x, y, w2)) continue;
              for (int d = 0; d < 4; ++d) {
                const int len = d < 2 ? k : l;
                const auto ry = window_range(w, len, y[d]);
                const auto rx = window_range(w + w2, len, x[d]);
                if (ry.lo < rx.lo || ry.hi > rx.hi) triangle = false;
              }
            }
          }
          if (containing != sz) counting = false;
        }
      }
  return {{"configs", configs},     {"sizes", sizes},         {"symmetry", symmetry},
          {"counting", counting},   {"triangle", triangle},   {"size_difference", size_diff}};
}

json sandwich(const LemmaConfig& c) {
  const int trials = or_default(c.trials, 100);
  Rng rng(derive_seed(c.seed, {3}));
  double lower_over = -1.0, upper_under = -1.0, upper_max = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int w = uniform_int(rng, 1, 3);
    const int k = uniform_int(rng, w + 2, 8);
    const int l = uniform_int(rng, w + 2, 8);
    const Array4 a = random_simplex_array(k, l, rng);
    const Array4 s = smooth_array(a, w);
    const Array4 lo = lower_array(a, w);
    const Array4 hi = upper_array(a, w);
    for (std::size_t x = 0; x < a.size(); ++x) {
      lower_over = std::max(lower_over, lo.data()[x] - s.data()[x]);
      upper_under = std::max(upper_under, s.data()[x] - hi.data()[x]);
      upper_max = std::max(upper_max, hi.data()[x]);
    }
  }
  json facts = window_facts(8, 3);
  const bool facts_ok = facts["sizes"] && facts["symmetry"] && facts["counting"] && facts["triangle"] &&
                        facts["size_difference"];
  const bool ok = lower_over <= kExact && upper_under <= kExact && upper_max <= 1.0 + kExact && facts_ok;
  return {{"pass", ok},
          {"trials", trials},
          {"max_lower_minus_smooth", lower_over},
          {"max_smooth_minus_upper", upper_under},
          {"max_upper_entry", upper_max},
          {"window_facts", std::move(facts)}};
}

json sandwich_gap_suite(const LemmaConfig& c) {
  const int trials = or_default(c.trials, 10);
  Rng rng(derive_seed(c.seed, {4}));
  const int side = 16;
  double constant = 0.0;
  json per_w = json::array();
  for (int w = 1; w <= 5; ++w) {
    double worst = 0.0;
    std::vector<Array4> inputs;
    for (int t = 0; t < trials; ++t) inputs.push_back(random_simplex_array(side, side, rng));
    for (const Index4& x : {Index4{1, 1, 1, 1}, Index4{8, 8, 8, 8}, Index4{1, 16, 8, 1}}) {
      Array4 point(side, side);
      point.at(x[0], x[1], x[2], x[3]) = 1.0;
      inputs.push_back(std::move(point));
    }
    for (const auto& a : inputs) worst = std::max(worst, sandwich_gap(a, w));
    constant = std::max(constant, w * worst);
    per_w.push_back({{"w", w}, {"max_gap", worst}, {"w_times_gap", w * worst}});
  }
  return {{"pass", constant <= kWinBound},
          {"side", side},
          {"random_arrays_per_w", trials},
          {"measured_constant", constant},
          {"proof_constant", kWinBound},
          {"per_w", std::move(per_w)}};
}

json oblivious_suite(const LemmaConfig& c) {
  const int graphs = or_default(c.trials, 100);
  const ObliviousAlg& alg = c.alg;
  Rng rng(derive_seed(c.seed, {5}));
  double worst_excess = -1.0;
  double min_ratio = 1.0;
  for (int t = 0; t < graphs; ++t) {
    const int n = uniform_int(rng, 2, 12);
    const auto g = random_graph(n, static_cast<std::size_t>(uniform_int(rng, 1, 3 * n)), rng);
    const double val = max_dicut_bruteforce(g).value;
    const double a = evaluate(alg, compute_snapshot(g, alg.thresholds()));
    worst_excess = std::max(worst_excess, a - val);
    min_ratio = std::min(min_ratio, a / val);
  }
  bool continuity = true;
  const int pairs = 500;
  for (int t = 0; t < pairs; ++t) {
    const int l = uniform_int(rng, 1, 10);
    std::vector<double> r(static_cast<std::size_t>(l));
    for (auto& x : r) x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::vector<double> br{-1.0};
    for (int i = 1; i < l; ++i) br.push_back(-1.0 + 2.0 * i / l);
    br.push_back(1.0);
    const ObliviousAlg random_alg(ThresholdVector::bias(br), r);
    continuity = continuity && check_continuity(random_alg, random_simplex_matrix(l, rng), random_simplex_matrix(l, rng));
  }
  // Monte Carlo: mean sampled cut value against the linear form.
  const auto g = random_graph(10, 30, rng);
  const double expected = evaluate(alg, compute_snapshot(g, alg.thresholds()));
  const int samples = 10000;
  double sum = 0.0, sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double v = cut_value(g, oblivious_sample(alg, g, derive_seed(c.seed, {6, static_cast<std::uint64_t>(s)})));
    sum += v;
    sq += v * v;
  }
  const double mean = sum / samples;
  const double sd = std::sqrt(std::max(0.0, sq / samples - mean * mean));
  const double se = sd / std::sqrt(static_cast<double>(samples));
  const double z = se > 0 ? std::abs(mean - expected) / se : 0.0;
  const bool ok = worst_excess <= kExact && continuity && z <= 3.0;
  return {{"pass", ok},
          {"graphs", graphs},
          {"max_evaluate_minus_val", worst_excess},
          {"min_evaluate_over_val", min_ratio},
          {"continuity_pairs", pairs},
          {"continuity", continuity},
          {"monte_carlo", {{"samples", samples}, {"mean", mean}, {"evaluate", expected}, {"stderr", se}, {"z", z}}}};
}

json blowup_suite(const LemmaConfig& c) {
  const int graphs = or_default(c.trials, 50);
  const int max_n = static_cast<int>(std::min<std::uint64_t>(or_default<std::uint64_t>(c.n, 8), 8));
  Rng rng(derive_seed(c.seed, {7}));
  const auto t = ThresholdVector::bias({-1.0, -0.5, 0.0, 0.5, 1.0});
  double weight_err = 0.0, bias_err = 0.0, val_err = 0.0;
  std::size_t largest = 0;
  for (int gi = 0; gi < graphs; ++gi) {
    const int n = uniform_int(rng, 2, std::max(2, max_n));
    const auto raw = random_graph(n, static_cast<std::size_t>(uniform_int(rng, n, 3 * n)), rng);
    const Multigraph g = strip_isolated(raw).first;
    const int w = gi % 4 == 0 ? 0 : 1;
    const Blowup k = blowup_graph(g, t, w);
    largest = std::max(largest, k.graph.vertex_count());
    weight_err = std::max(weight_err, std::abs(k.graph.total_weight() - g.total_weight()) / g.total_weight());
    const auto gs = all_vertex_stats(g);
    const auto ks = all_vertex_stats(k.graph);
    for (std::size_t id = 0; id < ks.size(); ++id)
      bias_err = std::max(bias_err, std::abs(*ks[id].bias - *gs[k.labels[id].first - 1].bias));
    const double vg = max_dicut_bruteforce(g).value;
    const double vk = max_dicut_bruteforce(k.graph).value;
    val_err = std::max(val_err, std::abs(vg - vk));
  }
  const bool ok = weight_err <= kExact && bias_err <= kExact && val_err <= 1e-9;
  return {{"pass", ok},
          {"graphs", graphs},
          {"max_relative_weight_difference", weight_err},
          {"max_bias_difference", bias_err},
          {"max_value_difference", val_err},
          {"largest_blowup", largest}};
}

json sparsification_suite(const LemmaConfig& c) {
  const int trials = or_default(c.trials, 100);
  const std::uint64_t n = or_default<std::uint64_t>(c.n, 16);
  const std::uint64_t m = or_default<std::uint64_t>(c.m, 100000);
  const double eps = or_default(c.epsilon, 0.05);
  const double p = 0.5;
  if (n > kDefaultBruteForceCeiling) throw InvalidArgument("sparsification suite brute-forces; n must be <= 24");
  Rng rng(derive_seed(c.seed, {8}));
  const auto g = random_graph(n, m, rng);
  const double val = max_dicut_bruteforce(g).value;
  std::vector<Cut> fixed(5);
  std::vector<double> y(5);
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    fixed[i].bits.resize(n);
    for (auto& b : fixed[i].bits) b = static_cast<std::uint8_t>(rng() & 1U);
    y[i] = cut_value(g, fixed[i]) * g.total_weight();
  }
  std::vector<int> ok(static_cast<std::size_t>(trials), 0);
  std::vector<double> val_diff(static_cast<std::size_t>(trials), 0.0);
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (int t = 0; t < trials; ++t) {
    const auto gs = sparsify(g, p, derive_seed(c.seed, {9, static_cast<std::uint64_t>(t)}));
    const double ms = gs.total_weight();
    bool pass = std::abs(ms - p * static_cast<double>(m)) <= eps * p * static_cast<double>(m);
    for (std::size_t i = 0; i < fixed.size(); ++i)
      pass = pass && std::abs(cut_value(gs, fixed[i]) * ms / p - y[i]) <= eps * y[i];
    val_diff[static_cast<std::size_t>(t)] = std::abs(max_dicut_bruteforce(gs).value - val);
    pass = pass && val_diff[static_cast<std::size_t>(t)] <= eps;
    ok[static_cast<std::size_t>(t)] = pass;
  }
  const int passed = std::accumulate(ok.begin(), ok.end(), 0);
  const double implied = p * eps * eps * static_cast<double>(m) / static_cast<double>(n);
  return {{"pass", passed * 100 >= 95 * trials},
          {"trials", trials},
          {"passed_trials", passed},
          {"n", n},
          {"m", m},
          {"p", p},
          {"epsilon", eps},
          {"largest_c_spar_meeting_hypothesis", implied},
          {"shipped_c_spar", kDefaultCSpar},
          {"shipped_c_spar_meets_hypothesis", kDefaultCSpar <= implied},
          {"max_value_difference", *std::max_element(val_diff.begin(), val_diff.end())}};
}

json degenerate_suite(const LemmaConfig& c) {
  const int graphs = or_default(c.trials, 100);
  const double eps = or_default(c.epsilon, 0.5);
  Rng rng(derive_seed(c.seed, {10}));
  bool pointwise = true, identity = true, sound = true, space = true, exact_smooth = true;
  int overflowed = 0;
  double worst_sound = -1.0, worst_smooth = 0.0;
  for (int gi = 0; gi < graphs; ++gi) {
    const int n = uniform_int(rng, 4, 12);
    const int m = uniform_int(rng, 8, 30);
    EdgeStream s;
    const auto g = stream_graph(random_graph(n, m, rng), s);
    ParamOptions opts;
    opts.overrides.full_sampling = true;
    opts.overrides.v_cutoff = static_cast<std::uint64_t>(n);
    opts.overrides.e_cutoff = static_cast<std::uint64_t>(m) + 1;
    const auto params = derive_params(eps, n, m, 1.0, c.alg, opts);
    const Sketcher sk(params, derive_seed(c.seed, {11, static_cast<std::uint64_t>(gi)}));
    const auto sketch = sketch_stream(sk, s);
    for (const auto& r : sk.space_report(sketch)) space = space && r.within_bounds;
    const auto out = sk.finalize(sketch);
    if (out.overflowed()) {
      ++overflowed;
      continue;
    }
    const auto& rep = *out.report;
    const Array4 a = compute_refined_snapshot(g, params.d, params.t);
    pointwise = pointwise && check_pointwise_estimate(a, rep.a_hat, params.w, 0.0).pass;
    worst_smooth = std::max(worst_smooth, max_abs_difference(rep.a_hat.data(), smooth_array(a, params.w).data()));
    exact_smooth = worst_smooth <= kExact;
    identity = identity && rep.alg_value == evaluate(params.alg, project(rep.a_hat)) &&
               rep.v_hat_raw == rep.alg_value - params.slack;
    const double excess = rep.v_hat - max_dicut_bruteforce(g).value;
    worst_sound = std::max(worst_sound, excess);
    sound = sound && excess <= 1e-9;
  }
  const bool ok = overflowed == 0 && pointwise && identity && sound && space;
  return {{"pass", ok},
          {"graphs", graphs},
          {"epsilon", eps},
          {"overflowed", overflowed},
          {"pointwise_delta_zero", pointwise},
          {"a_hat_equals_smoothed_snapshot", exact_smooth},
          {"max_abs_a_hat_minus_smoothed", worst_smooth},
          {"slack_identity", identity},
          {"v_hat_at_most_val", sound},
          {"max_v_hat_minus_val", worst_sound},
          {"space_within_bounds", space}};
}

struct PointwiseRun {
  bool pass = false;
  bool overflow = false;
  double max_excess = 0.0;
  double signed_margin = 0.0;
  bool space_ok = true;
};

json pointwise_suite(const LemmaConfig& c) {
  const int trials = or_default(c.trials, 50);
  const std::uint64_t n = or_default<std::uint64_t>(c.n, 10000);
  const std::uint64_t m = or_default<std::uint64_t>(c.m, 50000);
  const double eps = or_default(c.epsilon, 0.25);
  const double scale = or_default(c.scale, kPointwiseScale);
  Rng rng(derive_seed(c.seed, {12}));
  EdgeStream s;
  const auto g = stream_graph(random_graph(n, m, rng), s);

  const auto base = derive_params(eps, n, static_cast<double>(m), scale, c.alg);
  const Array4 a = compute_refined_snapshot(g, base.d, base.t);
  const Array4 lower = lower_array(a, base.w);
  const Array4 upper = upper_array(a, base.w);
  const double kl = static_cast<double>(base.k) * base.l;
  const double delta = eps / (kl * kl);

  auto run_at = [&](double sc) {
    const auto params = derive_params(eps, n, static_cast<double>(m), sc, c.alg);
    std::vector<PointwiseRun> runs(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
    for (int t = 0; t < trials; ++t) {
      const Sketcher sk(params, derive_seed(c.seed, {13, static_cast<std::uint64_t>(t)}));
      const auto sketch = sketch_stream(sk, s);
      auto& r = runs[static_cast<std::size_t>(t)];
      for (const auto& sp : sk.space_report(sketch)) r.space_ok = r.space_ok && sp.within_bounds;
      const auto out = sk.finalize(sketch);
      if (out.overflowed()) {
        r.overflow = true;
        continue;
      }
      const auto rep = check_pointwise_bounds(lower, upper, out.report->a_hat, delta);
      r.pass = rep.pass;
      r.max_excess = rep.max_excess;
      r.signed_margin = rep.signed_margin;
    }
    double min_p = 1.0;
    for (const auto& lp : params.layers) min_p = std::min(min_p, lp.p);
    int passed = 0, overflow = 0;
    bool space_ok = true;
    std::vector<double> excess, margin;
    for (const auto& r : runs) {
      passed += r.pass;
      overflow += r.overflow;
      space_ok = space_ok && r.space_ok;
      excess.push_back(r.max_excess);
      margin.push_back(r.signed_margin);
    }
    return json{{"scale", sc},
                {"p0", params.p0},
                {"min_p", min_p},
                {"passed", passed},
                {"overflowed", overflow},
                {"pass_rate", static_cast<double>(passed) / trials},
                {"median_max_violation", median(excess)},
                {"median_signed_margin", median(margin)},
                {"space_within_bounds", space_ok}};
  };

  json at_base = run_at(scale);
  json at_double = run_at(2.0 * scale);
  const bool reduced = at_double["median_max_violation"].get<double>() < at_base["median_max_violation"].get<double>();
  const bool ok = at_base["pass_rate"].get<double>() >= 0.9 && at_base["min_p"].get<double>() < 1.0 && reduced;
  return {{"pass", ok},
          {"n", n},
          {"m", m},
          {"epsilon", eps},
          {"k", base.k},
          {"l", base.l},
          {"w", base.w},
          {"delta", delta},
          {"trials", trials},
          {"median_violation_reduced", reduced},
          {"base", std::move(at_base)},
          {"doubled", std::move(at_double)}};
}

json hash_suite(const LemmaConfig& c) {
  // Marginals: k = 4, n = 256, m = 16, 200 functions.
  const int funcs = or_default(c.trials, 200);
  const std::uint64_t n1 = 256, m1 = 16;
  std::vector<std::vector<int>> counts(n1, std::vector<int>(m1, 0));
  for (int f = 0; f < funcs; ++f) {
    const auto h = sample_hash(4, n1, m1, derive_seed(c.seed, {14, static_cast<std::uint64_t>(f)}));
    for (std::uint64_t x = 1; x <= n1; ++x) ++counts[x - 1][h(x) - 1];
  }
  const double e1 = static_cast<double>(funcs) / m1;
  const double sd1 = std::sqrt(funcs * (1.0 / m1) * (1.0 - 1.0 / m1));
  // Per cell: exact two-sided binomial tail, compared at 1e-3 / cells.
  const boost::math::binomial_distribution<double> cell(funcs, 1.0 / m1);
  double chi1 = 0.0, max_z = 0.0, min_cell_p = 1.0;
  int beyond_4_sigma = 0;
  for (const auto& row : counts)
    for (int cnt : row) {
      chi1 += (cnt - e1) * (cnt - e1) / e1;
      const double z = std::abs(cnt - e1) / sd1;
      max_z = std::max(max_z, z);
      beyond_4_sigma += z > 4.0;
      const double lower = boost::math::cdf(cell, cnt);
      const double upper = cnt == 0 ? 1.0 : boost::math::cdf(boost::math::complement(cell, cnt - 1));
      min_cell_p = std::min(min_cell_p, std::min(1.0, 2.0 * std::min(lower, upper)));
    }
  const double cells = static_cast<double>(n1 * m1);
  const double dof1 = static_cast<double>(n1 * (m1 - 1));
  const double p1 = chi2_upper_tail(chi1, dof1);

  // Joint distribution of 100 random 4-tuples of distinct points: n = 64, m = 4, 500 functions.
  const std::uint64_t n2 = 64, m2 = 4;
  const int funcs2 = 500, tuples = 100;
  Rng rng(derive_seed(c.seed, {15}));
  std::vector<std::array<std::uint64_t, 4>> pts;
  for (int t = 0; t < tuples; ++t) {
    std::vector<std::uint64_t> all(n2);
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    pts.push_back({all[0], all[1], all[2], all[3]});
  }
  std::vector<std::vector<int>> joint(tuples, std::vector<int>(256, 0));
  for (int f = 0; f < funcs2; ++f) {
    const auto h = sample_hash(4, n2, m2, derive_seed(c.seed, {16, static_cast<std::uint64_t>(f)}));
    for (int t = 0; t < tuples; ++t) {
      const auto& p = pts[static_cast<std::size_t>(t)];
      const auto cell = (h(p[0]) - 1) * 64 + (h(p[1]) - 1) * 16 + (h(p[2]) - 1) * 4 + (h(p[3]) - 1);
      ++joint[static_cast<std::size_t>(t)][cell];
    }
  }
  const double e2 = funcs2 / 256.0;
  double chi2 = 0.0, min_tuple_p = 1.0;
  int tuples_below = 0;
  for (const auto& cells : joint) {
    double x = 0.0;
    for (int cnt : cells) x += (cnt - e2) * (cnt - e2) / e2;
    chi2 += x;
    const double pt = chi2_upper_tail(x, 255.0);
    min_tuple_p = std::min(min_tuple_p, pt);
    tuples_below += pt < 1e-3;
  }
  const double dof2 = 255.0 * tuples;
  const double p2 = chi2_upper_tail(chi2, dof2);
  const bool ok = p1 >= 1e-3 && min_cell_p >= 1e-3 / cells && p2 >= 1e-3 && min_tuple_p >= 1e-3 / tuples;
  return {{"pass", ok},
          {"significance", 1e-3},
          {"marginal",
           {{"functions", funcs}, {"n", n1}, {"m", m1}, {"chi2", chi1}, {"dof", dof1}, {"p_value", p1}, {"max_cell_z", max_z},
            {"cells_beyond_4_sigma", beyond_4_sigma}, {"min_cell_p_value", min_cell_p}}},
          {"joint",
           {{"functions", funcs2},
            {"n", n2},
            {"m", m2},
            {"tuples", tuples},
            {"chi2", chi2},
            {"dof", dof2},
            {"p_value", p2},
            {"min_tuple_p_value", min_tuple_p},
            {"tuples_below_significance", tuples_below}}}};
}

using Suite = std::function<json(const LemmaConfig&)>;

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> r = {
      {"smoothing-sum", smoothing_sum},
      {"projection", projection},
      {"sandwich", sandwich},
      {"sandwich-gap", sandwich_gap_suite},
      {"oblivious", oblivious_suite},
      {"blowup", blowup_suite},
      {"sparsification", sparsification_suite},
      {"degenerate", degenerate_suite},
      {"pointwise", pointwise_suite},
      {"hash", hash_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
  }();
  return names;
}

json verify_lemma(const std::string& name, const LemmaConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidArgument("unknown lemma suite: " + name);
  json out = it->second(config);
  out["lemma"] = name;
  out["seed"] = config.seed;
  return out;
}

}  // namespace dicut
