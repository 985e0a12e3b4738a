#include "dicut/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dicut/error.hpp"
#include "dicut/hashfam.hpp"

namespace dicut {

namespace {

constexpr double kSaturate = 0x1.0p62;

// ceil(x) tolerant of rounding noise, e.g. 1 / 0.1.
double ceil_clean(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return r;
  return std::ceil(x);
}

std::uint64_t saturating(double x) {
  return x >= kSaturate ? static_cast<std::uint64_t>(kSaturate) : static_cast<std::uint64_t>(x);
}

}  // namespace

ParamSet derive_params(double epsilon, std::uint64_t n, double m_hat, double scale, const ObliviousAlg& original,
                       const ParamOptions& options) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (!(m_hat >= 1.0) || !std::isfinite(m_hat)) throw InvalidArgument("m_hat must be a finite value >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("scale must be positive");
  if (!(options.c_spar > 0.0)) throw InvalidArgument("C_spar must be positive");
  if (options.slack && !(*options.slack >= 0.0)) throw InvalidArgument("slack must be >= 0");

  ParamSet p;
  p.epsilon = epsilon;
  p.n = n;
  p.m_hat = m_hat;
  p.scale = scale;
  p.c_spar = options.c_spar;
  p.slack = options.slack.value_or(epsilon / 4.0);
  p.overrides = options.overrides;

  p.w = static_cast<int>(ceil_clean(1.0 / epsilon));
  p.lambda = epsilon / p.w;
  p.alg = refine_alg(original, p.lambda);
  p.t = p.alg.thresholds();
  p.l = p.t.length();
  p.epsilon_bias = 2.0 * p.t.min_gap();

  const double nd = static_cast<double>(n);
  const double log_n = std::log2(nd);
  p.m_min = static_cast<std::uint64_t>(ceil_clean(std::sqrt(nd)));
  p.m_max = saturating(ceil_clean(options.c_spar * nd / (epsilon * epsilon)));
  p.k_star = static_cast<int>(std::max(0.0, ceil_clean(6.0 * std::log2(log_n))));
  const int d_exp = p.k_star + p.w + 2;
  p.big_d = d_exp >= 62 ? static_cast<std::uint64_t>(kSaturate) : std::uint64_t{1} << d_exp;
  const std::uint64_t e_raw = saturating(ceil_clean(std::pow(log_n, 7.0)));
  p.e_cutoff_raised = e_raw < p.big_d;
  p.e_cutoff = std::max(e_raw, p.big_d);
  if (options.overrides.e_cutoff) p.e_cutoff = *options.overrides.e_cutoff;

  p.k = std::max(1, static_cast<int>(ceil_clean(std::log2(2.0 * m_hat))));
  const double kl = static_cast<double>(p.k) * p.l;
  p.rho = scale * 1000.0 * std::sqrt(static_cast<double>(p.big_d)) * kl * kl * kl / epsilon;
  p.p0 = p.rho / std::sqrt(m_hat);
  p.v_cutoff = saturating(ceil_clean(10.0 * p.rho * std::sqrt(2.0 * m_hat)));
  if (options.overrides.v_cutoff) p.v_cutoff = *options.overrides.v_cutoff;
  p.d = ThresholdVector::powers_of_two(p.k);

  for (int a = 1; a <= p.k; ++a) {
    LayerParams lp;
    lp.a = a;
    lp.degree = std::ldexp(1.0, a);
    if (options.overrides.full_sampling) {
      p.layers.push_back(lp);
      continue;
    }
    lp.q = std::min(std::ldexp(1.0, p.k_star - a), 1.0);
    lp.p_raw = std::min(p.p0 / lp.q, 1.0);
    const double inv = std::min(1.0 / lp.p_raw, kSaturate);
    lp.hash_range = next_power_of_two(inv);
    lp.p = 1.0 / static_cast<double>(lp.hash_range);
    if (static_cast<double>(lp.hash_range) != 1.0 / lp.p_raw) p.p_rounded = true;
    p.layers.push_back(lp);
  }
  return p;
}

nlohmann::json to_json(const ParamSet& p) {
  auto layers = nlohmann::json::array();
  for (const auto& lp : p.layers)
    layers.push_back({{"a", lp.a},
                      {"d", lp.degree},
                      {"q", lp.q},
                      {"p_raw", lp.p_raw},
                      {"p", lp.p},
                      {"hash_range", lp.hash_range}});
  return {{"epsilon", p.epsilon},
          {"n", p.n},
          {"m_hat", p.m_hat},
          {"scale", p.scale},
          {"c_spar", p.c_spar},
          {"slack", p.slack},
          {"w", p.w},
          {"lambda", p.lambda},
          {"l", p.l},
          {"thresholds", p.t.breakpoints()},
          {"probabilities", p.alg.probabilities()},
          {"epsilon_bias", p.epsilon_bias},
          {"m_min", p.m_min},
          {"m_max", p.m_max},
          {"k_star", p.k_star},
          {"D", p.big_d},
          {"e_cutoff", p.e_cutoff},
          {"e_cutoff_raised", p.e_cutoff_raised},
          {"k", p.k},
          {"rho", p.rho},
          {"p0", p.p0},
          {"v_cutoff", p.v_cutoff},
          {"p_rounded", p.p_rounded},
          {"full_sampling", p.overrides.full_sampling},
          {"layers", std::move(layers)}};
}

}  // namespace dicut
