#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "dicut/oblivious.hpp"
#include "dicut/partition.hpp"

namespace dicut {

inline constexpr double kDefaultCSpar = 400.0;

/// Knobs that move the estimator away from the analysed constants. Used by
/// tests and diagnostics; a default-constructed value changes nothing.
struct ParamOverrides {
  /// Forces q_a = p_a = 1 in every layer.
  bool full_sampling = false;
  std::optional<std::uint64_t> v_cutoff;
  std::optional<std::uint64_t> e_cutoff;
};

struct ParamOptions {
  double c_spar = kDefaultCSpar;
  /// Amount subtracted from A(M_hat); defaults to epsilon / 4.
  std::optional<double> slack;
  ParamOverrides overrides;
};

/// Per-layer constants for layer a in 1..k.
struct LayerParams {
  int a = 0;
  /// d_a = 2^a.
  double degree = 0.0;
  /// Edge-sampling probability min{2^{k*-a}, 1}.
  double q = 1.0;
  /// min{p_0 / q_a, 1} before rounding.
  double p_raw = 1.0;
  /// Vertex-sampling probability actually used: 1 / hash_range.
  double p = 1.0;
  /// 1/p_raw rounded up to a power of two; the hash maps into [hash_range].
  std::uint64_t hash_range = 1;
};

struct ParamSet {
  double epsilon = 0.0;
  std::uint64_t n = 0;
  double m_hat = 0.0;
  double scale = 1.0;
  double c_spar = kDefaultCSpar;
  double slack = 0.0;

  int w = 0;
  double lambda = 0.0;
  /// Refined bias thresholds and the refined oblivious algorithm.
  ThresholdVector t = ThresholdVector::bias({-1.0, 1.0});
  int l = 0;
  ObliviousAlg alg = ObliviousAlg(ThresholdVector::bias({-1.0, 1.0}), {0.5});
  /// Twice the smallest gap of t.
  double epsilon_bias = 0.0;

  std::uint64_t m_min = 0;
  std::uint64_t m_max = 0;
  int k_star = 0;
  /// 2^{k*+w+2}, saturated at 2^62.
  std::uint64_t big_d = 0;
  std::uint64_t e_cutoff = 0;
  /// True when ceil(log2^7 n) < D and e_cutoff was raised to D.
  bool e_cutoff_raised = false;

  int k = 0;
  double rho = 0.0;
  double p0 = 0.0;
  std::uint64_t v_cutoff = 0;
  ThresholdVector d = ThresholdVector::powers_of_two(1);
  std::vector<LayerParams> layers;
  /// True when any 1/p_a was rounded up to reach a power of two.
  bool p_rounded = false;
  ParamOverrides overrides;

  const LayerParams& layer(int a) const { return layers.at(static_cast<std::size_t>(a - 1)); }
};

/// Derives every constant from (epsilon, n, m_hat). The oblivious algorithm
/// is refined to width lambda = epsilon / w. Throws InvalidArgument unless
/// 0 < epsilon < 1, n >= 2, m_hat >= 1 and scale > 0.
ParamSet derive_params(double epsilon, std::uint64_t n, double m_hat, double scale,
                       const ObliviousAlg& original, const ParamOptions& options = {});

nlohmann::json to_json(const ParamSet& p);

}  // namespace dicut
