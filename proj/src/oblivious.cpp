#include "dicut/oblivious.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include "dicut/error.hpp"
#include "dicut/rng.hpp"

namespace dicut {

namespace {

// Stand-in probabilities for bias classes [-1, 0) and [0, 1].
constexpr double kStandInLow = 0.4;
constexpr double kStandInHigh = 0.6;

}  // namespace

ObliviousAlg::ObliviousAlg(ThresholdVector thresholds, std::vector<double> probabilities)
    : thresholds_(std::move(thresholds)), probabilities_(std::move(probabilities)) {
  if (static_cast<int>(probabilities_.size()) != thresholds_.length())
    throw InvalidArgument("oblivious algorithm: " + std::to_string(probabilities_.size()) +
                          " probabilities for " + std::to_string(thresholds_.length()) + " classes");
  for (double r : probabilities_)
    if (!(r >= 0.0 && r <= 1.0)) throw InvalidArgument("oblivious algorithm: probabilities must lie in [0, 1]");
}

ObliviousAlg default_oblivious_alg() {
  return ObliviousAlg(ThresholdVector::bias({-1.0, 0.0, 1.0}), {kStandInLow, kStandInHigh});
}

ObliviousAlg oblivious_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("thresholds") || !j.contains("probabilities"))
    throw InvalidArgument("oblivious config needs \"thresholds\" and \"probabilities\"");
  return ObliviousAlg(ThresholdVector::bias(j.at("thresholds").get<std::vector<double>>()),
                      j.at("probabilities").get<std::vector<double>>());
}

nlohmann::json to_json(const ObliviousAlg& alg) {
  return {{"thresholds", alg.thresholds().breakpoints()}, {"probabilities", alg.probabilities()}};
}

ObliviousAlg load_oblivious_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open oblivious config " + path.string());
  try {
    return oblivious_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("bad oblivious config " + path.string() + ": " + e.what());
  }
}

double evaluate(const ObliviousAlg& alg, const Matrix& m) {
  if (m.side() != alg.length())
    throw InvalidArgument("snapshot side " + std::to_string(m.side()) + " does not match algorithm length " +
                          std::to_string(alg.length()));
  const auto& r = alg.probabilities();
  double s = 0.0;
  for (int i = 1; i <= m.side(); ++i)
    for (int j = 1; j <= m.side(); ++j) s += r[i - 1] * (1.0 - r[j - 1]) * m.at(i, j);
  return s;
}

Cut oblivious_sample(const ObliviousAlg& alg, const Multigraph& g, std::uint64_t seed) {
  Rng rng(seed);
  const auto stats = all_vertex_stats(g);
  Cut x;
  x.bits.assign(g.vertex_count(), 0);
  for (std::size_t v = 0; v < stats.size(); ++v) {
    if (stats[v].isolated()) continue;
    const double r = alg.probabilities()[alg.thresholds().index_of(*stats[v].bias) - 1];
    x.bits[v] = std::bernoulli_distribution(r)(rng) ? 1 : 0;
  }
  return x;
}

ObliviousAlg refine_alg(const ObliviousAlg& alg, double lambda) {
  auto refined = refine_partition(alg.thresholds(), lambda);
  std::vector<double> r;
  for (ClassIndex parent : refinement_parents(alg.thresholds(), refined))
    r.push_back(alg.probabilities()[parent - 1]);
  return ObliviousAlg(std::move(refined), std::move(r));
}

bool check_continuity(const ObliviousAlg& alg, const Matrix& m, const Matrix& n) {
  const double diff = std::abs(evaluate(alg, m) - evaluate(alg, n));
  return diff <= l1_distance(m.data(), n.data()) + 1e-12;
}

}  // namespace dicut
