#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "dicut/multigraph.hpp"
#include "dicut/partition.hpp"
#include "dicut/tensor.hpp"

namespace dicut {

/// Oblivious snapshot algorithm: a vertex in bias class i is put on side 1
/// with probability r_i. Its value on a snapshot M is
/// sum_{i,j} r_i (1 - r_j) M(i, j).
class ObliviousAlg {
 public:
  /// Throws InvalidArgument unless |r| = l and every r_i is in [0, 1].
  ObliviousAlg(ThresholdVector thresholds, std::vector<double> probabilities);

  const ThresholdVector& thresholds() const noexcept { return thresholds_; }
  const std::vector<double>& probabilities() const noexcept { return probabilities_; }
  int length() const noexcept { return thresholds_.length(); }

  bool operator==(const ObliviousAlg&) const = default;

 private:
  ThresholdVector thresholds_;
  std::vector<double> probabilities_;
};

/// Stand-in table shipped with the repository: t = (-1, 0, 1), r = (r_lo, r_hi).
/// It is NOT the Feige-Jozeph table; supply that through a config file.
ObliviousAlg default_oblivious_alg();

/// {"thresholds": [...], "probabilities": [...]}
ObliviousAlg oblivious_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ObliviousAlg& alg);
ObliviousAlg load_oblivious_config(const std::filesystem::path& path);

/// Throws InvalidArgument when M is not l x l.
double evaluate(const ObliviousAlg& alg, const Matrix& m);

/// Independent per-vertex draw; isolated vertices get 0.
Cut oblivious_sample(const ObliviousAlg& alg, const Multigraph& g, std::uint64_t seed);

/// Same algorithm over refine_partition(t, lambda); each refined class
/// inherits the probability of its parent class.
ObliviousAlg refine_alg(const ObliviousAlg& alg, double lambda);

/// |A(M) - A(N)| <= ||M - N||_1 (with a 1e-12 rounding allowance).
bool check_continuity(const ObliviousAlg& alg, const Matrix& m, const Matrix& n);

}  // namespace dicut
