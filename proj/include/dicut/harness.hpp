#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dicut/oblivious.hpp"
#include "dicut/sketcher.hpp"
#include "dicut/stream.hpp"

namespace dicut {

// Graph families:
//   erdos-renyi-directed  m ordered pairs drawn uniformly with replacement
//   planted-dicut         hidden half S; each edge goes S -> V\S with
//                         probability p_out / (p_in + p_out), else it is a
//                         uniform pair that is not S -> V\S
//   star                  centre 1 joined to 2..n, direction out or in; m ignored
//   power-law             both endpoints drawn with weight v^{-1/(alpha-1)}
//   k-cycle-union         floor(n/k) disjoint directed k-cycles, repeated
//                         until m edges (one pass when m = 0)
struct GeneratorSpec {
  std::string family = "erdos-renyi-directed";
  std::uint64_t n = 16;
  std::uint64_t m = 32;
  std::uint64_t seed = 1;
  double p_in = 0.1;
  double p_out = 0.9;
  bool star_out = true;
  double alpha = 2.5;
  int cycle_length = 3;
};

const std::vector<std::string>& generator_families();

/// Throws InvalidArgument on an unknown family or inconsistent parameters.
EdgeStream generate(const GeneratorSpec& spec);

enum class Ordering { kAsGenerated, kRandomPermutation, kAdversarial };

Ordering parse_ordering(const std::string& name);
std::string ordering_name(Ordering o);

/// Adversarial = sorted by (source, target), stable.
EdgeStream order_stream(EdgeStream s, Ordering o, std::uint64_t seed);

// ---------------------------------------------------------------------------

/// Zero means "use the suite's default".
struct LemmaConfig {
  std::uint64_t seed = 1;
  int trials = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double epsilon = 0.0;
  double scale = 0.0;
  ObliviousAlg alg = default_oblivious_alg();
};

const std::vector<std::string>& lemma_names();

/// Runs one property suite and returns {"lemma", "pass", ...measurements}.
/// Throws InvalidArgument on an unknown name.
nlohmann::json verify_lemma(const std::string& name, const LemmaConfig& config);

// ---------------------------------------------------------------------------

struct CompareConfig {
  GeneratorSpec generator;
  Ordering ordering = Ordering::kAsGenerated;
  RunConfig run;
  int trials = 1;
  /// Adds a wall-clock column; off by default so reruns are byte-identical.
  bool timing = false;
};

struct CompareRow {
  int trial = 0;
  std::uint64_t graph_seed = 0;
  std::uint64_t sketch_seed = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double v_hat = 0.0;
  bool overflow = false;
  double reference = 0.0;
  /// "EXACT" or "LOWER-BOUND".
  std::string reference_kind;
  double ratio = 0.0;
  std::uint64_t stored_vertices = 0;
  std::uint64_t stored_edges = 0;
  double seconds = 0.0;
};

inline constexpr int kCompareSchemaVersion = 1;

/// Trials run in parallel; rows come back in trial order.
std::vector<CompareRow> compare(const CompareConfig& config);

/// Header comment, column line, one row per trial, then a summary row.
std::string compare_csv(const std::vector<CompareRow>& rows, bool timing);

}  // namespace dicut
