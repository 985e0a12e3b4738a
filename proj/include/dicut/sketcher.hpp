#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "dicut/hashfam.hpp"
#include "dicut/params.hpp"
#include "dicut/stream.hpp"
#include "dicut/tensor.hpp"

namespace dicut {

/// An edge held by a layer, keyed by its position in the stream.
struct StoredEdge {
  std::uint64_t index;
  VertexId from;
  VertexId to;

  bool operator==(const StoredEdge&) const = default;
};

/// (vStored_a, eStored_a), or the overflow marker.
///
/// eStored is always the canonical retained set: replaying the candidate
/// edges in stream-index order, an edge is kept iff one of its stored
/// endpoints has retained degree < eCutoff at that point.
class LayerSketch {
 public:
  bool overflowed() const noexcept { return overflow_; }
  /// Stream index of the edge whose arrival pushed |vStored| past vCutoff.
  std::optional<std::uint64_t> overflow_trigger() const noexcept { return trigger_; }

  std::size_t vertex_count() const noexcept { return degree_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool stores(VertexId v) const { return degree_.contains(v); }
  /// Number of retained edges incident to a stored vertex (0 if not stored).
  std::uint64_t retained_degree(VertexId v) const;

  /// Ascending.
  std::vector<VertexId> vertices() const;
  /// In stream-index order.
  const std::vector<StoredEdge>& edges() const noexcept { return edges_; }

  /// Appends an edge whose index exceeds every index held so far. `stored`
  /// holds the endpoints hashed to bucket 1 (0, 1 or 2 of them).
  void absorb(const StoredEdge& e, bool from_stored, bool to_stored, std::uint64_t v_cutoff,
              std::uint64_t e_cutoff);

  /// Union of vertex sets and canonical replay of the union of edge sets.
  static LayerSketch merge(const LayerSketch& x, const LayerSketch& y, std::uint64_t v_cutoff,
                           std::uint64_t e_cutoff);

  static LayerSketch overflow_marker(std::optional<std::uint64_t> trigger);

  bool operator==(const LayerSketch& o) const;

 private:
  void add_vertex(VertexId v, std::uint64_t trigger, std::uint64_t v_cutoff);
  void keep_if_room(const StoredEdge& e, std::uint64_t e_cutoff);
  void mark_overflow(std::optional<std::uint64_t> trigger);

  bool overflow_ = false;
  std::optional<std::uint64_t> trigger_;
  std::unordered_map<VertexId, std::uint64_t> degree_;
  std::vector<StoredEdge> edges_;
};

/// Identifies the parameters a sketch was built under; combine refuses to
/// merge sketches whose keys differ.
struct SketchKey {
  int k = 0;
  std::uint64_t v_cutoff = 0;
  std::uint64_t e_cutoff = 0;
  std::uint64_t seed = 0;

  bool operator==(const SketchKey&) const = default;
};

struct FullSketch {
  SketchKey key;
  std::uint64_t m = 0;
  std::vector<LayerSketch> layers;

  bool operator==(const FullSketch&) const = default;
};

struct LayerSpace {
  int a = 0;
  bool overflow = false;
  std::optional<std::uint64_t> trigger;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::uint64_t vertex_bound = 0;
  std::uint64_t edge_bound = 0;
  bool within_bounds = true;
};

struct LayerEstimate {
  int a = 0;
  std::size_t stored_vertices = 0;
  std::size_t stored_edges = 0;
  /// Stored vertices whose apparent degree class lies within w of a.
  std::size_t active_vertices = 0;
};

struct EstimateReport {
  Array4 a_hat;
  Matrix m_hat;
  /// evaluate(alg, M_hat).
  double alg_value = 0.0;
  /// alg_value - slack.
  double v_hat_raw = 0.0;
  /// v_hat_raw clamped to [0, 1].
  double v_hat = 0.0;
  std::vector<LayerEstimate> layers;
};

struct FinalizeOutcome {
  std::vector<int> overflow_layers;
  std::optional<EstimateReport> report;

  bool overflowed() const noexcept { return !report.has_value(); }
};

/// Streaming estimator for one edge-count guess m_hat: per-layer edge coins,
/// 4-wise independent vertex hashes, cutoffs, and the estimate extraction.
class Sketcher {
 public:
  Sketcher(ParamSet params, std::uint64_t seed);

  const ParamSet& params() const noexcept { return params_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const KWiseHash& hash(int a) const { return hashes_.at(static_cast<std::size_t>(a - 1)); }

  FullSketch empty() const;

  /// Sketch of the single edge (u, v) at the given stream index.
  /// Throws InvalidArgument on a self-loop or out-of-range endpoint.
  FullSketch sketch_edge(VertexId u, VertexId v, std::uint64_t index) const;

  /// Equivalent to s = combine(s, sketch_edge(u, v, index)) when index is
  /// larger than every index already in s, without the copy.
  void absorb(FullSketch& s, VertexId u, VertexId v, std::uint64_t index) const;

  /// Throws InvalidArgument when the sketches were built with different keys.
  FullSketch combine(const FullSketch& x, const FullSketch& y) const;

  FinalizeOutcome finalize(const FullSketch& s) const;

  std::vector<LayerSpace> space_report(const FullSketch& s) const;

  /// Whether layer a's edge coin for the given stream index comes up 1.
  bool edge_coin(std::uint64_t index, int a) const;

 private:
  void check_edge(VertexId u, VertexId v) const;

  ParamSet params_;
  std::uint64_t seed_;
  SketchKey key_;
  std::vector<KWiseHash> hashes_;
};

/// Sketches the whole stream with a single Sketcher (no m_hat grid).
FullSketch sketch_stream(const Sketcher& sk, const EdgeStream& stream);

nlohmann::json to_json(const std::vector<LayerSpace>& space);

// ---------------------------------------------------------------------------
// Wrapper over the unknown edge count.

inline constexpr double kGridBase = 1.9;

struct RunConfig {
  double epsilon = 0.25;
  std::uint64_t seed = 0;
  double scale = 1.0;
  ObliviousAlg alg = default_oblivious_alg();
  std::optional<double> slack;
  /// A priori bound m < n^C.
  double mbound_exp = 2.0;
  double c_spar = kDefaultCSpar;
  ParamOverrides overrides;
  std::size_t brute_force_ceiling = kDefaultBruteForceCeiling;
  /// Edges handed to the candidate sketches per parallel step.
  std::size_t batch = 4096;
};

struct CandidateSummary {
  int t = 0;
  double m_hat = 0.0;
  double m_hat_spar = 0.0;
  double p_spar = 1.0;
  std::uint64_t kept_edges = 0;
};

struct RunResult {
  enum class Path { kBuffer, kSketch };

  Path path = Path::kSketch;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double v_hat = 0.0;
  std::optional<double> v_hat_raw;
  bool overflow = false;
  /// Buffer path only: true when the exact brute-force value was returned.
  bool exact = false;
  std::optional<CandidateSummary> selected;
  std::optional<ParamSet> params;
  std::vector<LayerSpace> space;
  std::optional<EstimateReport> estimate;
  std::vector<int> overflow_layers;
  int t_lo = 0;
  int t_hi = 0;
  std::vector<std::string> warnings;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> selected_seed;
};

/// Single pass over the stream: edge counter, buffer of the first m_min
/// edges, and one sparsified candidate sketch per grid point 1.9^t.
RunResult run_stream(const EdgeStream& stream, const RunConfig& config);

nlohmann::json to_json(const RunResult& r);

}  // namespace dicut
