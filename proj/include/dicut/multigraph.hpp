#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dicut {

/// Vertex ids are 1-based: a graph on n vertices uses ids 1..n.
using VertexId = std::uint32_t;

struct WeightedEdge {
  VertexId from;
  VertexId to;
  double weight;
};

/// Directed weighted graph without self-loops. Integer weights encode a
/// multigraph; parallel edges may also be stored as repeated entries.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t n) : n_(n) {}

  /// Adds `weight` to the entry Adj(from, to). Throws InvalidArgument on a
  /// self-loop, an out-of-range endpoint or a negative/non-finite weight.
  void add_edge(VertexId from, VertexId to, double weight = 1.0);

  std::size_t vertex_count() const noexcept { return n_; }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  std::size_t edge_entries() const noexcept { return edges_.size(); }

  /// m_G: the sum of all adjacency entries.
  double total_weight() const noexcept { return total_weight_; }

  /// Dense n*n adjacency matrix, row-major, 0-based (row = from - 1).
  std::vector<double> dense_adjacency() const;

 private:
  std::size_t n_ = 0;
  std::vector<WeightedEdge> edges_;
  double total_weight_ = 0.0;
};

struct VertexStats {
  double deg_out = 0.0;
  double deg_in = 0.0;
  double deg = 0.0;
  /// Absent for isolated vertices.
  std::optional<double> bias;

  bool isolated() const noexcept { return !bias.has_value(); }
};

/// Bias of a vertex with the given out/in degree; absent when both are zero.
std::optional<double> bias_of(double deg_out, double deg_in) noexcept;

VertexStats vertex_stats(const Multigraph& g, VertexId v);

/// Stats for every vertex; index 0 holds vertex 1.
std::vector<VertexStats> all_vertex_stats(const Multigraph& g);

/// A 0/1 assignment; bits[v - 1] is x_v.
struct Cut {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  bool operator==(const Cut&) const = default;
};

/// Fraction of edge weight on edges (u, v) with x_u = 1 and x_v = 0.
/// Throws UndefinedValue when m_G = 0.
double cut_value(const Multigraph& g, const Cut& x);

inline constexpr std::size_t kDefaultBruteForceCeiling = 24;

struct MaxDicutResult {
  double value = 0.0;
  Cut maximizer;
};

/// Exact Max-DICUT by enumerating all 2^n assignments. Ties go to the
/// lexicographically smallest assignment (x_1 compared first).
MaxDicutResult max_dicut_bruteforce(const Multigraph& g,
                                    std::size_t ceiling = kDefaultBruteForceCeiling);

/// Keeps each edge independently with probability p. Multigraph edges with
/// integer weight c are treated as c parallel unit edges.
Multigraph sparsify(const Multigraph& g, double p, std::uint64_t seed);

/// Removes isolated vertices and relabels the rest to 1..n' in increasing
/// order. The second member maps new ids (index new-1) to old ids.
std::pair<Multigraph, std::vector<VertexId>> strip_isolated(const Multigraph& g);

}  // namespace dicut
