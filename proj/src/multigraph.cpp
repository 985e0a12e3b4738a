#include "dicut/multigraph.hpp"

#include <cmath>
#include <random>
#include <string>

#include "dicut/error.hpp"
#include "dicut/kernels.hpp"
#include "dicut/rng.hpp"

namespace dicut {

void Multigraph::add_edge(VertexId from, VertexId to, double weight) {
  if (from < 1 || from > n_ || to < 1 || to > n_)
    throw InvalidArgument("edge endpoint out of range: " + std::to_string(from) + " -> " +
                          std::to_string(to));
  if (from == to) throw InvalidArgument("self-loop at vertex " + std::to_string(from));
  if (!std::isfinite(weight) || weight < 0.0) throw InvalidArgument("edge weight must be finite and >= 0");
  edges_.push_back({from, to, weight});
  total_weight_ += weight;
}

std::vector<double> Multigraph::dense_adjacency() const {
  std::vector<double> adj(n_ * n_, 0.0);
  for (const auto& e : edges_) adj[(e.from - 1) * n_ + (e.to - 1)] += e.weight;
  return adj;
}

std::optional<double> bias_of(double deg_out, double deg_in) noexcept {
  const double deg = deg_out + deg_in;
  if (!(deg > 0.0)) return std::nullopt;
  return (deg_out - deg_in) / deg;
}

VertexStats vertex_stats(const Multigraph& g, VertexId v) {
  if (v < 1 || v > g.vertex_count()) throw InvalidArgument("vertex id out of range: " + std::to_string(v));
  VertexStats s;
  for (const auto& e : g.edges()) {
    if (e.from == v) s.deg_out += e.weight;
    if (e.to == v) s.deg_in += e.weight;
  }
  s.deg = s.deg_out + s.deg_in;
  s.bias = bias_of(s.deg_out, s.deg_in);
  return s;
}

std::vector<VertexStats> all_vertex_stats(const Multigraph& g) {
  std::vector<VertexStats> out(g.vertex_count());
  for (const auto& e : g.edges()) {
    out[e.from - 1].deg_out += e.weight;
    out[e.to - 1].deg_in += e.weight;
  }
  for (auto& s : out) {
    s.deg = s.deg_out + s.deg_in;
    s.bias = bias_of(s.deg_out, s.deg_in);
  }
  return out;
}

double cut_value(const Multigraph& g, const Cut& x) {
  if (x.size() != g.vertex_count()) throw InvalidArgument("cut length does not match vertex count");
  if (!(g.total_weight() > 0.0)) throw UndefinedValue("cut value of a graph with no edge weight");
  double sat = 0.0;
  for (const auto& e : g.edges())
    if (x.bits[e.from - 1] && !x.bits[e.to - 1]) sat += e.weight;
  return sat / g.total_weight();
}

MaxDicutResult max_dicut_bruteforce(const Multigraph& g, std::size_t ceiling) {
  if (g.vertex_count() > ceiling)
    throw ResourceGuard("brute force refused: n = " + std::to_string(g.vertex_count()) +
                        " exceeds ceiling " + std::to_string(ceiling));
  if (g.vertex_count() > 62) throw ResourceGuard("brute force limited to 62 vertices");
  if (!(g.total_weight() > 0.0)) throw UndefinedValue("Max-DICUT of a graph with no edge weight");
  const int n = static_cast<int>(g.vertex_count());
  const auto adj = g.dense_adjacency();
  const auto scan = kernels::parallel::max_dicut_scan(adj, n);
  MaxDicutResult r;
  r.maximizer.bits.resize(g.vertex_count());
  for (int v = 0; v < n; ++v) r.maximizer.bits[v] = static_cast<std::uint8_t>((scan.mask >> v) & 1U);
  r.value = cut_value(g, r.maximizer);
  return r;
}

Multigraph sparsify(const Multigraph& g, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("sparsification probability must lie in (0, 1]");
  Multigraph out(g.vertex_count());
  if (p == 1.0) {
    for (const auto& e : g.edges()) out.add_edge(e.from, e.to, e.weight);
    return out;
  }
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  for (const auto& e : g.edges()) {
    double kept = 0.0;
    if (e.weight == std::floor(e.weight) && e.weight < 0x1.0p53) {
      std::binomial_distribution<std::uint64_t> draw(static_cast<std::uint64_t>(e.weight), p);
      kept = static_cast<double>(draw(rng));
    } else if (coin(rng)) {
      kept = e.weight;
    }
    if (kept > 0.0) out.add_edge(e.from, e.to, kept);
  }
  return out;
}

std::pair<Multigraph, std::vector<VertexId>> strip_isolated(const Multigraph& g) {
  std::vector<VertexId> new_id(g.vertex_count() + 1, 0);
  std::vector<VertexId> old_ids;
  const auto stats = all_vertex_stats(g);
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) {
    if (stats[v - 1].isolated()) continue;
    old_ids.push_back(static_cast<VertexId>(v));
    new_id[v] = static_cast<VertexId>(old_ids.size());
  }
  Multigraph h(old_ids.size());
  for (const auto& e : g.edges())
    if (e.weight > 0.0) h.add_edge(new_id[e.from], new_id[e.to], e.weight);
  return {std::move(h), std::move(old_ids)};
}

}  // namespace dicut
