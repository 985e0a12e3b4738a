#include "dicut/sketcher.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dicut/error.hpp"
#include "dicut/rng.hpp"
#include "dicut/snapshot.hpp"
#include "dicut/window.hpp"

namespace dicut {

namespace {

constexpr std::uint64_t kHashTag = 0x68617368;  // per-layer vertex hash
constexpr std::uint64_t kCoinTag = 0x636f696e;  // per-edge, per-layer coin

constexpr std::uint64_t kSaturate = std::uint64_t{1} << 62;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturate / b ? kSaturate : a * b;
}

}  // namespace

// ---------------------------------------------------------------------------
// LayerSketch

std::uint64_t LayerSketch::retained_degree(VertexId v) const {
  const auto it = degree_.find(v);
  return it == degree_.end() ? 0 : it->second;
}

std::vector<VertexId> LayerSketch::vertices() const {
  std::vector<VertexId> out;
  out.reserve(degree_.size());
  for (const auto& [v, d] : degree_) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

void LayerSketch::mark_overflow(std::optional<std::uint64_t> trigger) {
  overflow_ = true;
  trigger_ = trigger;
  degree_.clear();
  edges_.clear();
  edges_.shrink_to_fit();
}

void LayerSketch::add_vertex(VertexId v, std::uint64_t trigger, std::uint64_t v_cutoff) {
  if (overflow_ || !degree_.try_emplace(v, 0).second) return;
  if (degree_.size() > v_cutoff) mark_overflow(trigger);
}

void LayerSketch::keep_if_room(const StoredEdge& e, std::uint64_t e_cutoff) {
  const auto fu = degree_.find(e.from);
  const auto fv = degree_.find(e.to);
  const bool room = (fu != degree_.end() && fu->second < e_cutoff) || (fv != degree_.end() && fv->second < e_cutoff);
  if (!room) return;
  edges_.push_back(e);
  if (fu != degree_.end()) ++fu->second;
  if (fv != degree_.end()) ++fv->second;
}

void LayerSketch::absorb(const StoredEdge& e, bool from_stored, bool to_stored, std::uint64_t v_cutoff,
                         std::uint64_t e_cutoff) {
  if (overflow_ || (!from_stored && !to_stored)) return;
  if (from_stored) add_vertex(e.from, e.index, v_cutoff);
  if (to_stored) add_vertex(e.to, e.index, v_cutoff);
  if (!overflow_) keep_if_room(e, e_cutoff);
}

LayerSketch LayerSketch::overflow_marker(std::optional<std::uint64_t> trigger) {
  LayerSketch s;
  s.mark_overflow(trigger);
  return s;
}

LayerSketch LayerSketch::merge(const LayerSketch& x, const LayerSketch& y, std::uint64_t v_cutoff,
                               std::uint64_t e_cutoff) {
  if (x.overflow_ || y.overflow_) {
    std::optional<std::uint64_t> t;
    if (x.overflow_ && y.overflow_ && x.trigger_ && y.trigger_)
      t = std::min(*x.trigger_, *y.trigger_);
    else
      t = x.overflow_ ? x.trigger_ : y.trigger_;
    return overflow_marker(t);
  }
  LayerSketch out;
  out.degree_.reserve(x.degree_.size() + y.degree_.size());
  for (const auto& [v, d] : x.degree_) out.degree_.emplace(v, 0);
  for (const auto& [v, d] : y.degree_) out.degree_.emplace(v, 0);
  if (out.degree_.size() > v_cutoff) return overflow_marker(std::nullopt);

  std::vector<StoredEdge> all;
  all.reserve(x.edges_.size() + y.edges_.size());
  std::merge(x.edges_.begin(), x.edges_.end(), y.edges_.begin(), y.edges_.end(), std::back_inserter(all),
             [](const StoredEdge& p, const StoredEdge& q) { return p.index < q.index; });
  out.edges_.reserve(all.size());
  for (const auto& e : all) out.keep_if_room(e, e_cutoff);
  return out;
}

bool LayerSketch::operator==(const LayerSketch& o) const {
  return overflow_ == o.overflow_ && trigger_ == o.trigger_ && degree_ == o.degree_ && edges_ == o.edges_;
}

// ---------------------------------------------------------------------------
// Sketcher

Sketcher::Sketcher(ParamSet params, std::uint64_t seed) : params_(std::move(params)), seed_(seed) {
  key_ = {params_.k, params_.v_cutoff, params_.e_cutoff, seed_};
  hashes_.reserve(static_cast<std::size_t>(params_.k));
  for (int a = 1; a <= params_.k; ++a)
    hashes_.push_back(sample_hash(4, params_.n, params_.layer(a).hash_range,
                                  derive_seed(seed_, {kHashTag, static_cast<std::uint64_t>(a)})));
}

FullSketch Sketcher::empty() const {
  FullSketch s;
  s.key = key_;
  s.layers.resize(static_cast<std::size_t>(params_.k));
  return s;
}

void Sketcher::check_edge(VertexId u, VertexId v) const {
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (u < 1 || v < 1 || u > params_.n || v > params_.n)
    throw InvalidArgument("edge endpoint outside 1..n: " + std::to_string(u) + " -> " + std::to_string(v));
}

bool Sketcher::edge_coin(std::uint64_t index, int a) const {
  const double q = params_.layer(a).q;
  if (q >= 1.0) return true;
  return keyed_coin(derive_seed(seed_, {kCoinTag, index, static_cast<std::uint64_t>(a)}), q);
}

void Sketcher::absorb(FullSketch& s, VertexId u, VertexId v, std::uint64_t index) const {
  if (s.key != key_) throw InvalidArgument("sketch was built with different parameters");
  check_edge(u, v);
  ++s.m;
  for (int a = 1; a <= params_.k; ++a) {
    auto& layer = s.layers[static_cast<std::size_t>(a - 1)];
    if (layer.overflowed() || !edge_coin(index, a)) continue;
    const auto& h = hashes_[static_cast<std::size_t>(a - 1)];
    const bool trivial = h.range() == 1;
    const bool fu = trivial || h(u) == 1;
    const bool fv = trivial || h(v) == 1;
    layer.absorb({index, u, v}, fu, fv, params_.v_cutoff, params_.e_cutoff);
  }
}

FullSketch Sketcher::sketch_edge(VertexId u, VertexId v, std::uint64_t index) const {
  FullSketch s = empty();
  absorb(s, u, v, index);
  return s;
}

FullSketch Sketcher::combine(const FullSketch& x, const FullSketch& y) const {
  if (x.key != key_ || y.key != key_) throw InvalidArgument("cannot combine sketches built with different parameters");
  FullSketch out = empty();
  out.m = x.m + y.m;
  for (std::size_t a = 0; a < out.layers.size(); ++a)
    out.layers[a] = LayerSketch::merge(x.layers[a], y.layers[a], params_.v_cutoff, params_.e_cutoff);
  return out;
}

namespace {

struct Apparent {
  ClassIndex deg_class;
  ClassIndex bias_class;
};

}  // namespace

FinalizeOutcome Sketcher::finalize(const FullSketch& s) const {
  if (s.key != key_) throw InvalidArgument("sketch was built with different parameters");
  FinalizeOutcome outcome;
  for (int a = 1; a <= params_.k; ++a)
    if (s.layers[static_cast<std::size_t>(a - 1)].overflowed()) outcome.overflow_layers.push_back(a);
  if (!outcome.overflow_layers.empty()) return outcome;

  const int k = params_.k;
  const int l = params_.l;
  const int w = params_.w;
  const double d_top = params_.d.back();

  EstimateReport rep;
  rep.a_hat = Array4(k, l);

  // Vertices of layer a whose apparent degree class lies in Win^{w,k}(a).
  std::vector<std::unordered_map<VertexId, Apparent>> active(static_cast<std::size_t>(k));
  for (int a = 1; a <= k; ++a) {
    const auto& layer = s.layers[static_cast<std::size_t>(a - 1)];
    std::unordered_map<VertexId, std::pair<std::uint64_t, std::uint64_t>> io;
    for (const auto& e : layer.edges()) {
      if (layer.stores(e.from)) ++io[e.from].first;
      if (layer.stores(e.to)) ++io[e.to].second;
    }
    const double q = params_.layer(a).q;
    auto& act = active[static_cast<std::size_t>(a - 1)];
    for (const auto& [v, od] : io) {
      const std::uint64_t deg = od.first + od.second;
      if (deg == 0 || deg >= params_.e_cutoff) continue;
      const double d_est = std::min(static_cast<double>(deg) / q, d_top);
      const double b_est = (static_cast<double>(od.first) - static_cast<double>(od.second)) / static_cast<double>(deg);
      const ClassIndex dc = params_.d.index_of(d_est);
      if (std::abs(dc - a) > w) continue;
      act.emplace(v, Apparent{dc, params_.t.index_of(b_est)});
    }
    rep.layers.push_back({a, layer.vertex_count(), layer.edge_count(), act.size()});
  }

  const double m = static_cast<double>(s.m);
  auto contribute = [&](int a, int b, int c, const Apparent& pu, const Apparent& pv) {
    const double nu = normalizer(NormalizerKind::kSmooth, w, k, l, {pu.deg_class, pv.deg_class, pu.bias_class, pv.bias_class});
    const double scaled = nu / (m * params_.layer(c).q * params_.layer(a).p * params_.layer(b).p);
    const auto ri = window_range(w, l, pu.bias_class);
    const auto rj = window_range(w, l, pv.bias_class);
    for (int i = ri.lo; i <= ri.hi; ++i)
      for (int j = rj.lo; j <= rj.hi; ++j) rep.a_hat.at(a, b, i, j) += scaled;
  };

  for (int c = 1; c <= k; ++c) {
    const auto& act_c = active[static_cast<std::size_t>(c - 1)];
    for (const auto& e : s.layers[static_cast<std::size_t>(c - 1)].edges()) {
      // Pairs (a, b) with min(a, b) = c: first a = c, b >= c; then b = c, a > c.
      if (const auto iu = act_c.find(e.from); iu != act_c.end())
        for (int b = c; b <= k; ++b) {
          const auto& act_b = active[static_cast<std::size_t>(b - 1)];
          if (const auto iv = act_b.find(e.to); iv != act_b.end()) contribute(c, b, c, iu->second, iv->second);
        }
      if (const auto iv = act_c.find(e.to); iv != act_c.end())
        for (int a = c + 1; a <= k; ++a) {
          const auto& act_a = active[static_cast<std::size_t>(a - 1)];
          if (const auto iu = act_a.find(e.from); iu != act_a.end()) contribute(a, c, c, iu->second, iv->second);
        }
    }
  }

  rep.m_hat = project(rep.a_hat);
  rep.alg_value = evaluate(params_.alg, rep.m_hat);
  rep.v_hat_raw = rep.alg_value - params_.slack;
  rep.v_hat = std::clamp(rep.v_hat_raw, 0.0, 1.0);
  outcome.report = std::move(rep);
  return outcome;
}

std::vector<LayerSpace> Sketcher::space_report(const FullSketch& s) const {
  std::vector<LayerSpace> out;
  for (int a = 1; a <= static_cast<int>(s.layers.size()); ++a) {
    const auto& layer = s.layers[static_cast<std::size_t>(a - 1)];
    LayerSpace r;
    r.a = a;
    r.overflow = layer.overflowed();
    r.trigger = layer.overflow_trigger();
    r.vertices = layer.vertex_count();
    r.edges = layer.edge_count();
    r.vertex_bound = params_.v_cutoff;
    r.edge_bound = saturating_mul(params_.v_cutoff, params_.e_cutoff + 1);
    r.within_bounds = r.vertices <= r.vertex_bound && r.edges <= r.edge_bound;
    out.push_back(r);
  }
  return out;
}

FullSketch sketch_stream(const Sketcher& sk, const EdgeStream& stream) {
  FullSketch s = sk.empty();
  for (std::size_t i = 0; i < stream.edges.size(); ++i) sk.absorb(s, stream.edges[i].from, stream.edges[i].to, i);
  return s;
}

nlohmann::json to_json(const std::vector<LayerSpace>& space) {
  auto out = nlohmann::json::array();
  for (const auto& r : space) {
    nlohmann::json j = {{"a", r.a},
                        {"overflow", r.overflow},
                        {"stored_vertices", r.vertices},
                        {"stored_edges", r.edges},
                        {"vertex_bound", r.vertex_bound},
                        {"edge_bound", r.edge_bound},
                        {"within_bounds", r.within_bounds}};
    j["trigger"] = r.trigger ? nlohmann::json(*r.trigger) : nlohmann::json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace dicut
