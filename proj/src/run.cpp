#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "dicut/error.hpp"
#include "dicut/rng.hpp"
#include "dicut/sketcher.hpp"
#include "dicut/snapshot.hpp"
#include "dicut/threads.hpp"

namespace dicut {

namespace {

constexpr std::uint64_t kCandidateTag = 0x63616e64;
constexpr std::uint64_t kSparTag = 0x73706172;

struct Candidate {
  CandidateSummary summary;
  std::unique_ptr<Sketcher> sketcher;
  FullSketch sketch;
  bool live = true;
};

// Largest t with 1.9^t <= x (x >= 1).
int grid_floor(double x) {
  int t = static_cast<int>(std::floor(std::log(x) / std::log(kGridBase)));
  while (t > 0 && std::pow(kGridBase, t) > x) --t;
  while (std::pow(kGridBase, t + 1) <= x) ++t;
  return std::max(t, 0);
}

void buffer_path(RunResult& r, const EdgeStream& stream, const RunConfig& cfg) {
  r.path = RunResult::Path::kBuffer;
  if (r.m == 0) {
    r.v_hat = 0.0;
    r.warnings.emplace_back("empty stream: value undefined, reporting 0");
    return;
  }
  const auto [g, ids] = strip_isolated(stream.to_graph());
  if (g.vertex_count() <= cfg.brute_force_ceiling) {
    r.v_hat = max_dicut_bruteforce(g, cfg.brute_force_ceiling).value;
    r.exact = true;
    return;
  }
  r.v_hat = evaluate(cfg.alg, compute_snapshot(g, cfg.alg.thresholds()));
  r.warnings.emplace_back("buffer holds " + std::to_string(g.vertex_count()) +
                          " non-isolated vertices, above the brute-force ceiling; reporting the oblivious "
                          "value of the exact snapshot (a lower bound)");
}

}  // namespace

RunResult run_stream(const EdgeStream& stream, const RunConfig& cfg) {
  if (stream.n < 2) throw InvalidArgument("run_stream needs n >= 2");
  if (!(cfg.mbound_exp > 0.0)) throw InvalidArgument("the m < n^C exponent must be positive");
  RunResult r;
  r.n = stream.n;
  r.seed = cfg.seed;

  ParamOptions opts{cfg.c_spar, cfg.slack, cfg.overrides};
  const ParamSet base = derive_params(cfg.epsilon, stream.n, 1.0, cfg.scale, cfg.alg, opts);
  const double bound = std::pow(static_cast<double>(stream.n), cfg.mbound_exp);
  r.t_lo = grid_floor(static_cast<double>(base.m_min));
  r.t_hi = std::max(r.t_lo, static_cast<int>(std::ceil(std::log(bound) / std::log(kGridBase))));

  std::vector<Candidate> cands;
  for (int t = r.t_lo; t <= r.t_hi; ++t) {
    Candidate c;
    c.summary.t = t;
    c.summary.m_hat = std::pow(kGridBase, t);
    c.summary.m_hat_spar = std::min(static_cast<double>(base.m_max), c.summary.m_hat);
    c.summary.p_spar = c.summary.m_hat_spar / c.summary.m_hat;
    const std::uint64_t seed_t = derive_seed(cfg.seed, {kCandidateTag, static_cast<std::uint64_t>(t)});
    c.sketcher = std::make_unique<Sketcher>(
        derive_params(cfg.epsilon, stream.n, std::max(1.0, c.summary.m_hat_spar), cfg.scale, cfg.alg, opts), seed_t);
    c.sketch = c.sketcher->empty();
    cands.push_back(std::move(c));
  }

  const std::size_t total = stream.edges.size();
  const std::size_t batch = std::max<std::size_t>(cfg.batch, 1);
  for (std::size_t begin = 0; begin < total; begin += batch) {
    const std::size_t end = std::min(total, begin + batch);
    std::vector<Candidate*> live;
    for (auto& c : cands)
      if (c.live) live.push_back(&c);
    const auto count = static_cast<std::int64_t>(live.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
    for (std::int64_t ci = 0; ci < count; ++ci) {
      Candidate& c = *live[static_cast<std::size_t>(ci)];
      const std::uint64_t spar_seed = derive_seed(c.sketcher->seed(), {kSparTag});
      for (std::size_t i = begin; i < end; ++i) {
        if (!keyed_coin(derive_seed(spar_seed, {i}), c.summary.p_spar)) continue;
        ++c.summary.kept_edges;
        c.sketcher->absorb(c.sketch, stream.edges[i].from, stream.edges[i].to, i);
      }
    }
    // A candidate with 1.9 m_hat(t) <= m can no longer be selected.
    const double m_now = static_cast<double>(end);
    for (auto& c : cands)
      if (c.live && c.summary.t < r.t_hi && kGridBase * c.summary.m_hat <= m_now) {
        c.live = false;
        c.sketch = FullSketch{};
      }
  }

  r.m = total;
  if (static_cast<double>(r.m) >= bound)
    r.warnings.emplace_back("edge count " + std::to_string(r.m) + " exceeds the assumed bound n^C");
  if (r.m <= base.m_min) {
    buffer_path(r, stream, cfg);
    return r;
  }

  int t_sel = grid_floor(static_cast<double>(r.m));
  if (t_sel > r.t_hi) {
    r.warnings.emplace_back("selected grid point beyond n^C; using the largest candidate");
    t_sel = r.t_hi;
  }
  Candidate& chosen = cands[static_cast<std::size_t>(t_sel - r.t_lo)];
  r.path = RunResult::Path::kSketch;
  r.selected = chosen.summary;
  r.selected_seed = chosen.sketcher->seed();
  r.params = chosen.sketcher->params();
  r.space = chosen.sketcher->space_report(chosen.sketch);
  auto out = chosen.sketcher->finalize(chosen.sketch);
  r.overflow_layers = out.overflow_layers;
  if (out.overflowed()) {
    r.overflow = true;
    return r;
  }
  r.v_hat = out.report->v_hat;
  r.v_hat_raw = out.report->v_hat_raw;
  r.estimate = std::move(out.report);
  return r;
}

nlohmann::json to_json(const RunResult& r) {
  nlohmann::json j;
  j["path"] = r.path == RunResult::Path::kBuffer ? "buffer" : "sketch";
  j["v_hat"] = r.overflow ? nlohmann::json(nullptr) : nlohmann::json(r.v_hat);
  j["v_hat_raw"] = r.v_hat_raw ? nlohmann::json(*r.v_hat_raw) : nlohmann::json(nullptr);
  j["exact"] = r.exact;
  j["m"] = r.m;
  j["n"] = r.n;
  j["selected_m_hat"] = r.selected ? nlohmann::json(r.selected->m_hat) : nlohmann::json(nullptr);
  if (r.selected)
    j["selected"] = {{"t", r.selected->t},
                     {"m_hat_spar", r.selected->m_hat_spar},
                     {"p_spar", r.selected->p_spar},
                     {"kept_edges", r.selected->kept_edges}};
  j["grid"] = {{"t_lo", r.t_lo}, {"t_hi", r.t_hi}, {"base", kGridBase}};
  j["params"] = r.params ? to_json(*r.params) : nlohmann::json(nullptr);

  auto layers = to_json(r.space);
  if (r.estimate)
    for (std::size_t a = 0; a < layers.size() && a < r.estimate->layers.size(); ++a)
      layers[a]["active_vertices"] = r.estimate->layers[a].active_vertices;
  j["per_layer"] = std::move(layers);
  j["overflow"] = r.overflow_layers;
  j["seeds"] = {{"seed", r.seed},
                {"candidate_seed", r.selected_seed ? nlohmann::json(*r.selected_seed) : nlohmann::json(nullptr)}};
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace dicut
