#include "dicut/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "dicut/error.hpp"
#include "dicut/rng.hpp"
#include "dicut/snapshot.hpp"
#include "dicut/threads.hpp"

namespace dicut {

namespace {

constexpr std::uint64_t kOrderTag = 0x6f726472;
constexpr std::uint64_t kTrialTag = 0x7472696c;
constexpr std::uint64_t kProbeTag = 0x70726f62;
constexpr int kSampledCuts = 32;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

VertexId pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<VertexId>(lo, hi)(rng);
}

EdgeStream erdos_renyi(const GeneratorSpec& s, Rng& rng) {
  EdgeStream out{s.n, {}};
  require(s.m == 0 || s.n >= 2, "erdos-renyi-directed needs n >= 2 when m > 0");
  for (std::uint64_t e = 0; e < s.m; ++e) {
    const VertexId u = pick(rng, 1, s.n);
    VertexId v = pick(rng, 1, s.n - 1);
    if (v >= u) ++v;
    out.edges.push_back({u, v});
  }
  return out;
}

EdgeStream planted(const GeneratorSpec& s, Rng& rng) {
  require(s.n >= 2, "planted-dicut needs n >= 2");
  require(s.p_in >= 0 && s.p_out >= 0 && s.p_in + s.p_out > 0, "planted-dicut needs p_in, p_out >= 0, not both 0");
  std::vector<VertexId> order(s.n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> in_s(s.n + 1, 0);
  for (std::uint64_t i = 0; i < s.n / 2; ++i) in_s[order[i]] = 1;
  const std::vector<VertexId> side(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(s.n / 2));
  const std::vector<VertexId> rest(order.begin() + static_cast<std::ptrdiff_t>(s.n / 2), order.end());
  std::bernoulli_distribution planted_edge(s.p_out / (s.p_in + s.p_out));
  EdgeStream out{s.n, {}};
  for (std::uint64_t e = 0; e < s.m; ++e) {
    if (planted_edge(rng)) {
      out.edges.push_back({side[pick(rng, 0, side.size() - 1)], rest[pick(rng, 0, rest.size() - 1)]});
      continue;
    }
    for (;;) {
      const VertexId u = pick(rng, 1, s.n);
      const VertexId v = pick(rng, 1, s.n);
      if (u == v || (in_s[u] && !in_s[v])) continue;
      out.edges.push_back({u, v});
      break;
    }
  }
  return out;
}

EdgeStream star(const GeneratorSpec& s) {
  require(s.n >= 2, "star needs n >= 2");
  EdgeStream out{s.n, {}};
  for (VertexId v = 2; v <= s.n; ++v) out.edges.push_back(s.star_out ? StreamEdge{1, v} : StreamEdge{v, 1});
  return out;
}

EdgeStream power_law(const GeneratorSpec& s, Rng& rng) {
  require(s.alpha > 1.0, "power-law needs alpha > 1");
  require(s.m == 0 || s.n >= 2, "power-law needs n >= 2 when m > 0");
  std::vector<double> weight(s.n);
  for (std::uint64_t v = 0; v < s.n; ++v) weight[v] = std::pow(static_cast<double>(v + 1), -1.0 / (s.alpha - 1.0));
  std::discrete_distribution<std::uint64_t> draw(weight.begin(), weight.end());
  EdgeStream out{s.n, {}};
  for (std::uint64_t e = 0; e < s.m; ++e) {
    const VertexId u = draw(rng) + 1;
    VertexId v = u;
    while (v == u) v = draw(rng) + 1;
    out.edges.push_back({u, v});
  }
  return out;
}

EdgeStream cycle_union(const GeneratorSpec& s) {
  require(s.cycle_length >= 2, "k-cycle-union needs k >= 2");
  const auto k = static_cast<std::uint64_t>(s.cycle_length);
  const std::uint64_t cycles = s.n / k;
  require(cycles >= 1, "k-cycle-union needs n >= k");
  std::vector<StreamEdge> pass;
  for (std::uint64_t c = 0; c < cycles; ++c)
    for (std::uint64_t i = 0; i < k; ++i)
      pass.push_back({static_cast<VertexId>(c * k + i + 1), static_cast<VertexId>(c * k + (i + 1) % k + 1)});
  EdgeStream out{s.n, {}};
  if (s.m == 0) {
    out.edges = pass;
    return out;
  }
  for (std::uint64_t e = 0; e < s.m; ++e) out.edges.push_back(pass[e % pass.size()]);
  return out;
}

std::string fmt(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, r.ptr};
}

}  // namespace

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> f = {"erdos-renyi-directed", "planted-dicut", "star", "power-law",
                                             "k-cycle-union"};
  return f;
}

EdgeStream generate(const GeneratorSpec& spec) {
  require(spec.n >= 1, "generator needs n >= 1");
  Rng rng(spec.seed);
  if (spec.family == "erdos-renyi-directed") return erdos_renyi(spec, rng);
  if (spec.family == "planted-dicut") return planted(spec, rng);
  if (spec.family == "star") return star(spec);
  if (spec.family == "power-law") return power_law(spec, rng);
  if (spec.family == "k-cycle-union") return cycle_union(spec);
  throw InvalidArgument("unknown generator family: " + spec.family);
}

Ordering parse_ordering(const std::string& name) {
  if (name == "as-generated") return Ordering::kAsGenerated;
  if (name == "random-permutation") return Ordering::kRandomPermutation;
  if (name == "adversarial") return Ordering::kAdversarial;
  throw InvalidArgument("unknown ordering: " + name);
}

std::string ordering_name(Ordering o) {
  switch (o) {
    case Ordering::kAsGenerated: return "as-generated";
    case Ordering::kRandomPermutation: return "random-permutation";
    case Ordering::kAdversarial: return "adversarial";
  }
  return "as-generated";
}

EdgeStream order_stream(EdgeStream s, Ordering o, std::uint64_t seed) {
  if (o == Ordering::kRandomPermutation) {
    Rng rng(derive_seed(seed, {kOrderTag}));
    std::shuffle(s.edges.begin(), s.edges.end(), rng);
  } else if (o == Ordering::kAdversarial) {
    std::stable_sort(s.edges.begin(), s.edges.end(), [](const StreamEdge& a, const StreamEdge& b) {
      return a.from != b.from ? a.from < b.from : a.to < b.to;
    });
  }
  return s;
}

std::vector<CompareRow> compare(const CompareConfig& cfg) {
  require(cfg.trials >= 1, "compare needs trials >= 1");
  std::vector<CompareRow> rows(static_cast<std::size_t>(cfg.trials));
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (int t = 0; t < cfg.trials; ++t) {
    const auto start = std::chrono::steady_clock::now();
    CompareRow& row = rows[static_cast<std::size_t>(t)];
    row.trial = t;
    row.graph_seed = derive_seed(cfg.generator.seed, {kTrialTag, static_cast<std::uint64_t>(t)});
    row.sketch_seed = derive_seed(cfg.run.seed, {kTrialTag, static_cast<std::uint64_t>(t)});

    GeneratorSpec gen = cfg.generator;
    gen.seed = row.graph_seed;
    const EdgeStream stream = order_stream(generate(gen), cfg.ordering, row.graph_seed);
    RunConfig run = cfg.run;
    run.seed = row.sketch_seed;
    const RunResult res = run_stream(stream, run);

    row.n = stream.n;
    row.m = stream.edges.size();
    row.overflow = res.overflow;
    row.v_hat = res.overflow ? 0.0 : res.v_hat;
    if (res.path == RunResult::Path::kBuffer) {
      row.stored_edges = row.m;
      row.stored_vertices = strip_isolated(stream.to_graph()).first.vertex_count();
    } else {
      for (const auto& layer : res.space) {
        row.stored_vertices += layer.vertices;
        row.stored_edges += layer.edges;
      }
    }

    const Multigraph g = strip_isolated(stream.to_graph()).first;
    if (g.total_weight() == 0.0) {
      row.reference_kind = "EXACT";
    } else if (g.vertex_count() <= run.brute_force_ceiling) {
      row.reference = max_dicut_bruteforce(g, run.brute_force_ceiling).value;
      row.reference_kind = "EXACT";
    } else {
      double best = evaluate(run.alg, compute_snapshot(g, run.alg.thresholds()));
      for (int s = 0; s < kSampledCuts; ++s)
        best = std::max(best, cut_value(g, oblivious_sample(run.alg, g,
                                                            derive_seed(row.graph_seed, {kProbeTag,
                                                                                         static_cast<std::uint64_t>(s)}))));
      row.reference = best;
      row.reference_kind = "LOWER-BOUND";
    }
    row.ratio = row.reference > 0 && !row.overflow ? row.v_hat / row.reference : 0.0;
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows, bool timing) {
  std::ostringstream out;
  out << "# dicut-sketch compare schema=" << kCompareSchemaVersion << '\n';
  out << "trial,graph_seed,sketch_seed,n,m,v_hat,overflow,reference,reference_kind,ratio,stored_vertices,stored_edges";
  if (timing) out << ",seconds";
  out << '\n';
  double lo = 0.0, sum = 0.0;
  int counted = 0;
  for (const auto& r : rows) {
    out << r.trial << ',' << r.graph_seed << ',' << r.sketch_seed << ',' << r.n << ',' << r.m << ','
        << (r.overflow ? std::string() : fmt(r.v_hat)) << ',' << (r.overflow ? 1 : 0) << ',' << fmt(r.reference)
        << ',' << r.reference_kind << ',' << (r.overflow ? std::string() : fmt(r.ratio)) << ','
        << r.stored_vertices << ',' << r.stored_edges;
    if (timing) out << ',' << fmt(r.seconds);
    out << '\n';
    if (r.overflow) continue;
    lo = counted == 0 ? r.ratio : std::min(lo, r.ratio);
    sum += r.ratio;
    ++counted;
  }
  const std::string pad = timing ? ",,," : ",,";
  const std::string lead = ",,,,,,,,,";
  out << "summary-min" << lead << (counted ? fmt(lo) : std::string()) << pad << '\n';
  out << "summary-mean" << lead << (counted ? fmt(sum / counted) : std::string()) << pad << '\n';
  return out.str();
}

}  // namespace dicut
