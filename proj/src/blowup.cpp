#include "dicut/blowup.hpp"

#include <string>

#include "dicut/error.hpp"
#include "dicut/window.hpp"

namespace dicut {

Blowup blowup_graph(const Multigraph& g, const ThresholdVector& t, int w) {
  const int l = t.length();
  if (w < 0 || w >= l) throw InvalidArgument("blowup needs 0 <= w < l");
  const auto stats = all_vertex_stats(g);
  std::vector<ClassIndex> cls(stats.size());
  std::vector<VertexId> first_copy(stats.size());
  Blowup out;
  for (std::size_t v = 0; v < stats.size(); ++v) {
    if (stats[v].isolated())
      throw InvalidArgument("blowup: vertex " + std::to_string(v + 1) + " is isolated; strip it first");
    cls[v] = t.index_of(*stats[v].bias);
    first_copy[v] = static_cast<VertexId>(out.labels.size() + 1);
    const auto r = window_range(w, l, cls[v]);
    for (int i = r.lo; i <= r.hi; ++i) out.labels.emplace_back(static_cast<VertexId>(v + 1), i);
  }
  out.graph = Multigraph(out.labels.size());
  for (const auto& e : g.edges()) {
    if (e.weight == 0.0) continue;
    const ClassIndex bu = cls[e.from - 1];
    const ClassIndex bv = cls[e.to - 1];
    const double share = matrix_normalizer(w, l, bu, bv) * e.weight;
    const auto ru = window_range(w, l, bu);
    const auto rv = window_range(w, l, bv);
    for (int i = ru.lo; i <= ru.hi; ++i)
      for (int j = rv.lo; j <= rv.hi; ++j)
        out.graph.add_edge(first_copy[e.from - 1] + static_cast<VertexId>(i - ru.lo),
                           first_copy[e.to - 1] + static_cast<VertexId>(j - rv.lo), share);
  }
  return out;
}

}  // namespace dicut
