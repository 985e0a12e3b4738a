#pragma once

#include <utility>
#include <vector>

#include "dicut/multigraph.hpp"
#include "dicut/partition.hpp"

namespace dicut {

/// Weighted blowup K of G: vertex v becomes one copy (v, i') per bias class i'
/// in Win^{w,l}(b-ind(v)); the weight of u -> v is split evenly over all
/// copy pairs in the 2D window around (b-ind(u), b-ind(v)).
struct Blowup {
  Multigraph graph;
  /// labels[id - 1] = (original vertex, bias class of the copy).
  std::vector<std::pair<VertexId, ClassIndex>> labels;
};

/// Throws InvalidArgument when G has an isolated vertex or w >= l.
Blowup blowup_graph(const Multigraph& g, const ThresholdVector& t, int w);

}  // namespace dicut
