#pragma once

// Random test objects shared by the property suites.

#include <random>

#include "dicut/multigraph.hpp"
#include "dicut/rng.hpp"
#include "dicut/tensor.hpp"

namespace dicut::detail {

inline void fill_simplex(std::span<double> xs, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  double s = 0.0;
  for (auto& x : xs) s += (x = e(rng));
  for (auto& x : xs) x /= s;
}

inline Matrix random_simplex_matrix(int l, Rng& rng) {
  Matrix m(l);
  fill_simplex(m.data(), rng);
  return m;
}

inline Array4 random_simplex_array(int k, int l, Rng& rng) {
  Array4 a(k, l);
  fill_simplex(a.data(), rng);
  return a;
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// m uniformly random ordered pairs on n >= 2 vertices, unit weights.
inline Multigraph random_graph(std::size_t n, std::size_t m, Rng& rng) {
  Multigraph g(n);
  std::uniform_int_distribution<VertexId> pick(1, static_cast<VertexId>(n));
  std::uniform_int_distribution<VertexId> other(1, static_cast<VertexId>(n - 1));
  for (std::size_t e = 0; e < m; ++e) {
    const VertexId u = pick(rng);
    VertexId v = other(rng);
    if (v >= u) ++v;
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace dicut::detail
