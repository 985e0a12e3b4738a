#include "dicut/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include "dicut/threads.hpp"

namespace dicut::kernels {

std::uint64_t lex_key(std::uint64_t mask, int n) noexcept {
  std::uint64_t key = 0;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1U) key |= std::uint64_t{1} << (n - 1 - v);
  return key;
}

double tie_tolerance(std::span<const double> adjacency) noexcept {
  double total = 0.0;
  for (double x : adjacency) total += x;
  return std::max(total, 1.0) * 1e-12;
}

namespace {

double mask_weight(std::span<const double> adj, int n, std::uint64_t mask) {
  double s = 0.0;
  for (int u = 0; u < n; ++u) {
    if (!((mask >> u) & 1U)) continue;
    for (int v = 0; v < n; ++v)
      if (!((mask >> v) & 1U)) s += adj[static_cast<std::size_t>(u) * n + v];
  }
  return s;
}

}  // namespace

namespace reference {

Matrix smooth_matrix(const Matrix& m, int w) {
  const int l = m.side();
  Matrix out(l);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      const auto ri = window_range(w, l, i);
      const auto rj = window_range(w, l, j);
      double s = 0.0;
      for (int ii = ri.lo; ii <= ri.hi; ++ii)
        for (int jj = rj.lo; jj <= rj.hi; ++jj) s += matrix_normalizer(w, l, ii, jj) * m.at(ii, jj);
      out.at(i, j) = s;
    }
  return out;
}

Array4 window_sum(const Array4& a, const WindowSumSpec& spec) {
  const int k = a.k();
  const int l = a.l();
  Array4 out(k, l);
  for (int x0 = 1; x0 <= k; ++x0)
    for (int x1 = 1; x1 <= k; ++x1)
      for (int x2 = 1; x2 <= l; ++x2)
        for (int x3 = 1; x3 <= l; ++x3) {
          double s = 0.0;
          for (const auto& y : window_4d(spec.radius, k, l, {x0, x1, x2, x3}))
            s += normalizer(spec.kind, spec.w, k, l, y) * a.at(y[0], y[1], y[2], y[3]);
          out.at(x0, x1, x2, x3) = s;
        }
  return out;
}

ScanResult max_dicut_scan(std::span<const double> adjacency, int n) {
  const std::uint64_t total = std::uint64_t{1} << n;
  const double tol = tie_tolerance(adjacency);
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < total; ++mask) best = std::max(best, mask_weight(adjacency, n, mask));
  ScanResult r{best, 0};
  std::uint64_t best_key = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (mask_weight(adjacency, n, mask) < best - tol) continue;
    const auto key = lex_key(mask, n);
    if (key < best_key) {
      best_key = key;
      r.mask = mask;
    }
  }
  return r;
}

}  // namespace reference

namespace parallel {

namespace {

// Per-axis layout of a dense row-major box.
struct Box {
  std::vector<int> len;
  std::vector<std::size_t> stride;
  std::size_t size = 1;

  explicit Box(std::vector<int> lengths) : len(std::move(lengths)), stride(len.size()) {
    for (std::size_t d = len.size(); d-- > 0;) {
      stride[d] = size;
      size *= static_cast<std::size_t>(len[d]);
    }
  }
};

// out = sum of in over a radius-r window along one axis, clipped to the box.
void axis_box_sum(const Box& box, std::size_t axis, int r, const double* in, double* out) {
  const auto len = static_cast<std::size_t>(box.len[axis]);
  const std::size_t st = box.stride[axis];
  const auto total = static_cast<std::int64_t>(box.size);
#pragma omp parallel for schedule(static) num_threads(worker_threads())
  for (std::int64_t e = 0; e < total; ++e) {
    const auto idx = static_cast<std::size_t>(e);
    const std::size_t c = (idx / st) % len;
    const std::size_t lo = c >= static_cast<std::size_t>(r) ? c - r : 0;
    const std::size_t hi = std::min(len - 1, c + static_cast<std::size_t>(r));
    const double* base = in + (idx - c * st);
    double s = 0.0;
    for (std::size_t cc = lo; cc <= hi; ++cc) s += base[cc * st];
    out[idx] = s;
  }
}

// Weights every entry by the product of per-axis normalizer factors, then
// sums over the radius-r window one axis at a time.
std::vector<double> separable_window_sum(const Box& box, std::span<const double> in, int r, int w,
                                         NormalizerKind kind) {
  const std::size_t dims = box.len.size();
  std::vector<std::vector<double>> factor(dims);
  for (std::size_t d = 0; d < dims; ++d)
    for (int i = 1; i <= box.len[d]; ++i) factor[d].push_back(normalizer_factor(kind, w, box.len[d], i));

  std::vector<double> cur(box.size), next(box.size);
  const auto total = static_cast<std::int64_t>(box.size);
#pragma omp parallel for schedule(static) num_threads(worker_threads())
  for (std::int64_t e = 0; e < total; ++e) {
    const auto idx = static_cast<std::size_t>(e);
    double f = 1.0;
    for (std::size_t d = 0; d < dims; ++d) f *= factor[d][(idx / box.stride[d]) % box.len[d]];
    cur[idx] = f * in[idx];
  }
  for (std::size_t d = 0; d < dims; ++d) {
    axis_box_sum(box, d, r, cur.data(), next.data());
    cur.swap(next);
  }
  return cur;
}

}  // namespace

Matrix smooth_matrix(const Matrix& m, int w) {
  const Box box({m.side(), m.side()});
  const auto res = separable_window_sum(box, m.data(), w, w, NormalizerKind::kSmooth);
  Matrix out(m.side());
  std::copy(res.begin(), res.end(), out.data().begin());
  return out;
}

Array4 window_sum(const Array4& a, const WindowSumSpec& spec) {
  const Box box({a.k(), a.k(), a.l(), a.l()});
  const auto res = separable_window_sum(box, a.data(), spec.radius, spec.w, spec.kind);
  Array4 out(a.k(), a.l());
  std::copy(res.begin(), res.end(), out.data().begin());
  return out;
}

namespace {

struct Chunking {
  int high_bits;
  int low_bits;
  std::uint64_t chunks;
};

Chunking chunking_for(int n) {
  const int high = std::min(n, 8);
  return {high, n - high, std::uint64_t{1} << high};
}

// Walks the low bits of one chunk in Gray-code order and calls f(mask, weight).
template <typename F>
void walk_chunk(std::span<const double> adj, int n, const Chunking& ch, std::uint64_t chunk, F&& f) {
  std::uint64_t mask = chunk << ch.low_bits;
  double weight = mask_weight(adj, n, mask);
  f(mask, weight);
  const std::uint64_t steps = std::uint64_t{1} << ch.low_bits;
  for (std::uint64_t s = 1; s < steps; ++s) {
    const int v = std::countr_zero(s);
    const bool on = (mask >> v) & 1U;
    double out_to_zero = 0.0;
    double in_from_one = 0.0;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      if ((mask >> u) & 1U)
        in_from_one += adj[static_cast<std::size_t>(u) * n + v];
      else
        out_to_zero += adj[static_cast<std::size_t>(v) * n + u];
    }
    weight += on ? (in_from_one - out_to_zero) : (out_to_zero - in_from_one);
    mask ^= std::uint64_t{1} << v;
    f(mask, weight);
  }
}

}  // namespace

ScanResult max_dicut_scan(std::span<const double> adjacency, int n) {
  const Chunking ch = chunking_for(n);
  const double tol = tie_tolerance(adjacency);
  const auto chunks = static_cast<std::int64_t>(ch.chunks);

  std::vector<double> chunk_best(ch.chunks, -std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (std::int64_t c = 0; c < chunks; ++c) {
    double best = -std::numeric_limits<double>::infinity();
    walk_chunk(adjacency, n, ch, static_cast<std::uint64_t>(c),
               [&](std::uint64_t, double wgt) { best = std::max(best, wgt); });
    chunk_best[static_cast<std::size_t>(c)] = best;
  }
  const double best = *std::max_element(chunk_best.begin(), chunk_best.end());

  std::vector<std::uint64_t> chunk_key(ch.chunks, std::numeric_limits<std::uint64_t>::max());
  std::vector<std::uint64_t> chunk_mask(ch.chunks, 0);
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
  for (std::int64_t c = 0; c < chunks; ++c) {
    auto& key = chunk_key[static_cast<std::size_t>(c)];
    auto& mask = chunk_mask[static_cast<std::size_t>(c)];
    walk_chunk(adjacency, n, ch, static_cast<std::uint64_t>(c), [&](std::uint64_t m, double wgt) {
      if (wgt < best - tol) return;
      const auto k = lex_key(m, n);
      if (k < key) {
        key = k;
        mask = m;
      }
    });
  }
  const auto it = std::min_element(chunk_key.begin(), chunk_key.end());
  return {best, chunk_mask[static_cast<std::size_t>(it - chunk_key.begin())]};
}

}  // namespace parallel

}  // namespace dicut::kernels
