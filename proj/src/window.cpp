#include "dicut/window.hpp"

#include <string>

#include "dicut/error.hpp"

namespace dicut {

WindowSpec WindowSpec::checked(int w, int k, int l) {
  if (w < 0 || w >= k || w >= l)
    throw InvalidArgument("window radius " + std::to_string(w) + " needs 0 <= w < min(k, l) = " +
                          std::to_string(std::min(k, l)));
  return {w, k, l};
}

std::vector<int> window_1d(int w, int len, int i) {
  const auto r = window_range(w, len, i);
  std::vector<int> out;
  for (int x = r.lo; x <= r.hi; ++x) out.push_back(x);
  return out;
}

std::vector<Index4> window_4d(int w, int k, int l, const Index4& c) {
  const IndexRange r[4] = {window_range(w, k, c[0]), window_range(w, k, c[1]), window_range(w, l, c[2]),
                           window_range(w, l, c[3])};
  std::vector<Index4> out;
  out.reserve(static_cast<std::size_t>(r[0].size() * r[1].size() * r[2].size() * r[3].size()));
  for (int a = r[0].lo; a <= r[0].hi; ++a)
    for (int b = r[1].lo; b <= r[1].hi; ++b)
      for (int i = r[2].lo; i <= r[2].hi; ++i)
        for (int j = r[3].lo; j <= r[3].hi; ++j) out.push_back({a, b, i, j});
  return out;
}

double normalizer_factor(NormalizerKind kind, int w, int len, int i) noexcept {
  if (kind == NormalizerKind::kSmooth) return 1.0 / window_1d_size(w, len, i);
  const auto nb = window_range(1, len, i);
  int smallest = window_1d_size(w, len, nb.lo);
  int largest = smallest;
  for (int x = nb.lo + 1; x <= nb.hi; ++x) {
    smallest = std::min(smallest, window_1d_size(w, len, x));
    largest = std::max(largest, window_1d_size(w, len, x));
  }
  // Lower takes the smallest factor, i.e. the largest window.
  return kind == NormalizerKind::kLower ? 1.0 / largest : 1.0 / smallest;
}

double normalizer(NormalizerKind kind, int w, int k, int l, const Index4& x) noexcept {
  return normalizer_factor(kind, w, k, x[0]) * normalizer_factor(kind, w, k, x[1]) *
         normalizer_factor(kind, w, l, x[2]) * normalizer_factor(kind, w, l, x[3]);
}

double matrix_normalizer(int w, int l, int i, int j) noexcept {
  return 1.0 / (window_1d_size(w, l, i) * window_1d_size(w, l, j));
}

}  // namespace dicut
