#pragma once

#include <algorithm>
#include <array>
#include <vector>

namespace dicut {

/// Window radius w over a k x k x l x l index box. Windows are infinity-norm
/// balls clipped to the box; there is no wraparound.
struct WindowSpec {
  int w = 0;
  int k = 1;
  int l = 1;

  /// Throws InvalidArgument unless 0 <= w < min(k, l).
  static WindowSpec checked(int w, int k, int l);
};

/// First and last index (inclusive, 1-based) of Win^{w,len}(i).
struct IndexRange {
  int lo;
  int hi;

  constexpr int size() const noexcept { return hi - lo + 1; }
  constexpr bool contains(int x) const noexcept { return x >= lo && x <= hi; }
};

constexpr IndexRange window_range(int w, int len, int i) noexcept {
  return {std::max(1, i - w), std::min(len, i + w)};
}

constexpr int window_1d_size(int w, int len, int i) noexcept { return window_range(w, len, i).size(); }

/// {i' in [len] : |i' - i| <= w}, ascending.
std::vector<int> window_1d(int w, int len, int i);

using Index4 = std::array<int, 4>;

/// Win^{w,k,l}(a, b, i, j) in lexicographic order.
std::vector<Index4> window_4d(int w, int k, int l, const Index4& center);

constexpr int window_4d_size(int w, int k, int l, const Index4& x) noexcept {
  return window_1d_size(w, k, x[0]) * window_1d_size(w, k, x[1]) * window_1d_size(w, l, x[2]) *
         window_1d_size(w, l, x[3]);
}

enum class NormalizerKind { kSmooth, kLower, kUpper };

/// Per-axis factor of a normalizer. The smooth factor is 1 / |Win^{w,len}(i)|;
/// lower/upper take the min/max of that factor over Win^{1,len}(i). Because
/// the 4D window is a product of 1D windows, every normalizer is a product of
/// these per-axis factors.
double normalizer_factor(NormalizerKind kind, int w, int len, int i) noexcept;

/// nu^{~w}, nu^{-w} or nu^{+w} at (a, b, i, j).
double normalizer(NormalizerKind kind, int w, int k, int l, const Index4& x) noexcept;

/// nu^{~w,l}(i, j) for matrices.
double matrix_normalizer(int w, int l, int i, int j) noexcept;

}  // namespace dicut
