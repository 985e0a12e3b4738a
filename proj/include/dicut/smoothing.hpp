#pragma once

#include <cstddef>
#include <vector>

#include "dicut/tensor.hpp"
#include "dicut/window.hpp"

namespace dicut {

/// M^{~w}(i, j) = sum over Win^{w,l}(i, j) of nu^{~w}(i', j') M(i', j').
/// Throws InvalidArgument when w >= l or w < 0.
Matrix smooth_matrix(const Matrix& m, int w);

/// A^{~w}; same definition over 4D windows. Requires w < min(k, l).
Array4 smooth_array(const Array4& a, int w);

/// A^{-w}: radius w-1 windows weighted by nu^{-w}. Requires 1 <= w and
/// w + 1 < min(k, l).
Array4 lower_array(const Array4& a, int w);

/// A^{+w}: radius w+1 windows weighted by nu^{+w}. Same requirements as
/// lower_array.
Array4 upper_array(const Array4& a, int w);

struct PointwiseViolation {
  Index4 index;
  double estimate;
  double lower;
  double upper;
  /// Distance outside [lower, upper]; positive.
  double excess;
};

struct PointwiseReport {
  bool pass = true;
  double delta = 0.0;
  /// Smallest delta' >= 0 for which the estimate would pass.
  double max_excess = 0.0;
  /// Largest signed excess max(lower - est, est - upper) over all entries;
  /// negative when every entry sits strictly inside its bounds.
  double signed_margin = 0.0;
  /// Number of entries failing at `delta`.
  std::size_t violation_count = 0;
  /// The first violations in index order (capped at kMaxListed).
  std::vector<PointwiseViolation> violations;

  static constexpr std::size_t kMaxListed = 64;
};

/// Checks A^{-w} - delta <= estimate <= A^{+w} + delta entrywise (closed
/// bounds). Throws InvalidArgument on a shape mismatch.
PointwiseReport check_pointwise_estimate(const Array4& a, const Array4& estimate, int w,
                                         double delta);

/// Same check against precomputed bound arrays.
PointwiseReport check_pointwise_bounds(const Array4& lower, const Array4& upper,
                                       const Array4& estimate, double delta);

/// ||A^{+w} - A^{-w}||_1.
double sandwich_gap(const Array4& a, int w);

}  // namespace dicut
