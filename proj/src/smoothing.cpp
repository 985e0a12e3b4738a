#include "dicut/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dicut/error.hpp"
#include "dicut/kernels.hpp"

namespace dicut {

namespace {

void require_bound_radius(int w, int k, int l) {
  if (w < 1 || w + 1 >= std::min(k, l))
    throw InvalidArgument("lower/upper arrays need 1 <= w and w + 1 < min(k, l); got w = " +
                          std::to_string(w));
}

// Rounding allowance for comparing independently accumulated sums.
double allowance(double bound) { return 1e-12 * std::max(1.0, std::abs(bound)); }

}  // namespace

Matrix smooth_matrix(const Matrix& m, int w) {
  WindowSpec::checked(w, m.side(), m.side());
  return kernels::parallel::smooth_matrix(m, w);
}

Array4 smooth_array(const Array4& a, int w) {
  WindowSpec::checked(w, a.k(), a.l());
  return kernels::parallel::window_sum(a, {w, w, NormalizerKind::kSmooth});
}

Array4 lower_array(const Array4& a, int w) {
  require_bound_radius(w, a.k(), a.l());
  return kernels::parallel::window_sum(a, {w - 1, w, NormalizerKind::kLower});
}

Array4 upper_array(const Array4& a, int w) {
  require_bound_radius(w, a.k(), a.l());
  return kernels::parallel::window_sum(a, {w + 1, w, NormalizerKind::kUpper});
}

PointwiseReport check_pointwise_bounds(const Array4& lower, const Array4& upper, const Array4& est,
                                       double delta) {
  if (!lower.same_shape(est) || !upper.same_shape(est))
    throw InvalidArgument("pointwise check: array shapes differ");
  PointwiseReport r;
  r.delta = delta;
  r.signed_margin = -std::numeric_limits<double>::infinity();
  const int k = est.k();
  const int l = est.l();
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
          const double e = est.at(a, b, i, j);
          const double lo = lower.at(a, b, i, j);
          const double hi = upper.at(a, b, i, j);
          const double excess = std::max(lo - e, e - hi);
          r.signed_margin = std::max(r.signed_margin, excess);
          const bool low_fail = e < lo - delta - allowance(lo);
          const bool high_fail = e > hi + delta + allowance(hi);
          r.max_excess = std::max(r.max_excess, excess);
          if (low_fail || high_fail) {
            ++r.violation_count;
            if (r.violations.size() < PointwiseReport::kMaxListed)
              r.violations.push_back({{a, b, i, j}, e, lo, hi, excess});
          }
        }
  r.pass = r.violation_count == 0;
  if (est.size() == 0) r.signed_margin = 0.0;
  return r;
}

PointwiseReport check_pointwise_estimate(const Array4& a, const Array4& estimate, int w, double delta) {
  if (!a.same_shape(estimate)) throw InvalidArgument("pointwise check: array shapes differ");
  return check_pointwise_bounds(lower_array(a, w), upper_array(a, w), estimate, delta);
}

double sandwich_gap(const Array4& a, int w) {
  return l1_distance(upper_array(a, w).data(), lower_array(a, w).data());
}

}  // namespace dicut
