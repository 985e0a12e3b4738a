#include <doctest.h>

#include <cmath>

#include "dicut/error.hpp"
#include "dicut/kernels.hpp"
#include "dicut/smoothing.hpp"
#include "dicut/snapshot.hpp"
#include "random_objects.hpp"

using namespace dicut;

namespace {

// Oracle: A^{~w} by literal enumeration, normalizer = 1 / |Win(x')|.
Array4 smooth_by_definition(const Array4& a, int w) {
  Array4 out(a.k(), a.l());
  for (int x0 = 1; x0 <= a.k(); ++x0)
    for (int x1 = 1; x1 <= a.k(); ++x1)
      for (int x2 = 1; x2 <= a.l(); ++x2)
        for (int x3 = 1; x3 <= a.l(); ++x3) {
          double s = 0.0;
          for (const auto& y : window_4d(w, a.k(), a.l(), {x0, x1, x2, x3}))
            s += a.at(y[0], y[1], y[2], y[3]) / window_4d_size(w, a.k(), a.l(), y);
          out.at(x0, x1, x2, x3) = s;
        }
  return out;
}

// Oracle for nu^{-w} / nu^{+w}: min / max of 1 / |Win^w| over the radius-1 window.
double bound_normalizer(bool upper, int w, int k, int l, const Index4& x) {
  double best = upper ? 0.0 : 1.0;
  for (const auto& y : window_4d(1, k, l, x)) {
    const double v = 1.0 / window_4d_size(w, k, l, y);
    best = upper ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

}  // namespace

TEST_CASE("one-dimensional windows") {
  CHECK(window_1d(1, 5, 3) == std::vector<int>{2, 3, 4});
  CHECK(window_1d(1, 5, 1) == std::vector<int>{1, 2});
  CHECK(window_1d(0, 5, 4) == std::vector<int>{4});
  CHECK(window_1d(7, 5, 2) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(WindowSpec::checked(3, 3, 5), InvalidArgument);
  CHECK_THROWS_AS(WindowSpec::checked(-1, 3, 5), InvalidArgument);
  CHECK_NOTHROW(WindowSpec::checked(2, 3, 5));
}

TEST_CASE("four-dimensional window sizes") {
  for (int k = 2; k <= 5; ++k)
    for (int l = 2; l <= 5; ++l)
      for (int w = 0; w < std::min(k, l); ++w)
        for (int a = 1; a <= k; ++a)
          for (int i = 1; i <= l; ++i) {
            const Index4 x{a, k + 1 - a, i, l + 1 - i};
            const int s = window_4d_size(w, k, l, x);
            CHECK(s >= std::pow(w + 1, 4));
            CHECK(s <= std::pow(2 * w + 1, 4));
            CHECK(static_cast<int>(window_4d(w, k, l, x).size()) == s);
          }
}

TEST_CASE("normalizers") {
  CHECK(matrix_normalizer(1, 3, 2, 2) == doctest::Approx(1.0 / 9).epsilon(1e-15));
  CHECK(matrix_normalizer(1, 3, 1, 1) == doctest::Approx(1.0 / 4).epsilon(1e-15));
  const int k = 4, l = 4, w = 1;
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
          const Index4 x{a, b, i, j};
          const double lo = normalizer(NormalizerKind::kLower, w, k, l, x);
          const double mid = normalizer(NormalizerKind::kSmooth, w, k, l, x);
          const double hi = normalizer(NormalizerKind::kUpper, w, k, l, x);
          CHECK(lo <= mid);
          CHECK(mid <= hi);
          CHECK(mid == doctest::Approx(1.0 / window_4d_size(w, k, l, x)).epsilon(1e-15));
          CHECK(lo == doctest::Approx(bound_normalizer(false, w, k, l, x)).epsilon(1e-15));
          CHECK(hi == doctest::Approx(bound_normalizer(true, w, k, l, x)).epsilon(1e-15));
        }
}

TEST_CASE("smoothing a matrix") {
  Matrix m(3);
  m.at(2, 2) = 1.0;
  const auto s = smooth_matrix(m, 1);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(s.at(i, j) == doctest::Approx(1.0 / 9).epsilon(1e-15));

  Rng rng(31);
  const auto r = detail::random_simplex_matrix(6, rng);
  CHECK(smooth_matrix(r, 0) == r);
  CHECK_THROWS_AS(smooth_matrix(r, 6), InvalidArgument);
  for (int t = 0; t < 50; ++t) {
    const int l = detail::uniform_int(rng, 3, 16);
    const int w = std::min(detail::uniform_int(rng, 1, 5), l - 1);
    CHECK(std::abs(smooth_matrix(detail::random_simplex_matrix(l, rng), w).sum() - 1.0) <= 1e-12);
  }
}

TEST_CASE("smoothing an array matches the literal definition") {
  Rng rng(32);
  for (int t = 0; t < 15; ++t) {
    const int w = detail::uniform_int(rng, 0, 2);
    const int k = detail::uniform_int(rng, w + 1, 5);
    const int l = detail::uniform_int(rng, w + 1, 5);
    const auto a = detail::random_simplex_array(k, l, rng);
    CHECK(max_abs_difference(smooth_array(a, w).data(), smooth_by_definition(a, w).data()) <= 1e-15);
    CHECK(max_abs_difference(project(smooth_array(a, w)).data(), smooth_matrix(project(a), w).data()) <= 1e-12);
  }
}

TEST_CASE("parallel kernels match the reference kernels") {
  Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    const int w = detail::uniform_int(rng, 1, 3);
    const int k = detail::uniform_int(rng, w + 2, 7);
    const int l = detail::uniform_int(rng, w + 2, 7);
    const auto a = detail::random_simplex_array(k, l, rng);
    for (const auto spec : {kernels::WindowSumSpec{w, w, NormalizerKind::kSmooth},
                            kernels::WindowSumSpec{w - 1, w, NormalizerKind::kLower},
                            kernels::WindowSumSpec{w + 1, w, NormalizerKind::kUpper}}) {
      const auto x = kernels::reference::window_sum(a, spec);
      const auto y = kernels::parallel::window_sum(a, spec);
      CHECK(max_abs_difference(x.data(), y.data()) <= 1e-15);
    }
    const auto m = detail::random_simplex_matrix(l, rng);
    CHECK(max_abs_difference(kernels::reference::smooth_matrix(m, w).data(),
                             kernels::parallel::smooth_matrix(m, w).data()) <= 1e-15);
  }
}

TEST_CASE("lower and upper arrays") {
  // Unit mass at an interior point, w = 1: the lower array uses radius-0
  // windows, so its support is the point itself.
  Array4 a(5, 5);
  a.at(3, 3, 3, 3) = 1.0;
  const auto lo = lower_array(a, 1);
  const double nu_lo = normalizer(NormalizerKind::kLower, 1, 5, 5, {3, 3, 3, 3});
  CHECK(nu_lo == doctest::Approx(1.0 / 81).epsilon(1e-15));
  for (std::size_t x = 0; x < lo.size(); ++x)
    CHECK(lo.data()[x] == (x == a.offset(3, 3, 3, 3) ? doctest::Approx(nu_lo) : doctest::Approx(0.0)));
  const auto hi = upper_array(a, 1);
  const double nu_hi = normalizer(NormalizerKind::kUpper, 1, 5, 5, {3, 3, 3, 3});
  CHECK(nu_hi == doctest::Approx(1.0 / 81).epsilon(1e-15));
  CHECK(hi.at(1, 1, 1, 1) == doctest::Approx(nu_hi).epsilon(1e-15));
  CHECK(hi.at(5, 5, 5, 5) == doctest::Approx(nu_hi).epsilon(1e-15));

  const Array4 zero(6, 6);
  CHECK(lower_array(zero, 2).sum() == 0.0);
  CHECK(upper_array(zero, 2).sum() == 0.0);
  CHECK_THROWS_AS(lower_array(zero, 0), InvalidArgument);
  CHECK_THROWS_AS(upper_array(zero, 5), InvalidArgument);
  CHECK_THROWS_AS(upper_array(Array4(6, 3), 2), InvalidArgument);
}

TEST_CASE("sandwich holds on random arrays") {
  Rng rng(34);
  for (int t = 0; t < 10; ++t) {
    const auto a = detail::random_simplex_array(8, 8, rng);
    const auto s = smooth_array(a, 2);
    const auto lo = lower_array(a, 2);
    const auto hi = upper_array(a, 2);
    for (std::size_t x = 0; x < a.size(); ++x) {
      CHECK(lo.data()[x] <= s.data()[x] + 1e-15);
      CHECK(s.data()[x] <= hi.data()[x] + 1e-15);
      CHECK(hi.data()[x] <= 1.0);
    }
  }
}

TEST_CASE("pointwise estimate check") {
  Rng rng(35);
  const auto a = detail::random_simplex_array(6, 6, rng);
  const int w = 2;
  const double delta = 1e-4;
  CHECK(check_pointwise_estimate(a, smooth_array(a, w), w, 0.0).pass);
  CHECK(check_pointwise_estimate(a, smooth_array(a, w), w, delta).pass);

  auto lower_edge = lower_array(a, w);
  for (auto& x : lower_edge.data()) x -= delta;
  CHECK(check_pointwise_estimate(a, lower_edge, w, delta).pass);

  auto over = upper_array(a, w);
  over.at(2, 3, 4, 5) += 2 * delta;
  const auto r = check_pointwise_estimate(a, over, w, delta);
  CHECK_FALSE(r.pass);
  REQUIRE(r.violation_count == 1);
  CHECK(r.violations[0].index == Index4{2, 3, 4, 5});
  CHECK(r.max_excess == doctest::Approx(2 * delta).epsilon(1e-9));

  CHECK_THROWS_AS(check_pointwise_estimate(a, Array4(5, 6), w, delta), InvalidArgument);
}

TEST_CASE("sandwich gap") {
  CHECK(sandwich_gap(Array4(8, 8), 2) == 0.0);

  // Point mass: the gap is the L1 difference of two enumerable arrays.
  Array4 p(7, 7);
  p.at(4, 2, 5, 1) = 1.0;
  double expected = 0.0;
  const double lo = normalizer(NormalizerKind::kLower, 2, 7, 7, {4, 2, 5, 1});
  const double hi = normalizer(NormalizerKind::kUpper, 2, 7, 7, {4, 2, 5, 1});
  const int outer = window_4d_size(3, 7, 7, {4, 2, 5, 1});
  const int inner = window_4d_size(1, 7, 7, {4, 2, 5, 1});
  expected = outer * hi - inner * lo;
  CHECK(sandwich_gap(p, 2) == doctest::Approx(expected).epsilon(1e-12));

  // Gap shrinks as w grows on a fixed random array.
  Rng rng(36);
  const auto a = detail::random_simplex_array(12, 12, rng);
  const double g1 = sandwich_gap(a, 1), g2 = sandwich_gap(a, 2), g3 = sandwich_gap(a, 3);
  CHECK(g1 > g2);
  CHECK(g2 > g3);
}
