#include <doctest.h>

#include <cmath>

#include "dicut/error.hpp"
#include "dicut/partition.hpp"

using namespace dicut;

namespace {

std::vector<double> approx_equal_list(const std::vector<double>& got, const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-15));
  return got;
}

}  // namespace

TEST_CASE("threshold vector construction") {
  CHECK_THROWS_AS(ThresholdVector::bias({-1.0, 0.0, 0.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(ThresholdVector::bias({-1.0, 0.5}), InvalidArgument);
  CHECK_THROWS_AS(ThresholdVector::bias({-0.5, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(ThresholdVector::bias({1.0}), InvalidArgument);
  const auto t = ThresholdVector::bias({-1.0, -0.5, 1.0});
  CHECK(t.length() == 2);
  CHECK(t.min_gap() == 0.5);
  CHECK(t.max_gap() == 1.5);
}

TEST_CASE("index of a value") {
  const auto t = ThresholdVector::bias({-1.0, -1.0 / 3, 1.0 / 3, 1.0});
  CHECK(t.index_of(0.0) == 2);
  CHECK(t.index_of(1.0) == 3);
  CHECK(t.index_of(-1.0) == 1);
  CHECK(t.index_of(1.0 / 3) == 3);
  CHECK(ThresholdVector::bias({-1.0, 0.0, 1.0}).index_of(-1.0) == 1);
  CHECK_THROWS_AS(t.index_of(1.0000001), OutOfRange);
  CHECK_THROWS_AS(t.index_of(-2.0), OutOfRange);
}

TEST_CASE("index is monotone and tiles the range") {
  const auto t = ThresholdVector::bias({-1.0, -0.7, -0.1, 0.2, 0.9, 1.0});
  int prev = 1;
  for (int s = 0; s <= 2000; ++s) {
    const double x = -1.0 + s / 1000.0;
    const int i = t.index_of(x);
    CHECK(i >= prev);
    CHECK(i - prev <= 1);
    if (x < 1.0) {
      CHECK(t.breakpoints()[static_cast<std::size_t>(i - 1)] <= x);
      CHECK(x < t.breakpoints()[static_cast<std::size_t>(i)]);
    }
    prev = i;
  }
  CHECK(prev == t.length());
}

TEST_CASE("degree thresholds are powers of two") {
  const auto d = ThresholdVector::powers_of_two(5);
  CHECK(d.breakpoints() == std::vector<double>{1, 2, 4, 8, 16, 32});
  CHECK(d.kind() == ThresholdKind::kDegree);
  CHECK(d.index_of(1) == 1);
  CHECK(d.index_of(3) == 2);
  CHECK(d.index_of(32) == 5);
}

TEST_CASE("class indices of graph vertices") {
  Multigraph g(3);
  g.add_edge(1, 2);
  const auto t = ThresholdVector::bias({-1.0, 0.0, 1.0});
  const auto d = ThresholdVector::powers_of_two(1);
  CHECK(*bias_index(g, t, 1) == 2);
  CHECK(*bias_index(g, t, 2) == 1);
  CHECK(*degree_index(g, d, 1) == 1);
  CHECK(!bias_index(g, t, 3));
  CHECK(!degree_index(g, d, 3));
  CHECK(*db_index(g, d, t, 1, 2) == DbIndex{1, 1, 2, 1});
  CHECK(!db_index(g, d, t, 1, 3));

  Multigraph c(3);
  c.add_edge(1, 2);
  c.add_edge(2, 3);
  c.add_edge(3, 1);
  for (VertexId v = 1; v <= 3; ++v) CHECK(*bias_index(c, t, v) == 2);
  // Degree 2 sits at the top endpoint of d = (1, 2).
  CHECK(*degree_index(c, d, 1) == 1);

  Multigraph heavy(2);
  heavy.add_edge(1, 2, 5.0);
  CHECK_THROWS_AS(degree_index(heavy, d, 1), PreconditionViolation);
}

TEST_CASE("db index components match single indices") {
  Multigraph g(4);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 1);
  const auto t = ThresholdVector::bias({-1.0, -0.5, 0.0, 0.5, 1.0});
  const auto d = ThresholdVector::powers_of_two(3);
  for (VertexId u = 1; u <= 4; ++u)
    for (VertexId v = 1; v <= 4; ++v) {
      const auto x = *db_index(g, d, t, u, v);
      CHECK(x.deg_from == *degree_index(g, d, u));
      CHECK(x.deg_to == *degree_index(g, d, v));
      CHECK(x.bias_from == *bias_index(g, t, u));
      CHECK(x.bias_to == *bias_index(g, t, v));
    }
}

TEST_CASE("refinement") {
  approx_equal_list(refine_partition(ThresholdVector::bias({-1.0, 1.0}), 0.5).breakpoints(),
                    {-1.0, -0.5, 0.0, 0.5, 1.0});
  approx_equal_list(refine_partition(ThresholdVector::bias({-1.0, 0.0, 1.0}), 2.0 / 3).breakpoints(),
                    {-1.0, -0.5, 0.0, 0.5, 1.0});
  const auto t = ThresholdVector::bias({-1.0, 0.2, 1.0});
  CHECK(refine_partition(t, 1.2) == t);
  CHECK(refine_partition(t, 5.0) == t);
  CHECK_THROWS_AS(refine_partition(t, 0.0), InvalidArgument);
  CHECK_THROWS_AS(refine_partition(t, -1.0), InvalidArgument);
}

TEST_CASE("refinement keeps breakpoints and bounds widths") {
  const auto t = ThresholdVector::bias({-1.0, -0.93, -0.2, 0.35, 1.0});
  for (double lambda : {0.05, 0.1, 0.17, 0.25, 0.4, 1.0}) {
    const auto r = refine_partition(t, lambda);
    for (double b : t.breakpoints()) {
      bool found = false;
      for (double x : r.breakpoints()) found = found || x == b;
      CHECK(found);
    }
    // The bias range has width 2, so the count bound is l + 2 / lambda.
    CHECK(r.length() <= t.length() + static_cast<int>(std::ceil(2.0 / lambda)));
    CHECK(r.max_gap() <= lambda * (1 + 1e-12));
    const auto narrow = narrow_intervals(t, lambda);
    if (narrow.empty()) CHECK(is_lambda_wide(r, lambda));
    const auto parents = refinement_parents(t, r);
    CHECK(parents.size() == static_cast<std::size_t>(r.length()));
    for (std::size_t i = 0; i < parents.size(); ++i) {
      const auto p = static_cast<std::size_t>(parents[i]);
      CHECK(t.breakpoints()[p - 1] <= r.breakpoints()[i]);
      CHECK(r.breakpoints()[i + 1] <= t.breakpoints()[p]);
    }
  }
  // The interval (-1, -0.93) is narrower than lambda / 2 at lambda = 0.25 and stays whole.
  CHECK(narrow_intervals(t, 0.25) == std::vector<ClassIndex>{1});
}

TEST_CASE("lambda-wide check") {
  const auto t = ThresholdVector::bias({-1.0, 0.0, 1.0});
  CHECK(is_lambda_wide(t, 1.0));
  CHECK_FALSE(is_lambda_wide(t, 0.5));
  CHECK_FALSE(is_lambda_wide(t, 3.0));
  CHECK(is_lambda_wide(refine_partition(ThresholdVector::bias({-1.0, 1.0}), 0.5), 0.5));
}
