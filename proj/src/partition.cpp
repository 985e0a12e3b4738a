#include "dicut/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dicut/error.hpp"

namespace dicut {

namespace {

constexpr double kWidthSlack = 1e-12;

// ceil(x) that ignores rounding noise just above an integer.
long long noisy_ceil(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= kWidthSlack * std::max(1.0, std::abs(x))) return static_cast<long long>(r);
  return static_cast<long long>(std::ceil(x));
}

}  // namespace

ThresholdVector::ThresholdVector(std::vector<double> breakpoints, ThresholdKind kind)
    : breakpoints_(std::move(breakpoints)), kind_(kind) {
  if (breakpoints_.size() < 2) throw InvalidArgument("threshold vector needs at least two breakpoints");
  for (double x : breakpoints_)
    if (!std::isfinite(x)) throw InvalidArgument("threshold breakpoints must be finite");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw InvalidArgument("threshold breakpoints must be strictly increasing");
  if (kind_ == ThresholdKind::kBias && (breakpoints_.front() != -1.0 || breakpoints_.back() != 1.0))
    throw InvalidArgument("bias thresholds must start at -1 and end at +1");
  if (kind_ == ThresholdKind::kDegree && !(breakpoints_.front() > 0.0))
    throw InvalidArgument("degree thresholds must be positive");
}

ThresholdVector ThresholdVector::powers_of_two(int k) {
  if (k < 1 || k > 62) throw InvalidArgument("degree partition length must lie in 1..62");
  std::vector<double> d;
  for (int a = 0; a <= k; ++a) d.push_back(std::ldexp(1.0, a));
  return ThresholdVector(std::move(d), ThresholdKind::kDegree);
}

double ThresholdVector::min_gap() const noexcept {
  double g = breakpoints_[1] - breakpoints_[0];
  for (std::size_t i = 2; i < breakpoints_.size(); ++i) g = std::min(g, breakpoints_[i] - breakpoints_[i - 1]);
  return g;
}

double ThresholdVector::max_gap() const noexcept {
  double g = 0.0;
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) g = std::max(g, breakpoints_[i] - breakpoints_[i - 1]);
  return g;
}

ClassIndex ThresholdVector::index_of(double x) const {
  if (!(x >= front() && x <= back()))
    throw OutOfRange("value " + std::to_string(x) + " outside [" + std::to_string(front()) + ", " +
                     std::to_string(back()) + "]");
  if (x == back()) return length();
  return static_cast<ClassIndex>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) -
                                 breakpoints_.begin());
}

std::optional<ClassIndex> bias_index(const Multigraph& g, const ThresholdVector& t, VertexId v) {
  const auto s = vertex_stats(g, v);
  if (s.isolated()) return std::nullopt;
  return t.index_of(*s.bias);
}

std::optional<ClassIndex> degree_index(const Multigraph& g, const ThresholdVector& d, VertexId v) {
  const auto s = vertex_stats(g, v);
  if (s.isolated()) return std::nullopt;
  if (s.deg < d.front() || s.deg > d.back())
    throw PreconditionViolation("vertex " + std::to_string(v) + " has degree " + std::to_string(s.deg) +
                                " outside the degree partition");
  return d.index_of(s.deg);
}

std::optional<DbIndex> db_index(const Multigraph& g, const ThresholdVector& d, const ThresholdVector& t,
                                VertexId u, VertexId v) {
  const auto du = degree_index(g, d, u);
  const auto dv = degree_index(g, d, v);
  if (!du || !dv) return std::nullopt;
  return DbIndex{*du, *dv, *bias_index(g, t, u), *bias_index(g, t, v)};
}

ThresholdVector refine_partition(const ThresholdVector& t, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("refinement width must be positive");
  const auto& b = t.breakpoints();
  std::vector<double> out{b.front()};
  for (std::size_t i = 1; i < b.size(); ++i) {
    const double width = b[i] - b[i - 1];
    const long long parts = width < lambda / 2 ? 1 : std::max(1LL, noisy_ceil(width / lambda));
    for (long long s = 1; s < parts; ++s)
      out.push_back(b[i - 1] + width * static_cast<double>(s) / static_cast<double>(parts));
    out.push_back(b[i]);
  }
  return ThresholdVector(std::move(out), t.kind());
}

std::vector<ClassIndex> narrow_intervals(const ThresholdVector& t, double lambda) {
  std::vector<ClassIndex> out;
  const auto& b = t.breakpoints();
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i] - b[i - 1] < lambda / 2) out.push_back(static_cast<ClassIndex>(i));
  return out;
}

std::vector<ClassIndex> refinement_parents(const ThresholdVector& original, const ThresholdVector& refined) {
  std::vector<ClassIndex> out;
  const auto& b = refined.breakpoints();
  for (std::size_t i = 1; i < b.size(); ++i) out.push_back(original.index_of(0.5 * (b[i - 1] + b[i])));
  return out;
}

bool is_lambda_wide(const ThresholdVector& t, double lambda) noexcept {
  const auto& b = t.breakpoints();
  const double slack = kWidthSlack * std::max(1.0, lambda);
  for (std::size_t i = 1; i < b.size(); ++i) {
    const double width = b[i] - b[i - 1];
    if (width < lambda / 2 - slack || width > lambda + slack) return false;
  }
  return true;
}

}  // namespace dicut
