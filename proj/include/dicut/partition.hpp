#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dicut/multigraph.hpp"

namespace dicut {

/// Class indices are 1-based: a threshold vector of length l partitions its
/// range into classes 1..l.
using ClassIndex = int;

enum class ThresholdKind { kBias, kDegree };

/// Strictly increasing breakpoints t_0 < ... < t_l.
class ThresholdVector {
 public:
  /// Validates monotonicity (and the +-1 endpoints for bias vectors).
  ThresholdVector(std::vector<double> breakpoints, ThresholdKind kind);

  static ThresholdVector bias(std::vector<double> breakpoints) {
    return ThresholdVector(std::move(breakpoints), ThresholdKind::kBias);
  }
  /// Degree partition d_0 = 1, d_a = 2^a for a = 1..k.
  static ThresholdVector powers_of_two(int k);

  /// Number of classes l.
  int length() const noexcept { return static_cast<int>(breakpoints_.size()) - 1; }
  ThresholdKind kind() const noexcept { return kind_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  double front() const noexcept { return breakpoints_.front(); }
  double back() const noexcept { return breakpoints_.back(); }
  double min_gap() const noexcept;
  double max_gap() const noexcept;

  /// The unique i with t_{i-1} <= x < t_i; t_l maps to l.
  /// Throws OutOfRange when x lies outside [t_0, t_l].
  ClassIndex index_of(double x) const;

  bool operator==(const ThresholdVector&) const = default;

 private:
  std::vector<double> breakpoints_;
  ThresholdKind kind_;
};

std::optional<ClassIndex> bias_index(const Multigraph& g, const ThresholdVector& t, VertexId v);
std::optional<ClassIndex> degree_index(const Multigraph& g, const ThresholdVector& d, VertexId v);

/// (d-ind(u), d-ind(v), b-ind(u), b-ind(v)); 1-based classes.
struct DbIndex {
  ClassIndex deg_from;
  ClassIndex deg_to;
  ClassIndex bias_from;
  ClassIndex bias_to;

  bool operator==(const DbIndex&) const = default;
};

/// Absent when either endpoint is isolated.
std::optional<DbIndex> db_index(const Multigraph& g, const ThresholdVector& d,
                                const ThresholdVector& t, VertexId u, VertexId v);

/// Splits every interval of width W into ceil(W / lambda) equal parts.
/// Original breakpoints are kept verbatim.
ThresholdVector refine_partition(const ThresholdVector& t, double lambda);

/// Classes of `t` narrower than lambda / 2; refine_partition keeps these
/// unsplit, so the refinement cannot be lambda-wide when this is non-empty.
std::vector<ClassIndex> narrow_intervals(const ThresholdVector& t, double lambda);

/// Maps each class of refine_partition(t, lambda) to its parent class in t.
std::vector<ClassIndex> refinement_parents(const ThresholdVector& original,
                                           const ThresholdVector& refined);

/// True iff every interval width lies in [lambda / 2, lambda].
bool is_lambda_wide(const ThresholdVector& t, double lambda) noexcept;

}  // namespace dicut
