#include "dicut/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "dicut/error.hpp"

namespace dicut {

double l1_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("l1_distance: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
  return s;
}

double max_abs_difference(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("max_abs_difference: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s = std::max(s, std::abs(x[i] - y[i]));
  return s;
}

}  // namespace dicut
