#pragma once

// Two implementations of every hot loop. `reference` follows the definitions
// literally (serial, window enumeration per output entry) and is kept as the
// oracle for tests and benchmarks. `parallel` is what the library calls: it
// factors windows into per-axis passes and runs them under OpenMP. Both
// produce the same values up to floating-point reassociation.

#include <cstdint>
#include <span>

#include "dicut/tensor.hpp"
#include "dicut/window.hpp"

namespace dicut::kernels {

/// sum over Win^{radius}(x) of weight(x') * A(x'), where weight is the
/// normalizer of `kind` at smoothing radius `w`.
///  - smooth: radius = w, kind = kSmooth
///  - lower:  radius = w - 1, kind = kLower
///  - upper:  radius = w + 1, kind = kUpper
struct WindowSumSpec {
  int radius;
  int w;
  NormalizerKind kind;
};

/// Best assignment found by an exhaustive scan. `mask` bit v-1 holds x_v.
struct ScanResult {
  double best_weight = 0.0;
  std::uint64_t mask = 0;
};

namespace reference {

Matrix smooth_matrix(const Matrix& m, int w);
Array4 window_sum(const Array4& a, const WindowSumSpec& spec);

/// Evaluates every assignment from scratch. `adjacency` is dense n*n, row-major.
ScanResult max_dicut_scan(std::span<const double> adjacency, int n);

}  // namespace reference

namespace parallel {

Matrix smooth_matrix(const Matrix& m, int w);
Array4 window_sum(const Array4& a, const WindowSumSpec& spec);

/// Gray-code enumeration split into OpenMP chunks over the high bits.
ScanResult max_dicut_scan(std::span<const double> adjacency, int n);

}  // namespace parallel

/// Orders masks so that the lexicographically smallest assignment
/// (x_1 compared first) has the smallest key.
std::uint64_t lex_key(std::uint64_t mask, int n) noexcept;

/// Tie tolerance used by both scans when comparing cut weights.
double tie_tolerance(std::span<const double> adjacency) noexcept;

}  // namespace dicut::kernels
