#pragma once

#include "common/types.hpp"

namespace beat::norm {

inline constexpr double kDefaultEpsilon = 1e-5;

/// Per-(batch item, variate) lookback statistics, one entry per tensor row.
/// Normalization divides by sqrt(variance + epsilon).
struct InstanceStats {
  std::size_t batch = 0;
  std::size_t variates = 0;
  Vector mean;
  Vector variance;  // population (1/T) convention
  double epsilon = kDefaultEpsilon;
  bool degenerate = false;  // some window had variance < 1e-12

  Vector scale() const { return (variance.array() + epsilon).sqrt(); }
};

struct Normalized {
  SeriesTensor output;
  InstanceStats stats;
};

/// Standardizes every window to zero mean and (near) unit variance.
/// Degenerate (constant) windows are flagged, not rejected.
Normalized revin_normalize(const SeriesTensor& x, double epsilon = kDefaultEpsilon);

/// Applies stats computed on a lookback window to another tensor with the same
/// batch/variate layout (for instance the ground-truth horizon).
SeriesTensor revin_apply(const SeriesTensor& y, const InstanceStats& stats);

/// y * sqrt(variance + epsilon) + mean, broadcast over the horizon.
/// Throws StatsMismatch if the batch/variate layout differs.
SeriesTensor revin_denormalize(const SeriesTensor& y, const InstanceStats& stats);

}  // namespace beat::norm
