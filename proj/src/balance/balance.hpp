#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autodiff/tape.hpp"
#include "common/types.hpp"
#include "wavelet/wavelet.hpp"

namespace beat::balance {

enum class Metric { MSE, MAE, RMSE, RSquared };

Metric parse_metric(std::string_view name);
std::string metric_name(Metric metric);

inline constexpr double kDefaultCoefficientCap = 10.0;
inline constexpr double kDegenerateMu = 1e-12;

/// Discrepancy between a target band and its prediction; larger is worse.
/// RSquared yields 1 - R^2 floored at 1e-12.
double discrepancy(const Matrix& target, const Matrix& predicted, Metric metric);

/// Per-batch monitor output. Vectors are in branch order: entries 0..f-1 are
/// the details D_1..D_f, entry f is the approximation.
struct BalanceReport {
  std::size_t batch_index = 0;
  double delta_a = 0.0;
  std::vector<double> delta_d;
  double mu = 0.0;
  std::vector<double> ratios;
  std::vector<double> coefficients;
  bool degenerate = false;  // mu < 1e-12; all ratios forced to 1

  std::size_t level() const { return delta_d.size(); }
  double ratio_a() const { return ratios.back(); }
};

/// Decomposes the (normalized) ground-truth horizon into target bands.
wavelet::CoefficientSet decompose_target(const SeriesTensor& y, const wavelet::WaveletSpec& spec);

/// Fills the discrepancy, mean and ratio fields of a report.
BalanceReport discrepancy_ratios(const wavelet::CoefficientSet& predicted, const wavelet::CoefficientSet& target,
                                 Metric metric = Metric::MSE);

/// Ratio fields computed from already-measured discrepancies.
BalanceReport ratios_from_discrepancies(double delta_a, std::vector<double> delta_d);

/// Gradient modulation coefficient for a discrepancy ratio r > 0:
///   1 / (1 + exp(-0.5 (r - 1))) + 0.5   for r > 1
///   min(1 / r, cap)                     for r <= 1
/// Throws NonPositiveRatio for r <= 0.
double modulation_coefficient(double r, double cap = kDefaultCoefficientCap);

/// Coefficients for every entry of report.ratios; a zero ratio (a band
/// predicted exactly) maps to the cap.
std::vector<double> modulation_coefficients(const BalanceReport& report, double cap = kDefaultCoefficientCap);

/// Scales each branch's parameter gradients by its coefficient. `branches[v]`
/// lists the parameters owned by branch position v.
void apply_modulation(std::span<const std::vector<ad::Parameter*>> branches, std::span<const double> coefficients);

/// Loss-level alternative: scales the backward seed by the mean coefficient.
double modulate_loss_alternative(double loss_gradient, std::span<const double> coefficients);

/// Frequency-specific monitor with optional exponential smoothing of the
/// per-band discrepancies.
class FrequencyMonitor {
 public:
  FrequencyMonitor(Metric metric, bool smooth, double decay = 0.9);

  BalanceReport observe(const wavelet::CoefficientSet& predicted, const wavelet::CoefficientSet& target);

  Metric metric() const { return metric_; }

 private:
  Metric metric_;
  bool smooth_;
  double decay_;
  std::size_t batches_ = 0;
  double ema_a_ = 0.0;
  std::vector<double> ema_d_;
};

}  // namespace beat::balance
