#include "balance/balance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "common/error.hpp"
#include "common/log.hpp"

namespace beat::balance {
namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Metric parse_metric(std::string_view name) {
  if (name == "mse") return Metric::MSE;
  if (name == "mae") return Metric::MAE;
  if (name == "rmse") return Metric::RMSE;
  if (name == "r2" || name == "rsquared") return Metric::RSquared;
  throw Error(Errc::ConfigInvalid, "unknown discrepancy metric '" + std::string(name) + "'");
}

std::string metric_name(Metric metric) {
  switch (metric) {
    case Metric::MSE: return "mse";
    case Metric::MAE: return "mae";
    case Metric::RMSE: return "rmse";
    case Metric::RSquared: return "r2";
  }
  return "?";
}

double discrepancy(const Matrix& target, const Matrix& predicted, Metric metric) {
  if (target.rows() != predicted.rows() || target.cols() != predicted.cols()) {
    throw Error(Errc::ShapeMismatch, "band target " + shape(target) + " vs prediction " + shape(predicted));
  }
  if (target.size() == 0) throw Error(Errc::ShapeMismatch, "empty band");
  const double n = static_cast<double>(target.size());
  const auto diff = (target - predicted).array();
  switch (metric) {
    case Metric::MSE: return diff.square().sum() / n;
    case Metric::MAE: return diff.abs().sum() / n;
    case Metric::RMSE: return std::sqrt(diff.square().sum() / n);
    case Metric::RSquared: {
      const double mean = target.mean();
      const double ss_res = diff.square().sum();
      const double ss_tot = (target.array() - mean).square().sum();
      return std::max(ss_res / std::max(ss_tot, 1e-12), 1e-12);
    }
  }
  return 0.0;
}

wavelet::CoefficientSet decompose_target(const SeriesTensor& y, const wavelet::WaveletSpec& spec) {
  return wavelet::dwt_multilevel(y.values, spec);
}

BalanceReport ratios_from_discrepancies(double delta_a, std::vector<double> delta_d) {
  if (delta_d.empty()) throw Error(Errc::BranchCountMismatch, "at least one detail band is required");
  BalanceReport r;
  r.delta_a = delta_a;
  r.delta_d = std::move(delta_d);
  const auto f = static_cast<double>(r.delta_d.size());
  r.mu = std::accumulate(r.delta_d.begin(), r.delta_d.end(), 0.0) / f;
  r.ratios.resize(r.delta_d.size() + 1);
  if (r.mu < kDegenerateMu) {
    r.degenerate = true;
    std::fill(r.ratios.begin(), r.ratios.end(), 1.0);
    log::debug("frequency monitor: mean detail discrepancy below 1e-12, modulation disabled for this batch");
    return r;
  }
  for (std::size_t i = 0; i < r.delta_d.size(); ++i) r.ratios[i] = r.delta_d[i] / r.mu;
  r.ratios.back() = r.delta_a / r.mu;
  return r;
}

BalanceReport discrepancy_ratios(const wavelet::CoefficientSet& predicted, const wavelet::CoefficientSet& target,
                                 Metric metric) {
  if (predicted.level() != target.level()) {
    throw Error(Errc::BranchCountMismatch, "predicted and target coefficient sets have different levels");
  }
  std::vector<double> dd;
  for (int i = 0; i < target.level(); ++i) dd.push_back(discrepancy(target.details[i], predicted.details[i], metric));
  return ratios_from_discrepancies(discrepancy(target.approximation, predicted.approximation, metric), std::move(dd));
}

double modulation_coefficient(double r, double cap) {
  if (!(r > 0.0)) throw Error(Errc::NonPositiveRatio, "discrepancy ratio must be positive, got " + std::to_string(r));
  if (r > 1.0) return 1.0 / (1.0 + std::exp(-0.5 * (r - 1.0))) + 0.5;
  return std::min(1.0 / r, cap);
}

std::vector<double> modulation_coefficients(const BalanceReport& report, double cap) {
  std::vector<double> c;
  c.reserve(report.ratios.size());
  for (double r : report.ratios) c.push_back(r == 0.0 ? cap : modulation_coefficient(r, cap));
  return c;
}

void apply_modulation(std::span<const std::vector<ad::Parameter*>> branches, std::span<const double> coefficients) {
  if (branches.size() != coefficients.size()) {
    throw Error(Errc::BranchCountMismatch, std::to_string(coefficients.size()) + " coefficients for " +
                                               std::to_string(branches.size()) + " branches");
  }
  for (std::size_t v = 0; v < branches.size(); ++v) {
    for (ad::Parameter* p : branches[v]) p->grad *= coefficients[v];
  }
}

double modulate_loss_alternative(double loss_gradient, std::span<const double> coefficients) {
  if (coefficients.empty()) return loss_gradient;
  const double mean = std::accumulate(coefficients.begin(), coefficients.end(), 0.0) /
                      static_cast<double>(coefficients.size());
  return loss_gradient * mean;
}

FrequencyMonitor::FrequencyMonitor(Metric metric, bool smooth, double decay)
    : metric_(metric), smooth_(smooth), decay_(decay) {}

BalanceReport FrequencyMonitor::observe(const wavelet::CoefficientSet& predicted,
                                        const wavelet::CoefficientSet& target) {
  BalanceReport raw = discrepancy_ratios(predicted, target, metric_);
  raw.batch_index = batches_++;
  if (!smooth_) return raw;
  if (ema_d_.empty()) {
    ema_a_ = raw.delta_a;
    ema_d_ = raw.delta_d;
  } else {
    ema_a_ = decay_ * ema_a_ + (1.0 - decay_) * raw.delta_a;
    for (std::size_t i = 0; i < ema_d_.size(); ++i) ema_d_[i] = decay_ * ema_d_[i] + (1.0 - decay_) * raw.delta_d[i];
  }
  BalanceReport smoothed = ratios_from_discrepancies(ema_a_, ema_d_);
  smoothed.batch_index = raw.batch_index;
  return smoothed;
}

}  // namespace beat::balance
