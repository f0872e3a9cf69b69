#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "balance/balance.hpp"
#include "data/dataset.hpp"
#include "model/forecaster.hpp"

namespace beat::train {

enum class Modulation { Off, Gradient, Loss };
enum class OptimizerKind { SGD, Adam };
/// Where the training loss compares prediction and target: after RevIN
/// de-normalization (default) or in the per-window normalized space.
enum class LossSpace { Denormalized, Normalized };

Modulation parse_modulation(const std::string& name);
std::string modulation_name(Modulation m);
OptimizerKind parse_optimizer(const std::string& name);
std::string optimizer_name(OptimizerKind k);
LossSpace parse_loss_space(const std::string& name);
std::string loss_space_name(LossSpace s);

struct BalanceConfig {
  Modulation modulation = Modulation::Gradient;
  balance::Metric metric = balance::Metric::MSE;
  double c_max = balance::kDefaultCoefficientCap;
  bool ema = false;
  double ema_decay = 0.9;
};

struct TrainConfig {
  OptimizerKind optimizer = OptimizerKind::Adam;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::size_t batch_size = 32;
  std::size_t max_epochs = 100;
  std::size_t max_steps = 0;  // 0: bounded by epochs only
  std::size_t patience = 10;
  std::uint64_t seed = 2024;
  LossSpace loss_space = LossSpace::Denormalized;
  BalanceConfig balance;
};

void validate(const TrainConfig& config);

/// First-order update over a fixed parameter list.
class Optimizer {
 public:
  virtual ~Optimizer() = default;
  virtual void step(const std::vector<ad::Parameter*>& params) = 0;
};

class SGD final : public Optimizer {
 public:
  explicit SGD(double lr) : lr_(lr) {}
  void step(const std::vector<ad::Parameter*>& params) override;

 private:
  double lr_;
};

class Adam final : public Optimizer {
 public:
  Adam(double lr, double beta1, double beta2, double eps) : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}
  void step(const std::vector<ad::Parameter*>& params) override;

 private:
  double lr_, beta1_, beta2_, eps_;
  std::uint64_t t_ = 0;
  std::vector<Matrix> m_, v_;
};

std::unique_ptr<Optimizer> make_optimizer(const TrainConfig& config);

struct StepResult {
  double loss = 0.0;
  balance::BalanceReport report;  // coefficients are those actually applied
};

/// One iteration: forward, loss, backward, monitor, modulation, update.
/// `forced` replaces the computed coefficients (testing hook).
StepResult train_step(model::ForecastModel& model, Optimizer& optimizer, const SeriesTensor& x, const SeriesTensor& y,
                      const TrainConfig& config, balance::FrequencyMonitor& monitor,
                      const std::optional<std::vector<double>>& forced = std::nullopt);

/// Pure forward pass; no tape survives the call.
SeriesTensor predict(model::ForecastModel& model, const SeriesTensor& x);

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based
  std::size_t steps = 0;  // cumulative
  double train_loss = 0.0;
  double val_mse = 0.0;
  bool improved = false;
};

struct RunState {
  std::size_t step = 0;
  double best_val = std::numeric_limits<double>::infinity();
  std::size_t best_epoch = 0;
  std::size_t since_improvement = 0;
};

struct History {
  std::vector<EpochRecord> epochs;
  RunState state;
  bool stopped_early = false;
  bool budget_exhausted = false;
};

/// Observers for run logging; any may be empty.
struct FitCallbacks {
  std::function<void(const StepResult&, std::size_t step)> on_step;
  std::function<void(const EpochRecord&)> on_epoch;
};

/// Trains on dataset.train and selects on dataset.validation (MSE, standardized
/// space). Restores the best-validation parameters before returning.
History fit(model::ForecastModel& model, const data::Dataset& dataset, const TrainConfig& config,
            const FitCallbacks& callbacks = {});

/// Copies of every parameter value, in model.parameters() order.
std::vector<Matrix> snapshot(model::ForecastModel& model);
void restore(model::ForecastModel& model, const std::vector<Matrix>& values);

}  // namespace beat::train
