#include "train/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "common/error.hpp"
#include "common/log.hpp"
#include "eval/metrics.hpp"
#include "norm/revin.hpp"

namespace beat::train {

Modulation parse_modulation(const std::string& name) {
  if (name == "off") return Modulation::Off;
  if (name == "gradient") return Modulation::Gradient;
  if (name == "loss") return Modulation::Loss;
  throw Error(Errc::ConfigInvalid, "unknown modulation '" + name + "' (off|gradient|loss)");
}

std::string modulation_name(Modulation m) {
  switch (m) {
    case Modulation::Off: return "off";
    case Modulation::Gradient: return "gradient";
    case Modulation::Loss: return "loss";
  }
  return "?";
}

OptimizerKind parse_optimizer(const std::string& name) {
  if (name == "sgd") return OptimizerKind::SGD;
  if (name == "adam") return OptimizerKind::Adam;
  throw Error(Errc::ConfigInvalid, "unknown optimizer '" + name + "' (sgd|adam)");
}

std::string optimizer_name(OptimizerKind k) { return k == OptimizerKind::SGD ? "sgd" : "adam"; }

LossSpace parse_loss_space(const std::string& name) {
  if (name == "denormalized") return LossSpace::Denormalized;
  if (name == "normalized") return LossSpace::Normalized;
  throw Error(Errc::ConfigInvalid, "unknown loss space '" + name + "' (denormalized|normalized)");
}

std::string loss_space_name(LossSpace s) { return s == LossSpace::Denormalized ? "denormalized" : "normalized"; }

void validate(const TrainConfig& c) {
  if (!(c.lr > 0.0)) throw Error(Errc::ConfigInvalid, "train.lr must be positive");
  if (c.batch_size == 0) throw Error(Errc::ConfigInvalid, "train.batch_size must be at least 1");
  if (c.max_epochs == 0) throw Error(Errc::ConfigInvalid, "train.max_epochs must be at least 1");
  if (!(c.beta1 >= 0.0 && c.beta1 < 1.0) || !(c.beta2 >= 0.0 && c.beta2 < 1.0)) {
    throw Error(Errc::ConfigInvalid, "train.beta1 and train.beta2 must lie in [0, 1)");
  }
  if (!(c.eps > 0.0)) throw Error(Errc::ConfigInvalid, "train.eps must be positive");
  if (!(c.balance.c_max >= 1.0)) throw Error(Errc::ConfigInvalid, "balance.c_max must be at least 1");
  if (!(c.balance.ema_decay >= 0.0 && c.balance.ema_decay < 1.0)) {
    throw Error(Errc::ConfigInvalid, "balance.ema_decay must lie in [0, 1)");
  }
}

void SGD::step(const std::vector<ad::Parameter*>& params) {
  for (auto* p : params) p->value -= lr_ * p->grad;
}

void Adam::step(const std::vector<ad::Parameter*>& params) {
  if (m_.empty()) {
    for (auto* p : params) {
      m_.push_back(Matrix::Zero(p->value.rows(), p->value.cols()));
      v_.push_back(Matrix::Zero(p->value.rows(), p->value.cols()));
    }
  }
  if (m_.size() != params.size()) throw Error(Errc::ShapeMismatch, "optimizer was built for a different parameter list");
  ++t_;
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto* p = params[i];
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * p->grad;
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * p->grad.cwiseAbs2();
    p->value.array() -= lr_ * (m_[i].array() / bc1) / ((v_[i].array() / bc2).sqrt() + eps_);
  }
}

std::unique_ptr<Optimizer> make_optimizer(const TrainConfig& c) {
  if (c.optimizer == OptimizerKind::SGD) return std::make_unique<SGD>(c.lr);
  return std::make_unique<Adam>(c.lr, c.beta1, c.beta2, c.eps);
}

StepResult train_step(model::ForecastModel& model, Optimizer& optimizer, const SeriesTensor& x, const SeriesTensor& y,
                      const TrainConfig& config, balance::FrequencyMonitor& monitor,
                      const std::optional<std::vector<double>>& forced) {
  if (y.batch != x.batch || y.variates != x.variates || y.length() != model.config().task.horizon) {
    throw Error(Errc::ShapeMismatch, "target batch does not match the task horizon");
  }
  model.zero_grad();
  ad::Tape tape;
  auto fwd = model.forward(tape, x);

  ad::Var loss;
  if (config.loss_space == LossSpace::Denormalized) {
    loss = tape.smooth_l1(fwd.prediction, y.values);
  } else {
    loss = tape.smooth_l1(fwd.normalized_prediction, norm::revin_apply(y, fwd.stats).values);
  }
  StepResult out;
  out.loss = tape.value(loss)(0, 0);
  if (!std::isfinite(out.loss)) {
    std::ostringstream msg;
    msg << "training loss is " << out.loss << " (batch " << x.batch << "x" << x.variates
        << ", input range [" << x.values.minCoeff() << ", " << x.values.maxCoeff() << "])";
    throw Error(Errc::NonFiniteLoss, msg.str());
  }

  // Monitor: predicted bands against the decomposed, RevIN-normalized target.
  const auto target = balance::decompose_target(norm::revin_apply(y, fwd.stats), model.config().wavelet);
  out.report = monitor.observe(model::collect_bands(tape, fwd, model.horizon_lengths()), target);
  std::vector<double> c;
  if (forced) {
    if (forced->size() != model.branch_count()) {
      throw Error(Errc::BranchCountMismatch, std::to_string(forced->size()) + " coefficients for " +
                                                 std::to_string(model.branch_count()) + " branches");
    }
    c = *forced;
  } else if (config.balance.modulation == Modulation::Off) {
    c.assign(model.branch_count(), 1.0);
  } else {
    c = balance::modulation_coefficients(out.report, config.balance.c_max);
  }
  out.report.coefficients = c;

  const bool loss_mode = config.balance.modulation == Modulation::Loss;
  tape.backward(loss, loss_mode ? balance::modulate_loss_alternative(1.0, c) : 1.0);
  if (config.balance.modulation == Modulation::Gradient || (forced && !loss_mode)) {
    std::vector<std::vector<ad::Parameter*>> owned;
    for (std::size_t v = 0; v < model.branch_count(); ++v) owned.push_back(model.branch_parameters(v));
    balance::apply_modulation(owned, c);
  }
  optimizer.step(model.parameters());
  return out;
}

SeriesTensor predict(model::ForecastModel& model, const SeriesTensor& x) {
  return model::model_forward(model, x).prediction;
}

std::vector<Matrix> snapshot(model::ForecastModel& model) {
  std::vector<Matrix> out;
  for (auto* p : model.parameters()) out.push_back(p->value);
  return out;
}

void restore(model::ForecastModel& model, const std::vector<Matrix>& values) {
  auto params = model.parameters();
  if (params.size() != values.size()) throw Error(Errc::ShapeMismatch, "snapshot does not match the model");
  for (std::size_t i = 0; i < params.size(); ++i) params[i]->value = values[i];
}

History fit(model::ForecastModel& model, const data::Dataset& dataset, const TrainConfig& config,
            const FitCallbacks& callbacks) {
  validate(config);
  const auto& task = model.config().task;
  if (dataset.train.cols() == 0 || dataset.validation.cols() == 0) {
    throw Error(Errc::EmptySplit, "training needs non-empty train and validation splits");
  }
  data::WindowSet train(dataset.train, task.lookback, task.horizon);
  // Validation windows are checked up front so a short split fails before training.
  data::WindowSet val_windows(dataset.validation, task.lookback, task.horizon);
  (void)val_windows;

  auto optimizer = make_optimizer(config);
  balance::FrequencyMonitor monitor(config.balance.metric, config.balance.ema, config.balance.ema_decay);
  std::mt19937_64 rng(config.seed);
  History history;
  auto& st = history.state;
  std::vector<Matrix> best = snapshot(model);
  const std::size_t patience = std::max<std::size_t>(1, config.patience);
  std::vector<std::size_t> order(train.size());
  SeriesTensor x, y;
  std::vector<std::size_t> idx;

  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    double loss_sum = 0.0;
    std::size_t batches = 0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      if (config.max_steps && st.step >= config.max_steps) {
        history.budget_exhausted = true;
        break;
      }
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      idx.assign(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(end));
      train.gather(idx, x, y);
      StepResult r = train_step(model, *optimizer, x, y, config, monitor);
      r.report.batch_index = st.step;
      ++st.step;
      loss_sum += r.loss;
      ++batches;
      if (callbacks.on_step) callbacks.on_step(r, st.step);
    }
    if (batches == 0) break;

    EpochRecord rec;
    rec.epoch = epoch;
    rec.steps = st.step;
    rec.train_loss = loss_sum / static_cast<double>(batches);
    rec.val_mse = eval::evaluate(model, dataset.validation, task.lookback, task.horizon,
                                 eval::EvalOptions{std::max<std::size_t>(config.batch_size, 64)})
                      .mse;
    if (!std::isfinite(rec.val_mse)) throw Error(Errc::NonFiniteLoss, "validation MSE is not finite");
    if (rec.val_mse < st.best_val) {
      st.best_val = rec.val_mse;
      st.best_epoch = epoch;
      st.since_improvement = 0;
      rec.improved = true;
      best = snapshot(model);
    } else {
      ++st.since_improvement;
    }
    history.epochs.push_back(rec);
    log::info("epoch " + std::to_string(epoch) + " steps " + std::to_string(st.step) + " train " +
              std::to_string(rec.train_loss) + " val_mse " + std::to_string(rec.val_mse) +
              (rec.improved ? " *" : ""));
    if (callbacks.on_epoch) callbacks.on_epoch(rec);
    if (st.since_improvement >= patience) {
      history.stopped_early = true;
      break;
    }
    if (history.budget_exhausted) break;
  }
  restore(model, best);
  return history;
}

}  // namespace beat::train
