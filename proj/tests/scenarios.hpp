#pragma once

// Seeded training scenarios shared by the unit tests and the acceptance run.

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "data/dataset.hpp"
#include "eval/metrics.hpp"
#include "train/trainer.hpp"

namespace beat::testing {

inline Matrix two_sinusoids(std::size_t length) {
  Matrix s(1, static_cast<Eigen::Index>(length));
  for (std::size_t t = 0; t < length; ++t) {
    const double u = static_cast<double>(t);
    s(0, static_cast<Eigen::Index>(t)) = std::sin(2.0 * M_PI * u / 24.0) + 0.5 * std::sin(2.0 * M_PI * u / 7.0 + 1.0);
  }
  return s;
}

struct OverfitResult {
  double train_mse = 0.0;
  std::size_t windows = 0;
  std::size_t steps = 0;
  double seconds = 0.0;
};

// 64 windows of a noiseless two-tone series, trained for a fixed step count
// with full-batch revisits; reports MSE over the training windows.
inline OverfitResult overfit_two_sinusoids(std::size_t steps, std::uint64_t seed = 1) {
  const auto start = std::chrono::steady_clock::now();
  model::ModelConfig mc;
  mc.task = model::Task{96, 96, 1};
  model::ForecastModel m(mc, seed);
  const Matrix series = two_sinusoids(96 + 96 + 63);
  data::WindowSet windows(series, 96, 96);

  train::TrainConfig tc;
  auto opt = train::make_optimizer(tc);
  balance::FrequencyMonitor monitor(tc.balance.metric, false);
  std::vector<std::size_t> order(windows.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  SeriesTensor x, y;
  std::size_t done = 0;
  while (done < steps) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t s = 0; s < order.size() && done < steps; s += tc.batch_size, ++done) {
      std::vector<std::size_t> idx(order.begin() + static_cast<std::ptrdiff_t>(s),
                                   order.begin() + static_cast<std::ptrdiff_t>(std::min(order.size(), s + tc.batch_size)));
      windows.gather(idx, x, y);
      train::train_step(m, *opt, x, y, tc, monitor);
    }
  }
  OverfitResult r;
  r.windows = windows.size();
  r.steps = done;
  r.train_mse = eval::evaluate(m, series, 96, 96, eval::EvalOptions{64}).mse;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace beat::testing
