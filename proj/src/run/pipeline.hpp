#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config/run_config.hpp"
#include "eval/metrics.hpp"
#include "train/trainer.hpp"

namespace beat::run {

/// Loads (or generates) the configured series and cuts the standardized splits.
data::Dataset build_dataset(const config::RunConfig& config);

model::ModelConfig model_config(const config::RunConfig& config, std::size_t variates);

struct TrainOutcome {
  std::string run_dir;
  train::History history;
  eval::MetricsRow test;
  double predict_windows_per_second = 0.0;
  double seconds = 0.0;
};

/// Full run: fit, test evaluation, and the run directory
///   config.cfg  checkpoint.bin  metrics.csv  balance_log.jsonl  result.json
TrainOutcome train(const config::RunConfig& config);

/// Re-evaluates a trained run on its test split. `run` is a run directory or a
/// checkpoint path. A non-empty `dataset` names the data the caller expects
/// (a known name or a CSV path); it must agree with the checkpoint's.
eval::MetricsRow evaluate(const std::string& run, const std::string& dataset = "",
                          const std::vector<std::string>& overrides = {});

/// Evaluates several runs and formats the four-horizon table.
eval::Report report(const std::vector<std::string>& runs);

/// Writes one CSV per band per variate plus the round-trip error, returning
/// the maximum absolute reconstruction error.
struct DecomposeOutcome {
  std::vector<std::string> files;
  double max_error = 0.0;
  std::size_t bands = 0;
};
DecomposeOutcome decompose_csv(const std::string& csv_path, const std::string& wavelet, int level,
                               const std::string& out_dir);

struct BandSummary {
  std::string band;  // D1..Df, A
  double ratio_mean = 0.0, ratio_min = 0.0, ratio_max = 0.0;
  double coeff_mean = 0.0, coeff_min = 0.0, coeff_max = 0.0;
};

struct BalanceSummary {
  std::size_t batches = 0;
  int level = 0;
  std::size_t degenerate = 0;
  double max_detail_mean_error = 0.0;  // max over batches of |mean(r_D) - 1|
  std::vector<BandSummary> bands;
  std::string text;
};

/// Reads <run>/balance_log.jsonl; optionally exports one CSV row per batch.
BalanceSummary inspect_balance(const std::string& run_dir, const std::string& export_csv = "");

}  // namespace beat::run
