#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "data/dataset.hpp"
#include "eval/metrics.hpp"
#include "model/forecaster.hpp"
#include "train/trainer.hpp"

namespace beat::config {

struct DataConfig {
  std::string source = "csv";  // csv | synthetic
  std::string name = "ETTh1";
  std::string path = "data/ETTh1.csv";
  // Zero sizes use the known-dataset table, else a 70/10/20 division.
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;
  bool standardize = true;
  // synthetic source
  std::string tones = "1:48:0;0.1:4:0";
  double noise = 0.1;
  std::size_t length = 4000;
  std::uint64_t synthetic_seed = 7;
  std::size_t variates = 1;
};

struct RunConfig {
  DataConfig data;
  model::ModelConfig model;
  train::TrainConfig train;
  eval::Space eval_space = eval::Space::Standardized;
  std::size_t eval_batch = 256;
  std::string output_root;  // empty: $BEAT_OUTPUT_ROOT, else "runs"
  std::string run_name;     // empty: derived from dataset, horizon and hash
};

/// Documented key with its default, in the order the snapshot writes them.
struct KeyInfo {
  std::string key;
  std::string default_value;
  std::string doc;
};

const std::vector<KeyInfo>& schema();

RunConfig defaults();

/// Sets one key; accepts a unique suffix of a key ("horizon" for
/// "task.horizon"). Unknown keys and malformed values throw ConfigInvalid with
/// the key path in the message.
void set(RunConfig& config, const std::string& key, const std::string& value);
std::string get(const RunConfig& config, const std::string& key);

/// Parses "key = value" lines; '#' starts a comment.
RunConfig parse(const std::string& text, const std::string& source = "<config>");
RunConfig load(const std::string& path);

/// Applies "key=value" overrides in order.
void apply_overrides(RunConfig& config, const std::vector<std::string>& overrides);

/// Every key, resolved, one per line in schema order.
std::string to_text(const RunConfig& config);

/// FNV-1a 64 over the resolved keys except output.*, as 16 hex digits.
std::string config_hash(const RunConfig& config);

/// Cross-field checks (wavelet validity, positive sizes, ...).
void validate(const RunConfig& config);

/// Variate count implied by the data section when it is known without
/// reading the file (known dataset table or synthetic source).
std::optional<std::size_t> declared_variates(const RunConfig& config);

std::string output_root(const RunConfig& config);
std::string run_directory(const RunConfig& config);

}  // namespace beat::config
