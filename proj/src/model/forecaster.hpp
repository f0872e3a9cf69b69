#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "autodiff/tape.hpp"
#include "common/types.hpp"
#include "norm/revin.hpp"
#include "wavelet/wavelet.hpp"

namespace beat::model {

/// Patch-mixer branch hyperparameters.
struct BranchConfig {
  std::size_t patch_len = 16;
  std::size_t stride = 8;
  std::size_t width = 32;  // embedding width
  std::size_t depth = 2;   // mixer blocks
};

struct Task {
  std::size_t lookback = 96;
  std::size_t horizon = 96;
  std::size_t variates = 1;
};

struct ModelConfig {
  wavelet::WaveletSpec wavelet;
  BranchConfig branch;
  Task task;
  bool revin_affine = false;
  double revin_epsilon = norm::kDefaultEpsilon;
};

/// Number of patches covering a series of `length` samples. Series shorter
/// than one patch, and any ragged tail, are padded by repeating the last sample.
std::size_t patch_count(std::size_t length, std::size_t patch_len, std::size_t stride);

/// One frequency band's forecaster: patchify -> linear embed -> mixer blocks
/// (token mixing across patches, channel mixing across the embedding, GELU,
/// residual adds) -> flatten -> linear head to the band's horizon length.
class BranchNetwork {
 public:
  BranchNetwork(int index, std::size_t input_length, std::size_t output_length, const BranchConfig& config,
                std::mt19937_64& rng);

  /// [series, input_length] -> [series, output_length]
  ad::Var forward(ad::Tape& tape, ad::Var input);

  int index() const { return index_; }
  std::size_t input_length() const { return input_length_; }
  std::size_t output_length() const { return output_length_; }
  std::size_t patches() const { return patches_; }

  std::vector<ad::Parameter*> parameters();

  ad::Parameter& head_weight() { return head_w_; }
  ad::Parameter& head_bias() { return head_b_; }

 private:
  struct Mixer {
    ad::Parameter token_w, token_b, channel_w, channel_b;
  };

  int index_;
  std::size_t input_length_;
  std::size_t output_length_;
  std::size_t patches_;
  BranchConfig config_;
  ad::Parameter embed_w_, embed_b_;
  std::vector<Mixer> mixers_;
  ad::Parameter head_w_, head_b_;
};

/// RevIN -> multi-level DWT -> one branch per band -> inverse DWT -> de-normalization.
///
/// Branch positions follow the band order used throughout the project:
/// position i (0-based, i < f) forecasts detail D_{i+1}; position f forecasts the
/// approximation. Parameter names carry the 1-based position, "branch<v>/...".
class ForecastModel {
 public:
  ForecastModel(const ModelConfig& config, std::uint64_t seed);

  ForecastModel(const ForecastModel&) = delete;
  ForecastModel& operator=(const ForecastModel&) = delete;
  ForecastModel(ForecastModel&&) = default;
  ForecastModel& operator=(ForecastModel&&) = default;

  struct Forward {
    ad::Var prediction;             // [B*N, K], de-normalized
    ad::Var normalized_prediction;  // [B*N, K], before de-normalization
    std::vector<ad::Var> bands;     // predicted coefficients per branch position
    norm::InstanceStats stats;
  };

  /// Records the forward pass of `x` [B, N, T] on `tape`.
  Forward forward(ad::Tape& tape, const SeriesTensor& x);

  const ModelConfig& config() const { return config_; }
  std::size_t branch_count() const { return branches_.size(); }
  BranchNetwork& branch(std::size_t position) { return branches_.at(position); }
  const wavelet::FilterBank& filters() const { return bank_; }

  /// Every trainable parameter, branch-owned ones first in branch order.
  std::vector<ad::Parameter*> parameters();
  std::vector<ad::Parameter*> branch_parameters(std::size_t position);
  /// Parameters not owned by any branch (RevIN affine, when enabled).
  std::vector<ad::Parameter*> shared_parameters();
  void zero_grad();

  /// Horizon-space coefficient lengths (the shape the branches must emit).
  const wavelet::LevelLengths& horizon_lengths() const { return horizon_lengths_; }

 private:
  ModelConfig config_;
  wavelet::FilterBank bank_;
  wavelet::LevelLengths lookback_lengths_;
  wavelet::LevelLengths horizon_lengths_;
  std::vector<BranchNetwork> branches_;
  std::unique_ptr<ad::Parameter> affine_gamma_, affine_beta_;
};

struct ModelOutput {
  SeriesTensor prediction;
  wavelet::CoefficientSet predicted_coeffs;  // normalized space
  norm::InstanceStats stats;
};

/// Forward pass without retaining a tape.
ModelOutput model_forward(ForecastModel& model, const SeriesTensor& x);

/// Collects band values recorded by ForecastModel::forward into a coefficient set.
wavelet::CoefficientSet collect_bands(const ad::Tape& tape, const ForecastModel::Forward& fwd,
                                      const wavelet::LevelLengths& lengths);

}  // namespace beat::model
