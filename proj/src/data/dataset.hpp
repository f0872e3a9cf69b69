#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "common/types.hpp"

namespace beat::data {

/// Dataset description. Split sizes are in time points and taken
/// chronologically from the start of the file.
struct DatasetSpec {
  std::string name;
  std::string path;
  std::size_t variates = 0;
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;
  std::string frequency;

  bool pinned() const { return train + validation + test > 0; }
};

/// Benchmark datasets with published variate counts and split sizes
/// (ETTh1, ETTh2, ETTm1, ETTm2, Weather, Traffic, ECL).
std::optional<DatasetSpec> known_dataset(const std::string& name);

/// Column-per-variate numeric data, stored [variates, time].
struct RawSeries {
  std::vector<std::string> columns;
  Matrix values;

  std::size_t variates() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t length() const { return static_cast<std::size_t>(values.cols()); }
};

/// Reads a CSV with a header row, a leading timestamp column and numeric
/// columns. When `spec` pins variates/splits the file is checked against it.
RawSeries load_csv(const std::string& path, const std::optional<DatasetSpec>& spec = std::nullopt);
RawSeries parse_csv(std::istream& in, const std::string& source,
                    const std::optional<DatasetSpec>& spec = std::nullopt);

/// Per-variate statistics estimated on the train split only.
struct Standardizer {
  Vector mean;
  Vector scale;  // 1 for degenerate variates (centered only)
  std::vector<bool> degenerate;

  Matrix apply(const Matrix& raw) const;
  Matrix invert(const Matrix& standardized) const;
};

Standardizer fit_standardizer(const Matrix& raw, std::size_t train_length);

struct SplitSizes {
  std::size_t train = 0, validation = 0, test = 0;
};

/// Standardized series cut into chronological splits.
struct Dataset {
  std::string name;
  Standardizer standardizer;
  Matrix train, validation, test;  // [variates, split length]

  std::size_t variates() const { return static_cast<std::size_t>(train.rows()); }
};

/// Splits (and optionally standardizes) a raw series. Sizes of zero fall back
/// to a 70/10/20 chronological division.
Dataset make_dataset(const RawSeries& raw, SplitSizes sizes, bool standardize, const std::string& name);

/// One lookback/horizon pair; `origin` is the first lookback index in the split.
struct WindowSample {
  Matrix x;  // [variates, lookback]
  Matrix y;  // [variates, horizon]
  std::size_t origin = 0;
};

/// Lazily sliced stride-s windows over one split.
class WindowSet {
 public:
  WindowSet(const Matrix& split, std::size_t lookback, std::size_t horizon, std::size_t stride = 1);

  std::size_t size() const { return count_; }
  std::size_t lookback() const { return lookback_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t variates() const { return static_cast<std::size_t>(split_->rows()); }
  std::size_t origin(std::size_t i) const { return i * stride_; }

  WindowSample at(std::size_t i) const;

  /// Stacks the selected windows into [B, N, T] inputs and [B, N, K] targets.
  void gather(const std::vector<std::size_t>& indices, SeriesTensor& x, SeriesTensor& y) const;

 private:
  const Matrix* split_;
  std::size_t lookback_, horizon_, stride_, count_;
};

struct Tone {
  double amplitude = 1.0;
  double period = 24.0;
  double phase = 0.0;
};

/// Sum of sinusoids plus seeded Gaussian noise, [variates, length]. Each
/// variate receives independent noise.
RawSeries synthetic_multitone(const std::vector<Tone>& tones, double noise_sigma, std::size_t length,
                              std::uint64_t seed, std::size_t variates = 1);

/// Parses "amp:period:phase;amp:period:phase".
std::vector<Tone> parse_tones(const std::string& text);
std::string format_tones(const std::vector<Tone>& tones);

}  // namespace beat::data
