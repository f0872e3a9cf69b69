#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "common/types.hpp"
#include "data/dataset.hpp"
#include "model/forecaster.hpp"

namespace beat::eval {

// Element-wise means over equal-shaped arrays. Shape disagreement throws ShapeMismatch.
double mse(const Matrix& y, const Matrix& y_hat);
double mae(const Matrix& y, const Matrix& y_hat);
double rmse(const Matrix& y, const Matrix& y_hat);
/// Coefficient of determination, 1 - SS_res / SS_tot over all elements.
double r2(const Matrix& y, const Matrix& y_hat);

enum class Space { Standardized, Original };

Space parse_space(const std::string& name);
std::string space_name(Space space);

struct MetricsRow {
  std::string dataset;
  std::size_t horizon = 0;
  double mse = 0.0;
  double mae = 0.0;
  std::size_t windows = 0;
  std::uint64_t seed = 0;
  std::string config_hash;
};

struct EvalOptions {
  std::size_t batch_size = 32;
  Space space = Space::Standardized;
  const data::Standardizer* standardizer = nullptr;  // required for Space::Original
};

/// Averages MSE and MAE over every stride-1 window of `split`. Per-window
/// sums are accumulated in window order so the result does not depend on the
/// batch size.
MetricsRow evaluate(model::ForecastModel& model, const Matrix& split, std::size_t lookback, std::size_t horizon,
                    const EvalOptions& options = {});

/// Maps a batch of lookbacks [B, N, T] and their window indices to
/// predictions laid out as [B*N, K] rows.
using Predictor = std::function<Matrix(const SeriesTensor& x, const std::vector<std::size_t>& windows)>;

MetricsRow evaluate(const Predictor& predictor, const Matrix& split, std::size_t lookback, std::size_t horizon,
                    const EvalOptions& options = {});

struct Report {
  std::vector<MetricsRow> rows;  // sorted by dataset, then horizon
  struct Average {
    std::string dataset;
    double mse = 0.0;
    double mae = 0.0;
  };
  std::vector<Average> averages;
  std::string text;  // human table
  std::string json;  // machine-readable records
};

inline constexpr std::size_t kReportHorizons[] = {96, 192, 336, 720};

/// Groups rows per dataset, requires every horizon in {96, 192, 336, 720}
/// (MissingHorizon otherwise) and appends the arithmetic-mean "Avg" row.
Report report_table(const std::vector<MetricsRow>& rows);

/// Fixed-point text with round-half-up applied to the shortest decimal
/// representation, so 0.2385 prints as 0.239 at three digits.
std::string format_fixed(double value, int digits);

}  // namespace beat::eval
