#pragma once

#include <cstddef>

#include <Eigen/Core>

namespace beat {

/// Row-major dense matrix. Series batches are stored one series per row so a
/// [batch, variate, time] tensor is a [batch * variate, time] matrix.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

/// Dense [batch, variate, time] array of forecasting windows.
struct SeriesTensor {
  std::size_t batch = 0;
  std::size_t variates = 0;
  Matrix values;  // rows = batch * variates, cols = time

  SeriesTensor() = default;
  SeriesTensor(std::size_t b, std::size_t n, std::size_t t)
      : batch(b), variates(n), values(Matrix::Zero(static_cast<Eigen::Index>(b * n), static_cast<Eigen::Index>(t))) {}
  SeriesTensor(std::size_t b, std::size_t n, Matrix m) : batch(b), variates(n), values(std::move(m)) {}

  std::size_t length() const { return static_cast<std::size_t>(values.cols()); }
  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }

  double& at(std::size_t b, std::size_t n, std::size_t t) {
    return values(static_cast<Eigen::Index>(b * variates + n), static_cast<Eigen::Index>(t));
  }
  double at(std::size_t b, std::size_t n, std::size_t t) const {
    return values(static_cast<Eigen::Index>(b * variates + n), static_cast<Eigen::Index>(t));
  }
};

}  // namespace beat
