#include <gtest/gtest.h>

#include <random>

#include "common/error.hpp"
#include "norm/revin.hpp"

using namespace beat;
using namespace beat::norm;

namespace {

// Windows with per-row offsets and spreads; spread sets the variance scale.
SeriesTensor windows(std::size_t b, std::size_t n, std::size_t t, double spread, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.5, 1.0);
  SeriesTensor x(b, n, t);
  for (Eigen::Index r = 0; r < x.values.rows(); ++r) {
    const double off = 50.0 * g(rng), s = spread * u(rng);
    for (Eigen::Index c = 0; c < x.values.cols(); ++c) x.values(r, c) = off + s * g(rng);
  }
  return x;
}

}  // namespace

TEST(RevinNormalize, ConstantWindow) {
  SeriesTensor x(1, 1, 6);
  x.values.setConstant(5.0);
  auto n = revin_normalize(x);
  EXPECT_EQ(n.output.values.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(n.stats.mean(0), 5.0);
  EXPECT_TRUE(n.stats.degenerate);
}

TEST(RevinNormalize, TwoPointWindowHandEvaluated) {
  SeriesTensor x(1, 1, 2);
  x.values << 0.0, 2.0;
  auto n = revin_normalize(x);
  // mean 1, population variance 1
  EXPECT_EQ(n.stats.mean(0), 1.0);
  EXPECT_EQ(n.stats.variance(0), 1.0);
  const double s = 1.0 / std::sqrt(1.0 + kDefaultEpsilon);
  EXPECT_NEAR(n.output.values(0, 0), -s, 1e-15);
  EXPECT_NEAR(n.output.values(0, 1), s, 1e-15);
  EXPECT_NEAR(n.output.values(0, 1), 1.0, 1e-5);
  EXPECT_FALSE(n.stats.degenerate);
}

TEST(RevinNormalize, ZeroMeanUnitVariance) {
  // Normalized variance is var / (var + eps), so |var - 1| < 1e-6 needs
  // windows with variance above about 10 for eps = 1e-5.
  auto x = windows(8, 3, 96, 30.0, 1);
  auto n = revin_normalize(x);
  for (Eigen::Index r = 0; r < x.values.rows(); ++r) {
    const auto row = n.output.values.row(r);
    const double mean = row.mean();
    const double var = (row.array() - mean).square().mean();
    EXPECT_LT(std::abs(mean), 1e-10);
    EXPECT_LT(std::abs(var - 1.0), 1e-6);
  }
}

TEST(RevinNormalize, TooShort) { EXPECT_THROW(revin_normalize(SeriesTensor(1, 1, 1)), Error); }

TEST(RevinDenormalize, RoundTrip) {
  for (double spread : {0.01, 1.0, 100.0}) {
    auto x = windows(4, 5, 33, spread, 2);
    auto n = revin_normalize(x);
    auto back = revin_denormalize(n.output, n.stats);
    EXPECT_LT((back.values - x.values).cwiseAbs().maxCoeff(), 1e-10) << spread;
  }
}

TEST(RevinDenormalize, ZeroPredictionGivesMean) {
  auto x = windows(3, 2, 20, 2.0, 3);
  auto n = revin_normalize(x);
  auto y = revin_denormalize(SeriesTensor(3, 2, 7), n.stats);
  for (Eigen::Index r = 0; r < y.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < 7; ++c) EXPECT_EQ(y.values(r, c), n.stats.mean(r));
  }
}

TEST(RevinDenormalize, MatchesScalarLoop) {
  auto x = windows(3, 4, 24, 3.0, 4);
  auto n = revin_normalize(x);
  auto pred = windows(3, 4, 12, 1.0, 5);
  auto y = revin_denormalize(pred, n.stats);
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t v = 0; v < 4; ++v) {
      double mean = 0.0;
      for (std::size_t t = 0; t < 24; ++t) mean += x.at(b, v, t);
      mean /= 24.0;
      double var = 0.0;
      for (std::size_t t = 0; t < 24; ++t) var += (x.at(b, v, t) - mean) * (x.at(b, v, t) - mean);
      var /= 24.0;
      const double sd = std::sqrt(var + kDefaultEpsilon);
      for (std::size_t k = 0; k < 12; ++k) EXPECT_NEAR(y.at(b, v, k), pred.at(b, v, k) * sd + mean, 1e-12);
    }
  }
}

TEST(RevinDenormalize, StatsMismatch) {
  auto n = revin_normalize(windows(2, 3, 10, 1.0, 6));
  try {
    revin_denormalize(SeriesTensor(3, 2, 4), n.stats);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::StatsMismatch);
  }
}

TEST(RevinProperties, AffineInvariance) {
  // The epsilon term shifts the result by about eps |1 - 1/a^2| / (2 var);
  // windows with spread 200 keep that below 1e-8 even at a = 0.5.
  auto x = windows(4, 3, 48, 200.0, 7);
  auto base = revin_normalize(x).output.values;
  for (double a : {0.5, 1.0, 2.5}) {
    for (double b : {-1000.0, 0.0, 37.0}) {
      SeriesTensor y(x.batch, x.variates, Matrix((a * x.values.array() + b).matrix()));
      EXPECT_LT((revin_normalize(y).output.values - base).cwiseAbs().maxCoeff(), 1e-8) << a << " " << b;
    }
  }
}
