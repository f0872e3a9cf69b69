#include "norm/revin.hpp"

#include "common/error.hpp"
#include "common/log.hpp"

namespace beat::norm {
namespace {

void check_layout(const SeriesTensor& y, const InstanceStats& stats) {
  if (y.batch != stats.batch || y.variates != stats.variates ||
      static_cast<std::size_t>(stats.mean.size()) != y.rows()) {
    throw Error(Errc::StatsMismatch, "tensor layout [" + std::to_string(y.batch) + "," +
                                         std::to_string(y.variates) + "] does not match statistics [" +
                                         std::to_string(stats.batch) + "," + std::to_string(stats.variates) + "]");
  }
}

}  // namespace

Normalized revin_normalize(const SeriesTensor& x, double epsilon) {
  if (x.length() < 2) throw Error(Errc::ShapeMismatch, "instance normalization needs at least 2 time steps");
  Normalized out;
  auto& st = out.stats;
  st.batch = x.batch;
  st.variates = x.variates;
  st.epsilon = epsilon;
  st.mean = x.values.rowwise().mean();
  const Matrix centered = x.values.colwise() - st.mean;
  st.variance = centered.rowwise().squaredNorm() / static_cast<double>(x.length());
  if ((st.variance.array() < 1e-12).any()) {
    st.degenerate = true;
    log::debug("instance normalization: degenerate window (variance < 1e-12)");
  }
  const Vector inv = st.scale().cwiseInverse();
  out.output = SeriesTensor(x.batch, x.variates, Matrix(centered.array().colwise() * inv.array()));
  return out;
}

SeriesTensor revin_apply(const SeriesTensor& y, const InstanceStats& stats) {
  check_layout(y, stats);
  const Vector inv = stats.scale().cwiseInverse();
  return SeriesTensor(y.batch, y.variates,
                      Matrix((y.values.colwise() - stats.mean).array().colwise() * inv.array()));
}

SeriesTensor revin_denormalize(const SeriesTensor& y, const InstanceStats& stats) {
  check_layout(y, stats);
  const Vector scale = stats.scale();
  return SeriesTensor(y.batch, y.variates,
                      Matrix((y.values.array().colwise() * scale.array()).colwise() + stats.mean.array()));
}

}  // namespace beat::norm
