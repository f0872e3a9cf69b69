#include "model/forecaster.hpp"

#include <cmath>

#include "common/error.hpp"

namespace beat::model {
namespace {

using ad::Parameter;
using ad::Tape;
using ad::Var;
using Index = Eigen::Index;

Parameter weight(const std::string& name, std::size_t in, std::size_t out, std::mt19937_64& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in));
  std::uniform_real_distribution<double> dist(-bound, bound);
  Matrix w(static_cast<Index>(in), static_cast<Index>(out));
  for (Index i = 0; i < w.size(); ++i) w.data()[i] = dist(rng);
  return Parameter(name, std::move(w));
}

Parameter bias(const std::string& name, std::size_t out) {
  return Parameter(name, Matrix::Zero(1, static_cast<Index>(out)));
}

}  // namespace

std::size_t patch_count(std::size_t length, std::size_t patch_len, std::size_t stride) {
  if (patch_len == 0 || stride == 0) throw Error(Errc::ConfigInvalid, "patch length and stride must be positive");
  if (length <= patch_len) return 1;
  return (length - patch_len + stride - 1) / stride + 1;
}

BranchNetwork::BranchNetwork(int index, std::size_t input_length, std::size_t output_length,
                             const BranchConfig& config, std::mt19937_64& rng)
    : index_(index),
      input_length_(input_length),
      output_length_(output_length),
      patches_(patch_count(input_length, config.patch_len, config.stride)),
      config_(config) {
  if (config.width == 0) throw Error(Errc::ConfigInvalid, "embedding width must be positive");
  const std::string prefix = "branch" + std::to_string(index) + "/";
  embed_w_ = weight(prefix + "embed/weight", config.patch_len, config.width, rng);
  embed_b_ = bias(prefix + "embed/bias", config.width);
  mixers_.reserve(config.depth);
  for (std::size_t d = 0; d < config.depth; ++d) {
    const std::string m = prefix + "mixer" + std::to_string(d + 1) + "/";
    Mixer mixer;
    mixer.token_w = weight(m + "token/weight", patches_, patches_, rng);
    mixer.token_b = bias(m + "token/bias", patches_);
    mixer.channel_w = weight(m + "channel/weight", config.width, config.width, rng);
    mixer.channel_b = bias(m + "channel/bias", config.width);
    mixers_.push_back(std::move(mixer));
  }
  head_w_ = weight(prefix + "head/weight", patches_ * config.width, output_length, rng);
  head_b_ = bias(prefix + "head/bias", output_length);
}

Var BranchNetwork::forward(Tape& tape, Var input) {
  const Matrix& x = tape.value(input);
  if (static_cast<std::size_t>(x.cols()) != input_length_) {
    throw Error(Errc::ShapeMismatch, "branch " + std::to_string(index_) + " expects input length " +
                                         std::to_string(input_length_) + ", got " + std::to_string(x.cols()));
  }
  const auto series = static_cast<std::size_t>(x.rows());
  Var h = tape.patchify(input, config_.patch_len, config_.stride, patches_);
  h = tape.dense(h, embed_w_, embed_b_);  // [S*P, d]
  for (auto& m : mixers_) {
    Var t = tape.swap_inner(h, series);  // [S*d, P]
    t = tape.activation(tape.dense(t, m.token_w, m.token_b), ad::Activation::GELU);
    h = tape.add(h, tape.swap_inner(t, series));
    Var c = tape.activation(tape.dense(h, m.channel_w, m.channel_b), ad::Activation::GELU);
    h = tape.add(h, c);
  }
  h = tape.reshape(h, series, patches_ * config_.width);
  return tape.dense(h, head_w_, head_b_);
}

std::vector<Parameter*> BranchNetwork::parameters() {
  std::vector<Parameter*> out{&embed_w_, &embed_b_};
  for (auto& m : mixers_) {
    out.insert(out.end(), {&m.token_w, &m.token_b, &m.channel_w, &m.channel_b});
  }
  out.insert(out.end(), {&head_w_, &head_b_});
  return out;
}

ForecastModel::ForecastModel(const ModelConfig& config, std::uint64_t seed) : config_(config) {
  bank_ = wavelet::filter_bank(config.wavelet);
  const auto f = static_cast<std::size_t>(config.wavelet.level);
  if (config.wavelet.level < 1) throw Error(Errc::ConfigInvalid, "wavelet level must be >= 1");
  for (std::size_t len : {config.task.lookback, config.task.horizon}) {
    if (len + (len % 2) < (std::size_t{1} << f)) {
      throw Error(Errc::SignalTooShort, "length " + std::to_string(len) + " is too short for " +
                                            std::to_string(f) + " decomposition levels");
    }
  }
  if (config.task.variates == 0) throw Error(Errc::ConfigInvalid, "variate count must be positive");
  lookback_lengths_ = wavelet::level_lengths(config.task.lookback, config.wavelet.level);
  horizon_lengths_ = wavelet::level_lengths(config.task.horizon, config.wavelet.level);
  std::mt19937_64 rng(seed);
  branches_.reserve(f + 1);
  for (std::size_t i = 0; i < f; ++i) {
    branches_.emplace_back(static_cast<int>(i + 1), lookback_lengths_.coefficients[i],
                           horizon_lengths_.coefficients[i], config.branch, rng);
  }
  branches_.emplace_back(static_cast<int>(f + 1), lookback_lengths_.coefficients.back(),
                         horizon_lengths_.coefficients.back(), config.branch, rng);
  if (config.revin_affine) {
    const auto n = static_cast<Index>(config.task.variates);
    affine_gamma_ = std::make_unique<Parameter>("revin/affine_weight", Matrix::Ones(1, n));
    affine_beta_ = std::make_unique<Parameter>("revin/affine_bias", Matrix::Zero(1, n));
  }
}

ForecastModel::Forward ForecastModel::forward(Tape& tape, const SeriesTensor& x) {
  const auto& task = config_.task;
  if (x.variates != task.variates || x.length() != task.lookback) {
    throw Error(Errc::ShapeMismatch, "model expects [B," + std::to_string(task.variates) + "," +
                                         std::to_string(task.lookback) + "] input, got [" +
                                         std::to_string(x.batch) + "," + std::to_string(x.variates) + "," +
                                         std::to_string(x.length()) + "]");
  }
  if (!x.values.allFinite()) throw Error(Errc::NonFiniteLoss, "input window contains non-finite values");
  const auto& spec = config_.wavelet;
  const int f = spec.level;
  Forward out;
  auto normalized = norm::revin_normalize(x, config_.revin_epsilon);
  out.stats = normalized.stats;
  Var xn = tape.constant(std::move(normalized.output.values));
  if (affine_gamma_) xn = tape.variate_affine(xn, *affine_gamma_, *affine_beta_, false);

  // Decomposition node: all bands concatenated in branch order.
  const wavelet::FilterBank* bank = &bank_;
  const auto lookback = lookback_lengths_;
  auto coeffs = wavelet::dwt_multilevel(tape.value(xn), spec, *bank);
  const Index rows = static_cast<Index>(x.rows());
  Index total = 0;
  for (const auto& d : coeffs.details) total += d.cols();
  total += coeffs.approximation.cols();
  Matrix packed(rows, total);
  {
    Index c = 0;
    for (const auto& d : coeffs.details) {
      packed.middleCols(c, d.cols()) = d;
      c += d.cols();
    }
    packed.middleCols(c, coeffs.approximation.cols()) = coeffs.approximation;
  }
  Var bands_in = tape.custom({xn}, std::move(packed), [spec, bank, lookback, f](const Matrix& g, std::vector<Matrix*>& in) {
    if (!in[0]) return;
    wavelet::CoefficientSet grads;
    grads.lengths = lookback;
    Index c = 0;
    for (int k = 0; k < f; ++k) {
      const auto len = static_cast<Index>(lookback.coefficients[k]);
      grads.details.push_back(g.middleCols(c, len));
      c += len;
    }
    grads.approximation = g.middleCols(c, static_cast<Index>(lookback.coefficients.back()));
    *in[0] += wavelet::dwt_multilevel_backward(grads, spec, *bank);
  });

  Index offset = 0;
  for (std::size_t v = 0; v < branches_.size(); ++v) {
    const std::size_t len = v < static_cast<std::size_t>(f) ? lookback.coefficients[v] : lookback.coefficients.back();
    Var band = tape.slice_cols(bands_in, static_cast<std::size_t>(offset), len);
    offset += static_cast<Index>(len);
    out.bands.push_back(branches_[v].forward(tape, band));
  }

  // Reconstruction node.
  const auto horizon = horizon_lengths_;
  wavelet::CoefficientSet predicted = collect_bands(tape, out, horizon);
  Matrix recon = wavelet::idwt_multilevel(predicted, spec, *bank);
  Var y = tape.custom(out.bands, std::move(recon), [spec, bank, f](const Matrix& g, std::vector<Matrix*>& in) {
    const auto grads = wavelet::idwt_multilevel_backward(g, spec, *bank);
    for (int k = 0; k < f; ++k) {
      if (in[static_cast<std::size_t>(k)]) *in[static_cast<std::size_t>(k)] += grads.details[k];
    }
    if (in[static_cast<std::size_t>(f)]) *in[static_cast<std::size_t>(f)] += grads.approximation;
  });
  if (affine_gamma_) y = tape.variate_affine(y, *affine_gamma_, *affine_beta_, true);
  out.normalized_prediction = y;
  out.prediction = tape.scale_rows(y, out.stats.scale(), out.stats.mean);
  return out;
}

std::vector<Parameter*> ForecastModel::parameters() {
  std::vector<Parameter*> out;
  for (auto& b : branches_) {
    auto p = b.parameters();
    out.insert(out.end(), p.begin(), p.end());
  }
  auto shared = shared_parameters();
  out.insert(out.end(), shared.begin(), shared.end());
  return out;
}

std::vector<Parameter*> ForecastModel::branch_parameters(std::size_t position) {
  return branches_.at(position).parameters();
}

std::vector<Parameter*> ForecastModel::shared_parameters() {
  if (!affine_gamma_) return {};
  return {affine_gamma_.get(), affine_beta_.get()};
}

void ForecastModel::zero_grad() {
  for (auto* p : parameters()) p->zero_grad();
}

wavelet::CoefficientSet collect_bands(const Tape& tape, const ForecastModel::Forward& fwd,
                                      const wavelet::LevelLengths& lengths) {
  wavelet::CoefficientSet c;
  c.lengths = lengths;
  const std::size_t f = fwd.bands.size() - 1;
  for (std::size_t k = 0; k < f; ++k) c.details.push_back(tape.value(fwd.bands[k]));
  c.approximation = tape.value(fwd.bands[f]);
  return c;
}

ModelOutput model_forward(ForecastModel& model, const SeriesTensor& x) {
  Tape tape;
  auto fwd = model.forward(tape, x);
  ModelOutput out;
  out.prediction = SeriesTensor(x.batch, x.variates, tape.value(fwd.prediction));
  out.predicted_coeffs = collect_bands(tape, fwd, model.horizon_lengths());
  out.stats = fwd.stats;
  return out;
}

}  // namespace beat::model
