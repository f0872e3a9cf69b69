#include "beat/beat.h"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <mutex>
#include <new>
#include <string>

#include "common/error.hpp"
#include "common/log.hpp"
#include "config/run_config.hpp"
#include "run/pipeline.hpp"
#include "train/checkpoint.hpp"

struct beat_config {
  beat::config::RunConfig value;
};

struct beat_model {
  std::unique_ptr<beat::model::ForecastModel> model;
};

namespace {

thread_local std::string g_last_error;

beat_status status_of(beat::ErrorCategory c) {
  switch (c) {
    case beat::ErrorCategory::Config: return BEAT_ERR_CONFIG;
    case beat::ErrorCategory::Data: return BEAT_ERR_DATA;
    case beat::ErrorCategory::Numeric: return BEAT_ERR_NUMERIC;
    case beat::ErrorCategory::Shape: return BEAT_ERR_SHAPE;
    case beat::ErrorCategory::Io: return BEAT_ERR_IO;
  }
  return BEAT_ERR_INTERNAL;
}

beat_status fail(beat_status s, std::string message) {
  g_last_error = std::move(message);
  return s;
}

template <class F>
beat_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const beat::Error& e) {
    return fail(status_of(e.category()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BEAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BEAT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BEAT_ERR_INTERNAL, "unknown exception");
  }
}

beat_status copy_out(const std::string& s, char* buffer, size_t capacity, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buffer || capacity < s.size() + 1) {
    return fail(BEAT_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(s.size() + 1) + " bytes");
  }
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return BEAT_OK;
}

#define REQUIRE(cond, what) \
  if (!(cond)) return fail(BEAT_ERR_INVALID_ARGUMENT, what)

std::mutex g_log_mutex;
beat_log_fn g_log_fn = nullptr;
void* g_log_user = nullptr;

}  // namespace

extern "C" {

const char* beat_version(void) { return "1.0.0"; }

const char* beat_status_name(beat_status s) {
  switch (s) {
    case BEAT_OK: return "ok";
    case BEAT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BEAT_ERR_CONFIG: return "config error";
    case BEAT_ERR_DATA: return "data error";
    case BEAT_ERR_NUMERIC: return "numeric error";
    case BEAT_ERR_SHAPE: return "shape error";
    case BEAT_ERR_IO: return "i/o error";
    case BEAT_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case BEAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* beat_last_error(void) { return g_last_error.c_str(); }

void beat_set_log_callback(beat_log_fn fn, void* user) {
  {
    std::lock_guard<std::mutex> lock(g_log_mutex);
    g_log_fn = fn;
    g_log_user = user;
  }
  if (!fn) {
    beat::log::set_sink({});
    return;
  }
  beat::log::set_sink([](beat::log::Level level, const std::string& msg) {
    beat_log_fn f;
    void* u;
    {
      std::lock_guard<std::mutex> lock(g_log_mutex);
      f = g_log_fn;
      u = g_log_user;
    }
    if (f) f(static_cast<beat_log_level>(level), msg.c_str(), u);
  });
}

void beat_set_log_level(beat_log_level level) { beat::log::set_threshold(static_cast<beat::log::Level>(level)); }

beat_status beat_config_create(beat_config** out) {
  REQUIRE(out, "out is NULL");
  return guarded([&] {
    *out = new beat_config{beat::config::defaults()};
    return BEAT_OK;
  });
}

beat_status beat_config_load(const char* path, beat_config** out) {
  REQUIRE(path && out, "path and out must be non-NULL");
  return guarded([&] {
    *out = new beat_config{beat::config::load(path)};
    return BEAT_OK;
  });
}

beat_status beat_config_parse(const char* text, beat_config** out) {
  REQUIRE(text && out, "text and out must be non-NULL");
  return guarded([&] {
    *out = new beat_config{beat::config::parse(text)};
    return BEAT_OK;
  });
}

void beat_config_destroy(beat_config* config) { delete config; }

beat_status beat_config_set(beat_config* config, const char* key, const char* value) {
  REQUIRE(config && key && value, "config, key and value must be non-NULL");
  return guarded([&] {
    beat::config::set(config->value, key, value);
    return BEAT_OK;
  });
}

beat_status beat_config_get(const beat_config* config, const char* key, char* buffer, size_t capacity, size_t* needed) {
  REQUIRE(config && key, "config and key must be non-NULL");
  return guarded([&] { return copy_out(beat::config::get(config->value, key), buffer, capacity, needed); });
}

beat_status beat_config_text(const beat_config* config, char* buffer, size_t capacity, size_t* needed) {
  REQUIRE(config, "config is NULL");
  return guarded([&] { return copy_out(beat::config::to_text(config->value), buffer, capacity, needed); });
}

beat_status beat_config_hash(const beat_config* config, char* buffer, size_t capacity, size_t* needed) {
  REQUIRE(config, "config is NULL");
  return guarded([&] { return copy_out(beat::config::config_hash(config->value), buffer, capacity, needed); });
}

beat_status beat_config_run_dir(const beat_config* config, char* buffer, size_t capacity, size_t* needed) {
  REQUIRE(config, "config is NULL");
  return guarded([&] { return copy_out(beat::config::run_directory(config->value), buffer, capacity, needed); });
}

beat_status beat_config_key_info(size_t index, const char** key, const char** default_value, const char** doc) {
  const auto& s = beat::config::schema();
  REQUIRE(index < s.size(), "key index out of range");
  if (key) *key = s[index].key.c_str();
  if (default_value) *default_value = s[index].default_value.c_str();
  if (doc) *doc = s[index].doc.c_str();
  return BEAT_OK;
}

beat_status beat_train(const beat_config* config, beat_train_summary* summary) {
  REQUIRE(config, "config is NULL");
  return guarded([&] {
    auto r = beat::run::train(config->value);
    if (summary) {
      summary->test_mse = r.test.mse;
      summary->test_mae = r.test.mae;
      summary->best_val_mse = r.history.state.best_val;
      summary->epochs = r.history.epochs.size();
      summary->best_epoch = r.history.state.best_epoch;
      summary->steps = r.history.state.step;
      summary->stopped_early = r.history.stopped_early ? 1 : 0;
      summary->predict_windows_per_second = r.predict_windows_per_second;
      summary->seconds = r.seconds;
    }
    return BEAT_OK;
  });
}

beat_status beat_evaluate(const char* run, const char* dataset, const char* const* overrides, size_t override_count,
                          beat_metrics* out) {
  REQUIRE(run && out, "run and out must be non-NULL");
  REQUIRE(override_count == 0 || overrides, "overrides is NULL");
  return guarded([&] {
    std::vector<std::string> o;
    for (size_t i = 0; i < override_count; ++i) {
      if (!overrides[i]) return fail(BEAT_ERR_INVALID_ARGUMENT, "override entry is NULL");
      o.emplace_back(overrides[i]);
    }
    const auto row = beat::run::evaluate(run, dataset ? dataset : "", o);
    *out = beat_metrics{row.horizon, row.mse, row.mae, row.windows, row.seed};
    return BEAT_OK;
  });
}

beat_status beat_report_table(const char* const* runs, size_t run_count, int as_json, char* buffer, size_t capacity,
                              size_t* needed) {
  REQUIRE(runs && run_count > 0, "runs must list at least one run");
  return guarded([&] {
    std::vector<std::string> r;
    for (size_t i = 0; i < run_count; ++i) {
      if (!runs[i]) return fail(BEAT_ERR_INVALID_ARGUMENT, "run entry is NULL");
      r.emplace_back(runs[i]);
    }
    const auto report = beat::run::report(r);
    return copy_out(as_json ? report.json : report.text, buffer, capacity, needed);
  });
}

beat_status beat_decompose_csv(const char* csv_path, const char* wavelet, int level, const char* out_dir,
                               double* max_error, size_t* bands) {
  REQUIRE(csv_path && wavelet && out_dir, "csv_path, wavelet and out_dir must be non-NULL");
  return guarded([&] {
    const auto r = beat::run::decompose_csv(csv_path, wavelet, level, out_dir);
    if (max_error) *max_error = r.max_error;
    if (bands) *bands = r.bands;
    return BEAT_OK;
  });
}

beat_status beat_inspect_balance(const char* run_dir, const char* export_csv, beat_balance_summary* out, char* buffer,
                                 size_t capacity, size_t* needed) {
  REQUIRE(run_dir, "run_dir is NULL");
  return guarded([&] {
    const auto s = beat::run::inspect_balance(run_dir, export_csv ? export_csv : "");
    if (out) *out = beat_balance_summary{s.batches, s.level, s.degenerate, s.max_detail_mean_error};
    if (!buffer && capacity == 0) {
      if (needed) *needed = s.text.size() + 1;
      return BEAT_OK;
    }
    return copy_out(s.text, buffer, capacity, needed);
  });
}

beat_status beat_model_load(const char* run, beat_model** out) {
  REQUIRE(run && out, "run and out must be non-NULL");
  return guarded([&] {
    std::string path = run;
    if (std::filesystem::is_directory(path)) path += "/checkpoint.bin";
    const auto ckpt = beat::train::read_checkpoint(path);
    const auto cfg = beat::config::parse(ckpt.config_text, "checkpoint config");
    std::size_t variates = 0;
    for (const auto& [name, value] : ckpt.parameters) {
      if (name == "revin/affine_weight") variates = static_cast<std::size_t>(value.cols());
    }
    if (!variates) {
      if (auto v = beat::config::declared_variates(cfg)) {
        variates = *v;
      } else {
        variates = beat::data::load_csv(cfg.data.path).variates();
      }
    }
    auto m = std::make_unique<beat::model::ForecastModel>(beat::run::model_config(cfg, variates), cfg.train.seed);
    beat::train::load_into(*m, ckpt);
    *out = new beat_model{std::move(m)};
    return BEAT_OK;
  });
}

void beat_model_destroy(beat_model* model) { delete model; }

beat_status beat_model_shape(const beat_model* model, size_t* variates, size_t* lookback, size_t* horizon) {
  REQUIRE(model, "model is NULL");
  const auto& t = model->model->config().task;
  if (variates) *variates = t.variates;
  if (lookback) *lookback = t.lookback;
  if (horizon) *horizon = t.horizon;
  return BEAT_OK;
}

beat_status beat_model_predict(beat_model* model, const double* x, size_t batch, double* y) {
  REQUIRE(model && x && y && batch > 0, "model, x, y must be non-NULL and batch positive");
  return guarded([&] {
    const auto& t = model->model->config().task;
    beat::SeriesTensor in(batch, t.variates, t.lookback);
    std::memcpy(in.values.data(), x, batch * t.variates * t.lookback * sizeof(double));
    const auto out = beat::train::predict(*model->model, in);
    std::memcpy(y, out.values.data(), batch * t.variates * t.horizon * sizeof(double));
    return BEAT_OK;
  });
}

beat_status beat_dwt(const double* signal, size_t length, const char* wavelet, int level, double* coeffs,
                     size_t capacity, size_t* needed) {
  REQUIRE(signal && wavelet && length > 0, "signal and wavelet must be non-NULL, length positive");
  return guarded([&] {
    const auto spec = beat::wavelet::parse_wavelet(wavelet, level);
    beat::Matrix row = Eigen::Map<const beat::Matrix>(signal, 1, static_cast<Eigen::Index>(length));
    const auto c = beat::wavelet::dwt_multilevel(row, spec);
    std::size_t total = static_cast<std::size_t>(c.approximation.cols());
    for (const auto& d : c.details) total += static_cast<std::size_t>(d.cols());
    if (needed) *needed = total;
    if (!coeffs || capacity < total) return fail(BEAT_ERR_BUFFER_TOO_SMALL, "coefficient buffer needs " + std::to_string(total) + " values");
    double* p = coeffs;
    for (const auto& d : c.details) p = std::copy(d.data(), d.data() + d.size(), p);
    std::copy(c.approximation.data(), c.approximation.data() + c.approximation.size(), p);
    return BEAT_OK;
  });
}

beat_status beat_idwt(const double* coeffs, size_t coeff_count, size_t length, const char* wavelet, int level,
                      double* signal) {
  REQUIRE(coeffs && wavelet && signal && length > 0, "coeffs, wavelet and signal must be non-NULL");
  return guarded([&] {
    const auto spec = beat::wavelet::parse_wavelet(wavelet, level);
    beat::wavelet::CoefficientSet c;
    c.lengths = beat::wavelet::level_lengths(length, level);
    std::size_t total = 0;
    for (auto n : c.lengths.coefficients) total += n;
    total += c.lengths.coefficients.back();
    if (coeff_count != total) {
      throw beat::Error(beat::Errc::LengthMismatch, "expected " + std::to_string(total) + " coefficients for length " +
                                                        std::to_string(length) + ", got " + std::to_string(coeff_count));
    }
    const double* p = coeffs;
    for (auto n : c.lengths.coefficients) {
      c.details.push_back(Eigen::Map<const beat::Matrix>(p, 1, static_cast<Eigen::Index>(n)));
      p += n;
    }
    c.approximation = Eigen::Map<const beat::Matrix>(p, 1, static_cast<Eigen::Index>(c.lengths.coefficients.back()));
    const beat::Matrix x = beat::wavelet::idwt_multilevel(c, spec);
    std::copy(x.data(), x.data() + x.size(), signal);
    return BEAT_OK;
  });
}

}  // extern "C"
