#include "run/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "common/error.hpp"
#include "common/log.hpp"
#include "train/checkpoint.hpp"

namespace beat::run {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write '" + p.string() + "'");
  out.precision(17);
  return out;
}

// Windows per second for a B=32 predict call.
double measure_predict(model::ForecastModel& model, const data::Dataset& ds) {
  const auto& t = model.config().task;
  const std::size_t b = 32;
  SeriesTensor x(b, ds.variates(), t.lookback);
  for (std::size_t k = 0; k < b; ++k) {
    for (std::size_t n = 0; n < ds.variates(); ++n) {
      for (std::size_t i = 0; i < t.lookback; ++i) x.at(k, n, i) = std::sin(0.1 * static_cast<double>(i + k + n));
    }
  }
  const auto start = std::chrono::steady_clock::now();
  std::size_t calls = 0;
  double elapsed = 0.0;
  do {
    (void)train::predict(model, x);
    ++calls;
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  } while (elapsed < 0.2 && calls < 200);
  return static_cast<double>(calls * b) / elapsed;
}

std::string resolve_checkpoint(const std::string& run) {
  fs::path p(run);
  if (fs::is_directory(p)) p /= "checkpoint.bin";
  if (!fs::exists(p)) throw Error(Errc::Io, "no checkpoint at '" + p.string() + "'");
  return p.string();
}

}  // namespace

data::Dataset build_dataset(const config::RunConfig& c) {
  data::RawSeries raw;
  data::SplitSizes sizes{c.data.train, c.data.validation, c.data.test};
  if (c.data.source == "synthetic") {
    raw = data::synthetic_multitone(data::parse_tones(c.data.tones), c.data.noise, c.data.length, c.data.synthetic_seed,
                                    c.data.variates);
  } else {
    auto known = data::known_dataset(c.data.name);
    raw = data::load_csv(c.data.path, known);
    if (known && sizes.train + sizes.validation + sizes.test == 0) sizes = {known->train, known->validation, known->test};
  }
  return data::make_dataset(raw, sizes, c.data.standardize, c.data.name);
}

model::ModelConfig model_config(const config::RunConfig& c, std::size_t variates) {
  model::ModelConfig m = c.model;
  m.task.variates = variates;
  return m;
}

TrainOutcome train(const config::RunConfig& c) {
  config::validate(c);
  const auto t0 = std::chrono::steady_clock::now();
  data::Dataset ds = build_dataset(c);
  model::ForecastModel model(model_config(c, ds.variates()), c.train.seed);

  TrainOutcome out;
  out.run_dir = config::run_directory(c);
  const fs::path dir(out.run_dir);
  fs::create_directories(dir);
  const std::string text = config::to_text(c);
  {
    auto cfg = open_out(dir / "config.cfg");
    cfg << text;
  }
  auto metrics = open_out(dir / "metrics.csv");
  metrics << "epoch,steps,train_loss,val_mse,improved\n";
  auto blog = open_out(dir / "balance_log.jsonl");
  blog << json{{"format", "beat-balance-log"}, {"version", 1}, {"level", c.model.wavelet.level},
               {"modulation", train::modulation_name(c.train.balance.modulation)}}
              .dump()
       << "\n";

  train::FitCallbacks cb;
  cb.on_step = [&](const train::StepResult& r, std::size_t) {
    const auto& rep = r.report;
    blog << json{{"u", rep.batch_index},  {"loss", r.loss},     {"delta_A", rep.delta_a},
                 {"delta_D", rep.delta_d}, {"mu", rep.mu},       {"r", rep.ratios},
                 {"c", rep.coefficients},  {"degenerate", rep.degenerate}}
                .dump()
         << "\n";
  };
  cb.on_epoch = [&](const train::EpochRecord& e) {
    metrics << e.epoch << ',' << e.steps << ',' << e.train_loss << ',' << e.val_mse << ',' << (e.improved ? 1 : 0)
            << "\n";
    metrics.flush();
  };
  out.history = train::fit(model, ds, c.train, cb);
  blog.close();

  train::write_checkpoint((dir / "checkpoint.bin").string(), train::capture(model, text));
  eval::EvalOptions opts{c.eval_batch, c.eval_space, &ds.standardizer};
  out.test = eval::evaluate(model, ds.test, c.model.task.lookback, c.model.task.horizon, opts);
  out.test.dataset = c.data.name;
  out.test.seed = c.train.seed;
  out.test.config_hash = config::config_hash(c);
  out.predict_windows_per_second = measure_predict(model, ds);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto& h = out.history;
  json result{{"format", "beat-result"},
              {"version", 1},
              {"dataset", out.test.dataset},
              {"horizon", out.test.horizon},
              {"lookback", c.model.task.lookback},
              {"test_mse", out.test.mse},
              {"test_mae", out.test.mae},
              {"test_windows", out.test.windows},
              {"eval_space", eval::space_name(c.eval_space)},
              {"best_val_mse", h.state.best_val},
              {"best_epoch", h.state.best_epoch},
              {"epochs", h.epochs.size()},
              {"steps", h.state.step},
              {"stopped_early", h.stopped_early},
              {"seed", c.train.seed},
              {"config_hash", out.test.config_hash},
              {"predict_windows_per_second", out.predict_windows_per_second},
              {"predict_batch", 32},
              {"seconds", out.seconds}};
  auto res = open_out(dir / "result.json");
  res << result.dump(2) << "\n";
  log::info("run written to " + out.run_dir + " (test mse " + std::to_string(out.test.mse) + ", mae " +
            std::to_string(out.test.mae) + ")");
  return out;
}

eval::MetricsRow evaluate(const std::string& run, const std::string& dataset, const std::vector<std::string>& overrides) {
  const auto ckpt = train::read_checkpoint(resolve_checkpoint(run));
  config::RunConfig c = config::parse(ckpt.config_text, "checkpoint config");
  if (!dataset.empty()) {
    const bool is_path = dataset.find('/') != std::string::npos || dataset.ends_with(".csv");
    const std::string name = is_path ? fs::path(dataset).stem().string() : dataset;
    if (name != c.data.name) {
      throw Error(Errc::CheckpointMismatch, "checkpoint was trained on '" + c.data.name + "', not '" + name + "'");
    }
    if (is_path) c.data.path = dataset;
  }
  config::apply_overrides(c, overrides);
  config::validate(c);
  data::Dataset ds = build_dataset(c);
  model::ForecastModel model(model_config(c, ds.variates()), c.train.seed);
  train::load_into(model, ckpt);
  eval::EvalOptions opts{c.eval_batch, c.eval_space, &ds.standardizer};
  auto row = eval::evaluate(model, ds.test, c.model.task.lookback, c.model.task.horizon, opts);
  row.dataset = c.data.name;
  row.seed = c.train.seed;
  // Hash of the training configuration, unaffected by evaluation overrides.
  row.config_hash = config::config_hash(config::parse(ckpt.config_text, "checkpoint config"));
  return row;
}

eval::Report report(const std::vector<std::string>& runs) {
  std::vector<eval::MetricsRow> rows;
  for (const auto& r : runs) rows.push_back(evaluate(r));
  return eval::report_table(rows);
}

DecomposeOutcome decompose_csv(const std::string& csv_path, const std::string& wavelet_name, int level,
                               const std::string& out_dir) {
  const auto raw = data::load_csv(csv_path);
  const auto spec = wavelet::parse_wavelet(wavelet_name, level);
  const auto bank = wavelet::filter_bank(spec);
  const auto coeffs = wavelet::dwt_multilevel(raw.values, spec, bank);
  const Matrix recon = wavelet::idwt_multilevel(coeffs, spec, bank);
  DecomposeOutcome out;
  out.max_error = (recon - raw.values).cwiseAbs().maxCoeff();
  out.bands = coeffs.details.size() + 1;
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  auto write_band = [&](const std::string& column, const std::string& band, const Eigen::Ref<const Matrix>& row) {
    const fs::path p = dir / (column + "_" + band + ".csv");
    auto f = open_out(p);
    f << "index,value\n";
    for (Eigen::Index i = 0; i < row.cols(); ++i) f << i << ',' << row(0, i) << "\n";
    out.files.push_back(p.string());
  };
  for (std::size_t v = 0; v < raw.variates(); ++v) {
    const auto r = static_cast<Eigen::Index>(v);
    for (std::size_t i = 0; i < coeffs.details.size(); ++i) {
      write_band(raw.columns[v], "D" + std::to_string(i + 1), coeffs.details[i].row(r));
    }
    write_band(raw.columns[v], "A", coeffs.approximation.row(r));
  }
  auto summary = open_out(dir / "summary.txt");
  summary << "wavelet " << spec.name() << " level " << level << " bands " << out.bands << " variates "
          << raw.variates() << " max_reconstruction_error " << out.max_error << "\n";
  return out;
}

BalanceSummary inspect_balance(const std::string& run_dir, const std::string& export_csv) {
  const fs::path p = fs::path(run_dir) / "balance_log.jsonl";
  std::ifstream in(p);
  if (!in) throw Error(Errc::Io, "no balance log at '" + p.string() + "'");
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, p.string() + ": empty balance log");
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, p.string() + ": bad header: " + e.what());
  }
  if (header.value("format", "") != "beat-balance-log" || header.value("version", 0) != 1) {
    throw Error(Errc::ParseError, p.string() + ": not a version-1 balance log");
  }
  BalanceSummary s;
  s.level = header.at("level").get<int>();
  const std::size_t nb = static_cast<std::size_t>(s.level) + 1;
  std::vector<std::vector<double>> r(nb), c(nb);
  std::ofstream csv;
  if (!export_csv.empty()) {
    csv = open_out(export_csv);
    csv << "u,mu";
    for (std::size_t v = 0; v < nb; ++v) {
      const std::string b = v + 1 < nb ? "D" + std::to_string(v + 1) : "A";
      csv << ",r_" << b;
    }
    for (std::size_t v = 0; v < nb; ++v) {
      const std::string b = v + 1 < nb ? "D" + std::to_string(v + 1) : "A";
      csv << ",c_" << b;
    }
    csv << "\n";
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(Errc::ParseError, p.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    const auto ratios = rec.at("r").get<std::vector<double>>();
    const auto coeffs = rec.at("c").get<std::vector<double>>();
    if (ratios.size() != nb || coeffs.size() != nb) {
      throw Error(Errc::ParseError, p.string() + ":" + std::to_string(lineno) + ": expected " + std::to_string(nb) + " bands");
    }
    ++s.batches;
    if (rec.value("degenerate", false)) ++s.degenerate;
    double mean_d = 0.0;
    for (std::size_t v = 0; v + 1 < nb; ++v) mean_d += ratios[v];
    mean_d /= static_cast<double>(nb - 1);
    s.max_detail_mean_error = std::max(s.max_detail_mean_error, std::abs(mean_d - 1.0));
    for (std::size_t v = 0; v < nb; ++v) {
      r[v].push_back(ratios[v]);
      c[v].push_back(coeffs[v]);
    }
    if (csv.is_open()) {
      csv << rec.at("u").get<std::size_t>() << ',' << rec.at("mu").get<double>();
      for (double x : ratios) csv << ',' << x;
      for (double x : coeffs) csv << ',' << x;
      csv << "\n";
    }
  }
  if (s.batches == 0) throw Error(Errc::ParseError, p.string() + ": log has no batch records");
  std::ostringstream text;
  text.precision(6);
  text << "batches " << s.batches << ", level " << s.level << ", degenerate " << s.degenerate
       << ", max |mean(r_D) - 1| " << s.max_detail_mean_error << "\n";
  text << "band   r_mean     r_min      r_max      c_mean     c_min      c_max\n";
  for (std::size_t v = 0; v < nb; ++v) {
    BandSummary b;
    b.band = v + 1 < nb ? "D" + std::to_string(v + 1) : "A";
    auto stats = [](const std::vector<double>& xs, double& mean, double& lo, double& hi) {
      mean = 0.0;
      for (double x : xs) mean += x;
      mean /= static_cast<double>(xs.size());
      lo = *std::min_element(xs.begin(), xs.end());
      hi = *std::max_element(xs.begin(), xs.end());
    };
    stats(r[v], b.ratio_mean, b.ratio_min, b.ratio_max);
    stats(c[v], b.coeff_mean, b.coeff_min, b.coeff_max);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-6s %-10.4g %-10.4g %-10.4g %-10.4g %-10.4g %-10.4g\n", b.band.c_str(), b.ratio_mean,
                  b.ratio_min, b.ratio_max, b.coeff_mean, b.coeff_min, b.coeff_max);
    text << buf;
    s.bands.push_back(b);
  }
  s.text = text.str();
  return s;
}

}  // namespace beat::run
