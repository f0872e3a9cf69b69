// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <unistd.h>

#include "../fd_check.hpp"
#include "../scenarios.hpp"
#include "balance/balance.hpp"
#include "common/log.hpp"
#include "config/run_config.hpp"
#include "norm/revin.hpp"
#include "run/pipeline.hpp"
#include "wavelet/wavelet.hpp"

using namespace beat;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string num(double v, int digits = 3) {
  char b[64];
  std::snprintf(b, sizeof b, "%.*g", digits, v);
  return b;
}

Matrix gaussian(Eigen::Index r, Eigen::Index c, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  return m;
}

fs::path scratch_root() {
  static const fs::path p = [] {
    auto r = fs::temp_directory_path() / ("beat_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(r);
    return r;
  }();
  return p;
}

config::RunConfig etth1_config() {
  auto c = config::defaults();
  config::set(c, "data.path", std::string(BEAT_SOURCE_DIR) + "/data/ETTh1.csv");
  config::set(c, "output.root", scratch_root().string());
  return c;
}

// ---- 1: wavelet transforms ----------------------------------------------------

Outcome wavelet_core() {
  const auto start = Clock::now();
  const std::vector<std::string> names = {"haar",  "db2",   "db4",   "db8",     "db20",    "db38",    "sym2",    "sym5",
                                          "sym8",  "sym20", "coif1", "coif3",   "coif5",   "coif17",  "bior1.3", "bior2.2",
                                          "bior2.4", "bior3.1", "bior3.3", "bior4.4", "bior5.5", "bior6.8"};
  double pr = 0.0, adj = 0.0;
  std::size_t cases = 0;
  std::uint64_t seed = 1;
  for (const auto& name : names) {
    for (int level = 1; level <= 5; ++level) {
      for (Eigen::Index len : {32, 96, 97, 720}) {
        const auto spec = wavelet::parse_wavelet(name, level);
        const auto bank = wavelet::filter_bank(spec);
        const Matrix x = gaussian(2, len, seed++);
        const auto c = wavelet::dwt_multilevel(x, spec, bank);
        pr = std::max(pr, (wavelet::idwt_multilevel(c, spec, bank) - x).cwiseAbs().maxCoeff());

        wavelet::CoefficientSet g = c;
        g.approximation = gaussian(c.approximation.rows(), c.approximation.cols(), seed++);
        for (auto& d : g.details) d = gaussian(d.rows(), d.cols(), seed++);
        auto dot = [](const wavelet::CoefficientSet& a, const wavelet::CoefficientSet& b) {
          double s = (a.approximation.array() * b.approximation.array()).sum();
          for (std::size_t i = 0; i < a.details.size(); ++i) s += (a.details[i].array() * b.details[i].array()).sum();
          return s;
        };
        const double fwd = std::abs(dot(c, g) - (x.array() * wavelet::dwt_multilevel_backward(g, spec, bank).array()).sum());
        const Matrix s = gaussian(2, len, seed++);
        const double inv = std::abs((wavelet::idwt_multilevel(g, spec, bank).array() * s.array()).sum() -
                                    dot(g, wavelet::idwt_multilevel_backward(s, spec, bank)));
        adj = std::max({adj, fwd, inv});
        ++cases;
      }
    }
  }
  // Daubechies p kills polynomials of degree < p away from the wrap-around.
  double vm = 0.0;
  const Eigen::Index n = 256;
  for (int p = 1; p <= 12; ++p) {
    const auto spec = wavelet::parse_wavelet("db" + std::to_string(p), 1);
    for (int degree = 0; degree < p; ++degree) {
      Matrix x(1, n);
      for (Eigen::Index i = 0; i < n; ++i) x(0, i) = std::pow(static_cast<double>(i) / n, degree);
      const auto c = wavelet::dwt_multilevel(x, spec);
      for (Eigen::Index o = 0; o < c.details[0].cols(); ++o) {
        const Eigen::Index hi = 2 * o + p, lo = hi - (2 * p - 1);
        if (lo >= 0 && hi < n) vm = std::max(vm, std::abs(c.details[0](0, o)));
      }
    }
  }
  const double secs = since(start);
  return {pr < 1e-10 && adj < 1e-10 && vm < 1e-8 && secs < 60.0,
          std::to_string(cases) + " cases; reconstruction " + num(pr) + ", adjoint " + num(adj) + ", moments " + num(vm) +
              ", " + num(secs) + " s"};
}

// ---- 2: full-model gradient check ----------------------------------------------

Outcome diff_engine() {
  const auto start = Clock::now();
  model::ModelConfig mc;
  mc.wavelet = wavelet::parse_wavelet("db2", 2);
  mc.branch = model::BranchConfig{2, 1, 8, 2};
  mc.task = model::Task{8, 4, 2};
  model::ForecastModel m(mc, 11);
  SeriesTensor x(3, 2, gaussian(6, 8, 12));
  x.values.array() += 2.0;
  const Matrix target = gaussian(6, 4, 13);
  auto loss = [&] {
    ad::Tape t;
    return t.value(t.mse(m.forward(t, x).prediction, target))(0, 0);
  };
  m.zero_grad();
  {
    ad::Tape t;
    t.backward(t.mse(m.forward(t, x).prediction, target));
  }
  double worst = 0.0;
  std::size_t checked = 0;
  std::string where;
  for (auto* p : m.parameters()) {
    const auto r = testing::fd_check(*p, loss);
    checked += r.checked;
    if (r.worst_rel > worst) {
      worst = r.worst_rel;
      where = r.worst_where;
    }
  }
  const double secs = since(start);
  return {worst < 1e-4 && secs < 120.0,
          std::to_string(checked) + " entries, worst relative error " + num(worst) +
              (where.empty() ? " (every difference under the 1e-8 absolute floor)" : " at " + where) + ", " +
              num(secs) + " s"};
}

// ---- 3: balance formulas and logged ratios -------------------------------------

Outcome balance_formulas() {
  using balance::modulation_coefficient;
  const double c1 = modulation_coefficient(1.0), c2 = modulation_coefficient(2.0), ch = modulation_coefficient(0.5);
  const bool clamp = modulation_coefficient(0.099) == 10.0 && modulation_coefficient(0.05) == 10.0 &&
                     modulation_coefficient(0.1) == 10.0 && modulation_coefficient(0.101) < 10.0;
  bool ok = c1 == 1.0 && std::abs(c2 - 1.122459) <= 1e-6 && ch == 2.0 && clamp;

  // Logged batches from a real training run.
  auto cfg = config::defaults();
  config::apply_overrides(cfg, {"data.source=synthetic", "data.name=multitone", "train.max_steps=300",
                                "output.root=" + scratch_root().string(), "output.name=c3"});
  const auto out = run::train(cfg);
  std::ifstream in(fs::path(out.run_dir) / "balance_log.jsonl");
  std::string line;
  std::getline(in, line);
  std::size_t batches = 0, degenerate = 0;
  double worst = 0.0;
  while (std::getline(in, line)) {
    const auto rec = json::parse(line);
    const auto& r = rec["r"];
    const std::size_t f = r.size() - 1;
    double mean = 0.0;
    for (std::size_t i = 0; i < f; ++i) mean += r[i].get<double>();
    worst = std::max(worst, std::abs(mean / static_cast<double>(f) - 1.0));
    degenerate += rec["degenerate"].get<bool>();
    ++batches;
  }
  ok = ok && batches == out.history.state.step && worst <= 1e-12;
  return {ok, "c(1)=" + num(c1, 17) + " c(2)=" + num(c2, 10) + " c(0.5)=" + num(ch, 17) +
                  (clamp ? " clamp ok" : " clamp WRONG") + "; " + std::to_string(batches) + " logged batches (" +
                  std::to_string(degenerate) + " degenerate), max |mean r_D - 1| " + num(worst)};
}

// ---- 4: modulated update and modulation-off equivalence -------------------------

// Conventional loop: shuffle, SmoothL1, backward, Adam, per-epoch validation
// and best-parameter restore. No monitor, no coefficients.
std::vector<double> plain_loop(model::ForecastModel& m, const data::Dataset& ds, const train::TrainConfig& tc,
                               std::vector<std::vector<Matrix>>& epoch_params) {
  const auto& task = m.config().task;
  data::WindowSet windows(ds.train, task.lookback, task.horizon);
  train::Adam adam(tc.lr, tc.beta1, tc.beta2, tc.eps);
  std::mt19937_64 rng(tc.seed);
  std::vector<std::size_t> order(windows.size());
  std::vector<double> losses;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Matrix> best_params = train::snapshot(m);
  SeriesTensor x, y;
  for (std::size_t epoch = 0; epoch < tc.max_epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t s = 0; s < order.size(); s += tc.batch_size) {
      std::vector<std::size_t> idx(order.begin() + static_cast<std::ptrdiff_t>(s),
                                   order.begin() + static_cast<std::ptrdiff_t>(std::min(order.size(), s + tc.batch_size)));
      windows.gather(idx, x, y);
      m.zero_grad();
      ad::Tape t;
      auto loss = t.smooth_l1(m.forward(t, x).prediction, y.values);
      losses.push_back(t.value(loss)(0, 0));
      t.backward(loss);
      adam.step(m.parameters());
    }
    epoch_params.push_back(train::snapshot(m));
    const double val = eval::evaluate(m, ds.validation, task.lookback, task.horizon,
                                      eval::EvalOptions{std::max<std::size_t>(tc.batch_size, 64)}).mse;
    if (val < best) {
      best = val;
      best_params = train::snapshot(m);
    }
  }
  train::restore(m, best_params);
  return losses;
}

Outcome modulated_update() {
  // (a) one SGD step with hand-set coefficients against a scalar loop
  model::ModelConfig mc;
  mc.wavelet = wavelet::parse_wavelet("sym3", 3);
  mc.branch = model::BranchConfig{2, 1, 8, 2};
  mc.task = model::Task{48, 24, 3};
  model::ForecastModel m(mc, 21);
  SeriesTensor x(4, 3, gaussian(12, 48, 22, 2.0));
  SeriesTensor y(4, 3, gaussian(12, 24, 23, 2.0));
  m.zero_grad();
  {
    ad::Tape t;
    t.backward(t.smooth_l1(m.forward(t, x).prediction, y.values));
  }
  std::vector<std::vector<double>> theta, grad;
  std::vector<std::size_t> owner;
  for (std::size_t v = 0; v < m.branch_count(); ++v) {
    for (auto* p : m.branch_parameters(v)) {
      theta.emplace_back(p->value.data(), p->value.data() + p->value.size());
      grad.emplace_back(p->grad.data(), p->grad.data() + p->grad.size());
      owner.push_back(v);
    }
  }
  const std::vector<double> c{0.37, 4.5, 1.0, 1.2345};
  train::TrainConfig tc;
  tc.optimizer = train::OptimizerKind::SGD;
  tc.lr = 0.013;
  train::SGD sgd(tc.lr);
  balance::FrequencyMonitor mon(balance::Metric::MSE, false);
  train::train_step(m, sgd, x, y, tc, mon, c);
  double worst = 0.0;
  std::size_t i = 0;
  for (std::size_t v = 0; v < m.branch_count(); ++v) {
    for (auto* p : m.branch_parameters(v)) {
      for (std::size_t k = 0; k < theta[i].size(); ++k) {
        const double expected = theta[i][k] - tc.lr * (c[owner[i]] * grad[i][k]);
        worst = std::max(worst, std::abs(p->value.data()[k] - expected));
      }
      ++i;
    }
  }

  // (b) full modulation-off run against the conventional loop
  auto raw = data::synthetic_multitone(data::parse_tones("1:48:0;0.1:4:0"), 0.1, 3000, 7);
  const auto ds = data::make_dataset(raw, {}, true, "multitone");
  model::ModelConfig small;
  small.task = model::Task{96, 96, 1};
  model::ForecastModel a(small, 5), b(small, 5);
  train::TrainConfig off;
  off.max_epochs = 3;
  off.patience = 100;
  off.balance.modulation = train::Modulation::Off;
  std::vector<double> fit_losses;
  std::vector<std::vector<Matrix>> fit_params, loop_params;
  train::FitCallbacks cb;
  cb.on_step = [&](const train::StepResult& r, std::size_t) { fit_losses.push_back(r.loss); };
  cb.on_epoch = [&](const train::EpochRecord&) { fit_params.push_back(train::snapshot(a)); };
  train::fit(a, ds, off, cb);
  const auto loop_losses = plain_loop(b, ds, off, loop_params);
  const bool identical = fit_losses == loop_losses && fit_params == loop_params && train::snapshot(a) == train::snapshot(b);
  return {worst <= 1e-15 && identical,
          "SGD step max deviation " + num(worst) + "; off run vs plain loop over " + std::to_string(fit_losses.size()) +
              " steps: " + (identical ? "bit-identical" : "DIFFERENT")};
}

// ---- 5: RevIN and metric oracles ----------------------------------------------

Outcome normalization_metrics() {
  double rt = 0.0;
  for (double scale : {1e-3, 1.0, 1e3}) {
    SeriesTensor x(16, 7, gaussian(112, 96, 31, scale));
    x.values.array() += 10.0 * scale;
    const auto n = norm::revin_normalize(x);
    rt = std::max(rt, (norm::revin_denormalize(n.output, n.stats).values - x.values).cwiseAbs().maxCoeff());
  }
  double metric = 0.0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Matrix y = gaussian(9, 41, 40 + 2 * s), p = gaussian(9, 41, 41 + 2 * s);
    double sq = 0.0, ab = 0.0, sum = 0.0, cnt = 0.0;
    for (Eigen::Index r = 0; r < y.rows(); ++r)
      for (Eigen::Index c = 0; c < y.cols(); ++c) {
        const double e = y(r, c) - p(r, c);
        sq += e * e;
        ab += std::fabs(e);
        sum += y(r, c);
        cnt += 1.0;
      }
    double tot = 0.0;
    for (Eigen::Index r = 0; r < y.rows(); ++r)
      for (Eigen::Index c = 0; c < y.cols(); ++c) tot += (y(r, c) - sum / cnt) * (y(r, c) - sum / cnt);
    metric = std::max({metric, std::abs(eval::mse(y, p) - sq / cnt), std::abs(eval::mae(y, p) - ab / cnt),
                       std::abs(eval::rmse(y, p) - std::sqrt(sq / cnt)), std::abs((1.0 - eval::r2(y, p)) - sq / tot),
                       std::abs(balance::discrepancy(y, p, balance::Metric::RSquared) - sq / tot)});
  }
  return {rt < 1e-10 && metric < 1e-12, "RevIN round trip " + num(rt) + ", metric oracle deviation " + num(metric)};
}

// ---- 6: capacity -------------------------------------------------------------

Outcome overfit() {
  const auto r = testing::overfit_two_sinusoids(2000);
  return {r.windows == 64 && r.steps == 2000 && r.train_mse < 1e-3 && r.seconds < 300.0,
          std::to_string(r.windows) + " windows, " + std::to_string(r.steps) + " steps, train MSE " + num(r.train_mse) +
              ", " + num(r.seconds) + " s"};
}

// ---- 7: balance effect ---------------------------------------------------------

struct ArmResult {
  double val = 0.0;
  double mean_c = 0.0;
};

ArmResult multitone_arm(std::uint64_t seed, train::Modulation mod, train::OptimizerKind opt, double lr,
                        std::size_t steps) {
  auto raw = data::synthetic_multitone(data::parse_tones("1:48:0;0.1:4:0"), 0.1, 4000, 7);
  const auto ds = data::make_dataset(raw, {}, true, "multitone");
  model::ModelConfig mc;
  mc.task = model::Task{96, 96, 1};
  model::ForecastModel m(mc, seed);
  train::TrainConfig tc;
  tc.seed = seed;
  tc.optimizer = opt;
  tc.lr = lr;
  tc.max_steps = steps;
  tc.max_epochs = 1000;
  tc.patience = 1000;
  tc.balance.modulation = mod;
  double c_sum = 0.0;
  std::size_t n = 0;
  train::FitCallbacks cb;
  cb.on_step = [&](const train::StepResult& r, std::size_t) {
    for (double c : r.report.coefficients) c_sum += c;
    n += r.report.coefficients.size();
  };
  const auto h = train::fit(m, ds, tc, cb);
  return {h.state.best_val, c_sum / static_cast<double>(n)};
}

Outcome balance_effect() {
  const auto start = Clock::now();
  using train::Modulation;
  using train::OptimizerKind;
  const std::size_t steps = 1000;
  int wins = 0;
  std::string per_seed;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto beat = multitone_arm(seed, Modulation::Gradient, OptimizerKind::Adam, 1e-3, steps);
    const auto off = multitone_arm(seed, Modulation::Off, OptimizerKind::Adam, 1e-3, steps);
    wins += beat.val <= off.val;
    per_seed += " " + num(beat.val, 5) + (beat.val <= off.val ? "<=" : ">") + num(off.val, 5);
  }
  std::printf("  default optimizer (Adam), %zu steps, val MSE beat vs off per seed:%s\n", steps, per_seed.c_str());

  // Diagnostic, not scored: plain gradient descent, where the coefficients act
  // directly on step sizes. The lr-matched control runs the off arm at the
  // mean applied coefficient times the base rate.
  int sgd_wins = 0, matched_wins = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto beat = multitone_arm(seed, Modulation::Gradient, OptimizerKind::SGD, 0.01, steps);
    const auto off = multitone_arm(seed, Modulation::Off, OptimizerKind::SGD, 0.01, steps);
    const auto matched = multitone_arm(seed, Modulation::Off, OptimizerKind::SGD, 0.01 * beat.mean_c, steps);
    sgd_wins += beat.val <= off.val;
    matched_wins += beat.val <= matched.val;
  }
  std::printf("  diagnostic (SGD lr 0.01): beat <= off in %d/5 seeds, beat <= lr-matched off in %d/5 seeds\n", sgd_wins,
              matched_wins);
  return {wins >= 3, "Adam: beat <= off in " + std::to_string(wins) + "/5 seeds at " + std::to_string(steps) +
                         " steps each (SGD diagnostic " + std::to_string(sgd_wins) + "/5, lr-matched " +
                         std::to_string(matched_wins) + "/5), " + num(since(start)) + " s"};
}

// ---- 8: ETTh1 --------------------------------------------------------------------

Outcome etth1() {
  auto cfg = etth1_config();
  config::set(cfg, "output.name", "etth1-96");
  const auto out = run::train(cfg);
  const bool ok = out.test.mse <= 0.50 && out.test.mae <= 0.48 && out.seconds < 1800.0;
  return {ok, "test MSE " + num(out.test.mse, 6) + ", MAE " + num(out.test.mae, 6) + ", " +
                  std::to_string(out.history.epochs.size()) + " epochs, " + num(out.seconds, 4) + " s"};
}

// ---- 9: report table -----------------------------------------------------------

Outcome report_table() {
  std::vector<std::string> dirs;
  for (std::size_t h : eval::kReportHorizons) {
    auto cfg = etth1_config();
    config::apply_overrides(cfg, {"task.horizon=" + std::to_string(h), "train.max_steps=20",
                                  "output.name=report-" + std::to_string(h)});
    dirs.push_back(run::train(cfg).run_dir);
  }
  const auto rep = run::report(dirs);
  std::printf("%s", rep.text.c_str());
  double mse = 0.0, mae = 0.0;
  for (const auto& r : rep.rows) {
    mse += r.mse / 4.0;
    mae += r.mae / 4.0;
  }
  const double err = std::max(std::abs(rep.averages.at(0).mse - mse), std::abs(rep.averages.at(0).mae - mae));
  const auto records = json::parse(rep.json);
  bool same = records.size() == 5;
  for (const auto& rec : records) {
    const std::string h = rec["horizon"].is_string() ? "Avg" : std::to_string(rec["horizon"].get<std::size_t>());
    const std::string needle = h + std::string(9 - h.size(), ' ') + eval::format_fixed(rec["mse"].get<double>(), 3) +
                               "  " + eval::format_fixed(rec["mae"].get<double>(), 3);
    same = same && rep.text.find(needle) != std::string::npos;
  }
  return {rep.rows.size() == 4 && err <= 1e-12 && same,
          "4 horizons + Avg, |Avg - mean| " + num(err) + (same ? ", text and records agree" : ", text and records DIFFER") +
              " (short-budget runs; table mechanics only)"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BEAT acceptance criteria"};
  std::vector<int> only;
  app.add_option("criteria", only, "criteria to run (default: all)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);
  beat::log::set_threshold(beat::log::Level::Warn);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"wavelet transforms", wavelet_core},        {"full-model gradients", diff_engine},
      {"balance formulas", balance_formulas},      {"modulated update", modulated_update},
      {"RevIN and metrics", normalization_metrics}, {"two-sinusoid overfit", overfit},
      {"multitone balance effect", balance_effect}, {"ETTh1 K=96", etth1},
      {"four-horizon report", report_table}};
  const std::set<int> selected(only.begin(), only.end());
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  fs::remove_all(scratch_root());
  return failures;
}
