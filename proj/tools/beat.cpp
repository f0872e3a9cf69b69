// Command-line front end. Talks to the library only through beat.h.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beat/beat.h"

namespace {

// Exit codes: 0 ok, 2 config, 3 data, 4 numeric, 1 anything else.
int exit_code(beat_status s) {
  switch (s) {
    case BEAT_OK: return 0;
    case BEAT_ERR_CONFIG:
    case BEAT_ERR_INVALID_ARGUMENT: return 2;
    case BEAT_ERR_DATA: return 3;
    case BEAT_ERR_NUMERIC: return 4;
    default: return 1;
  }
}

int report(beat_status s) {
  if (s != BEAT_OK) std::fprintf(stderr, "beat: %s: %s\n", beat_status_name(s), beat_last_error());
  return exit_code(s);
}

std::string text_of(beat_status (*fn)(const beat_config*, char*, size_t, size_t*), const beat_config* c) {
  size_t need = 0;
  fn(c, nullptr, 0, &need);
  std::string s(need, '\0');
  if (fn(c, s.data(), s.size(), &need) != BEAT_OK) return {};
  s.resize(need - 1);
  return s;
}

struct ConfigHandle {
  beat_config* ptr = nullptr;
  ~ConfigHandle() { beat_config_destroy(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BEAT: wavelet-branch forecasting with per-band gradient balancing"};
  app.require_subcommand(1);
  bool quiet = false, verbose = false;
  app.add_flag("-q,--quiet", quiet, "only warnings and errors");
  app.add_flag("-v,--verbose", verbose, "debug logging");

  auto* train = app.add_subcommand("train", "train a model and write a run directory");
  std::string config_path;
  std::vector<std::string> sets;
  train->add_option("-c,--config", config_path, "config file (key = value lines)");
  train->add_option("--set", sets, "override, key=value (repeatable)")->take_all();
  bool print_config = false;
  train->add_flag("--print-config", print_config, "print the resolved config and exit");

  auto* evaluate = app.add_subcommand("evaluate", "evaluate trained runs on their test split");
  std::vector<std::string> runs;
  std::string dataset;
  std::vector<std::string> eval_sets;
  bool json = false;
  evaluate->add_option("runs", runs, "run directories or checkpoint files")->required();
  evaluate->add_option("--dataset", dataset, "expected dataset name or CSV path");
  evaluate->add_option("--set", eval_sets, "evaluation override, e.g. eval.space=original")->take_all();
  evaluate->add_flag("--json", json, "machine-readable output");

  auto* decompose = app.add_subcommand("decompose", "write wavelet coefficients of a CSV, one file per band and variate");
  std::string csv, wavelet = "db2", out_dir = "decomposed";
  int level = 2;
  decompose->add_option("csv", csv, "input CSV (timestamp column first)")->required();
  decompose->add_option("-w,--wavelet", wavelet, "wavelet name (db2, sym4, coif1, bior2.2, ...)");
  decompose->add_option("-l,--level", level, "decomposition level");
  decompose->add_option("-o,--out", out_dir, "output directory");

  auto* inspect = app.add_subcommand("inspect-balance", "summarize a run's per-band ratios and coefficients");
  std::string run_dir, export_csv;
  inspect->add_option("run", run_dir, "run directory")->required();
  inspect->add_option("--export", export_csv, "write one CSV row per training batch");

  auto* keys = app.add_subcommand("keys", "list configuration keys with defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share the config exit code; --help stays 0
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (quiet) beat_set_log_level(BEAT_LOG_WARN);
  if (verbose) beat_set_log_level(BEAT_LOG_DEBUG);

  if (*train) {
    ConfigHandle cfg;
    beat_status s = config_path.empty() ? beat_config_create(&cfg.ptr) : beat_config_load(config_path.c_str(), &cfg.ptr);
    if (s != BEAT_OK) return report(s);
    for (const auto& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        std::fprintf(stderr, "beat: --set expects key=value, got '%s'\n", kv.c_str());
        return 2;
      }
      s = beat_config_set(cfg.ptr, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
      if (s != BEAT_OK) return report(s);
    }
    if (print_config) {
      std::cout << text_of(beat_config_text, cfg.ptr);
      return 0;
    }
    const std::string dir = text_of(beat_config_run_dir, cfg.ptr);
    beat_train_summary sum{};
    s = beat_train(cfg.ptr, &sum);
    if (s != BEAT_OK) return report(s);
    std::printf("run        %s\n", dir.c_str());
    std::printf("epochs     %zu (best %zu, steps %zu%s)\n", sum.epochs, sum.best_epoch, sum.steps,
                sum.stopped_early ? ", early stop" : "");
    std::printf("val mse    %.6f\n", sum.best_val_mse);
    std::printf("test mse   %.6f\ntest mae   %.6f\n", sum.test_mse, sum.test_mae);
    std::printf("predict    %.1f windows/s\ntime       %.1f s\n", sum.predict_windows_per_second, sum.seconds);
    return 0;
  }

  if (*evaluate) {
    std::vector<const char*> o;
    for (const auto& e : eval_sets) o.push_back(e.c_str());
    if (runs.size() == 1) {
      beat_metrics m{};
      beat_status s = beat_evaluate(runs[0].c_str(), dataset.empty() ? nullptr : dataset.c_str(), o.data(), o.size(), &m);
      if (s != BEAT_OK) return report(s);
      if (json) {
        std::printf("{\"horizon\": %zu, \"mse\": %.17g, \"mae\": %.17g, \"windows\": %zu, \"seed\": %llu}\n", m.horizon,
                    m.mse, m.mae, m.windows, static_cast<unsigned long long>(m.seed));
      } else {
        std::printf("horizon %zu  mse %.6f  mae %.6f  windows %zu\n", m.horizon, m.mse, m.mae, m.windows);
      }
      return 0;
    }
    if (!dataset.empty() || !eval_sets.empty()) {
      std::fprintf(stderr, "beat: --dataset and --set apply to single-run evaluation only\n");
      return 2;
    }
    std::vector<const char*> r;
    for (const auto& x : runs) r.push_back(x.c_str());
    size_t need = 0;
    beat_status s = beat_report_table(r.data(), r.size(), json ? 1 : 0, nullptr, 0, &need);
    if (s != BEAT_OK && s != BEAT_ERR_BUFFER_TOO_SMALL) return report(s);
    std::string out(need, '\0');
    s = beat_report_table(r.data(), r.size(), json ? 1 : 0, out.data(), out.size(), &need);
    if (s != BEAT_OK) return report(s);
    out.resize(need - 1);
    std::cout << out << (json ? "\n" : "");
    return 0;
  }

  if (*decompose) {
    double err = 0.0;
    size_t bands = 0;
    beat_status s = beat_decompose_csv(csv.c_str(), wavelet.c_str(), level, out_dir.c_str(), &err, &bands);
    if (s != BEAT_OK) return report(s);
    std::printf("bands %zu  max_reconstruction_error %.3e  written to %s\n", bands, err, out_dir.c_str());
    return 0;
  }

  if (*inspect) {
    beat_balance_summary sum{};
    size_t need = 0;
    beat_status s = beat_inspect_balance(run_dir.c_str(), export_csv.empty() ? nullptr : export_csv.c_str(), &sum,
                                         nullptr, 0, &need);
    if (s != BEAT_OK) return report(s);
    std::string text(need, '\0');
    s = beat_inspect_balance(run_dir.c_str(), nullptr, &sum, text.data(), text.size(), &need);
    if (s != BEAT_OK) return report(s);
    text.resize(need - 1);
    std::cout << text;
    return 0;
  }

  if (*keys) {
    const char *k, *d, *doc;
    for (size_t i = 0; beat_config_key_info(i, &k, &d, &doc) == BEAT_OK; ++i) {
      std::printf("%-20s %-16s %s\n", k, d, doc);
    }
    return 0;
  }
  return 0;
}
