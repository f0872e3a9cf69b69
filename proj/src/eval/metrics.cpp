#include "eval/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "common/error.hpp"

namespace beat::eval {
namespace {

using Index = Eigen::Index;

void check(const Matrix& y, const Matrix& y_hat) {
  if (y.rows() != y_hat.rows() || y.cols() != y_hat.cols()) {
    throw Error(Errc::ShapeMismatch, "metric inputs " + std::to_string(y.rows()) + "x" + std::to_string(y.cols()) +
                                         " and " + std::to_string(y_hat.rows()) + "x" + std::to_string(y_hat.cols()));
  }
  if (y.size() == 0) throw Error(Errc::ShapeMismatch, "metric inputs are empty");
}

}  // namespace

double mse(const Matrix& y, const Matrix& y_hat) {
  check(y, y_hat);
  return (y - y_hat).array().square().sum() / static_cast<double>(y.size());
}

double mae(const Matrix& y, const Matrix& y_hat) {
  check(y, y_hat);
  return (y - y_hat).array().abs().sum() / static_cast<double>(y.size());
}

double rmse(const Matrix& y, const Matrix& y_hat) { return std::sqrt(mse(y, y_hat)); }

double r2(const Matrix& y, const Matrix& y_hat) {
  check(y, y_hat);
  const double ss_res = (y - y_hat).array().square().sum();
  const double ss_tot = (y.array() - y.mean()).square().sum();
  if (ss_tot == 0.0) return ss_res == 0.0 ? 1.0 : -std::numeric_limits<double>::infinity();
  return 1.0 - ss_res / ss_tot;
}

Space parse_space(const std::string& name) {
  if (name == "standardized") return Space::Standardized;
  if (name == "original") return Space::Original;
  throw Error(Errc::ConfigInvalid, "unknown evaluation space '" + name + "' (standardized|original)");
}

std::string space_name(Space space) { return space == Space::Standardized ? "standardized" : "original"; }

MetricsRow evaluate(model::ForecastModel& model, const Matrix& split, std::size_t lookback, std::size_t horizon,
                    const EvalOptions& options) {
  return evaluate([&model](const SeriesTensor& x, const std::vector<std::size_t>&) {
    return model::model_forward(model, x).prediction.values;
  }, split, lookback, horizon, options);
}

MetricsRow evaluate(const Predictor& predictor, const Matrix& split, std::size_t lookback, std::size_t horizon,
                    const EvalOptions& options) {
  if (options.space == Space::Original && !options.standardizer) {
    throw Error(Errc::ConfigInvalid, "original-space evaluation needs the dataset standardizer");
  }
  data::WindowSet windows(split, lookback, horizon);
  const std::size_t n = windows.variates();
  const std::size_t batch = std::max<std::size_t>(1, options.batch_size);
  double sq = 0.0, ab = 0.0;
  std::vector<std::size_t> idx;
  SeriesTensor x, y;
  for (std::size_t start = 0; start < windows.size(); start += batch) {
    const std::size_t end = std::min(windows.size(), start + batch);
    idx.resize(end - start);
    std::iota(idx.begin(), idx.end(), start);
    windows.gather(idx, x, y);
    Matrix pred = predictor(x, idx);
    Matrix truth = y.values;
    if (pred.rows() != truth.rows() || pred.cols() != truth.cols()) {
      throw Error(Errc::ShapeMismatch, "predictor returned " + std::to_string(pred.rows()) + "x" +
                                           std::to_string(pred.cols()) + " for a " + std::to_string(truth.rows()) +
                                           "x" + std::to_string(truth.cols()) + " target");
    }
    if (options.space == Space::Original) {
      const auto& s = *options.standardizer;
      for (Index r = 0; r < pred.rows(); ++r) {
        const Index v = r % static_cast<Index>(n);
        pred.row(r) = pred.row(r).array() * s.scale(v) + s.mean(v);
        truth.row(r) = truth.row(r).array() * s.scale(v) + s.mean(v);
      }
    }
    const auto nn = static_cast<Index>(n);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto d = (truth.middleRows(static_cast<Index>(k) * nn, nn) - pred.middleRows(static_cast<Index>(k) * nn, nn)).array();
      sq += d.square().sum();
      ab += d.abs().sum();
    }
  }
  const double count = static_cast<double>(windows.size() * n * horizon);
  MetricsRow row;
  row.horizon = horizon;
  row.mse = sq / count;
  row.mae = ab / count;
  row.windows = windows.size();
  return row;
}

std::string format_fixed(double value, int digits) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  std::string s(buf, res.ptr);
  bool negative = false;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    s.erase(0, 1);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    dot = s.size();
    s += '.';
  }
  s.append(static_cast<std::size_t>(digits) + 1, '0');
  const bool round_up = s[dot + static_cast<std::size_t>(digits) + 1] >= '5';
  std::string digits_only = s.substr(0, dot) + s.substr(dot + 1, static_cast<std::size_t>(digits));
  if (round_up) {
    int i = static_cast<int>(digits_only.size()) - 1;
    while (i >= 0) {
      if (digits_only[static_cast<std::size_t>(i)] == '9') {
        digits_only[static_cast<std::size_t>(i)] = '0';
        --i;
      } else {
        ++digits_only[static_cast<std::size_t>(i)];
        break;
      }
    }
    if (i < 0) digits_only.insert(digits_only.begin(), '1');
  }
  const std::size_t int_len = digits_only.size() - static_cast<std::size_t>(digits);
  std::string out = digits_only.substr(0, int_len);
  if (digits > 0) out += "." + digits_only.substr(int_len);
  const bool zero = out.find_first_not_of("0.") == std::string::npos;
  return (negative && !zero ? "-" : "") + out;
}

Report report_table(const std::vector<MetricsRow>& rows) {
  std::map<std::string, std::map<std::size_t, MetricsRow>> grouped;
  for (const auto& r : rows) grouped[r.dataset][r.horizon] = r;
  if (grouped.empty()) throw Error(Errc::MissingHorizon, "no rows to report");
  Report report;
  nlohmann::json records = nlohmann::json::array();
  std::ostringstream text;
  text << "dataset      horizon  MSE    MAE\n";
  for (const auto& [name, by_h] : grouped) {
    double sum_mse = 0.0, sum_mae = 0.0;
    for (std::size_t h : kReportHorizons) {
      auto it = by_h.find(h);
      if (it == by_h.end()) {
        throw Error(Errc::MissingHorizon, "dataset '" + name + "' has no row for horizon " + std::to_string(h));
      }
      const auto& r = it->second;
      report.rows.push_back(r);
      sum_mse += r.mse;
      sum_mae += r.mae;
      char line[128];
      std::snprintf(line, sizeof line, "%-12s %-8zu %s  %s\n", name.c_str(), h, format_fixed(r.mse, 3).c_str(),
                    format_fixed(r.mae, 3).c_str());
      text << line;
      records.push_back({{"dataset", name}, {"horizon", h}, {"mse", r.mse}, {"mae", r.mae}, {"windows", r.windows},
                         {"seed", r.seed}, {"config_hash", r.config_hash}});
    }
    const double n = static_cast<double>(std::size(kReportHorizons));
    Report::Average avg{name, sum_mse / n, sum_mae / n};
    report.averages.push_back(avg);
    char line[128];
    std::snprintf(line, sizeof line, "%-12s %-8s %s  %s\n", name.c_str(), "Avg", format_fixed(avg.mse, 3).c_str(),
                  format_fixed(avg.mae, 3).c_str());
    text << line;
    records.push_back({{"dataset", name}, {"horizon", "Avg"}, {"mse", avg.mse}, {"mae", avg.mae}});
  }
  report.text = text.str();
  report.json = records.dump(2);
  return report;
}

}  // namespace beat::eval
