#include "data/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "common/error.hpp"
#include "common/log.hpp"

namespace beat::data {
namespace {

using Index = Eigen::Index;

std::vector<std::string> split_line(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace

std::optional<DatasetSpec> known_dataset(const std::string& name) {
  struct Row {
    const char* name;
    std::size_t variates, train, validation, test;
    const char* frequency;
  };
  static const Row rows[] = {
      {"ETTh1", 7, 8545, 2881, 2881, "1 hour"},       {"ETTh2", 7, 8545, 2881, 2881, "1 hour"},
      {"ETTm1", 7, 34465, 11521, 11521, "15 min"},    {"ETTm2", 7, 34465, 11521, 11521, "15 min"},
      {"Weather", 21, 36792, 5271, 10540, "10 min"},  {"Traffic", 862, 12185, 1757, 3509, "1 hour"},
      {"ECL", 321, 18317, 2633, 5261, "1 hour"},
  };
  for (const auto& r : rows) {
    if (name == r.name) return DatasetSpec{r.name, "", r.variates, r.train, r.validation, r.test, r.frequency};
  }
  return std::nullopt;
}

RawSeries load_csv(const std::string& path, const std::optional<DatasetSpec>& spec) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
  return parse_csv(in, path, spec);
}

RawSeries parse_csv(std::istream& in, const std::string& source, const std::optional<DatasetSpec>& spec) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, source + ": empty file");
  auto header = split_line(line, ',');
  if (header.size() < 2) throw Error(Errc::ParseError, source + ": need a timestamp column and at least one value column");
  RawSeries raw;
  for (std::size_t c = 1; c < header.size(); ++c) raw.columns.push_back(trim(header[c]));
  const std::size_t n = raw.columns.size();
  std::vector<double> cells;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row;
    const auto fields = split_line(line, ',');
    if (fields.size() != header.size()) {
      throw Error(Errc::ParseError, source + ": row " + std::to_string(row) + " has " + std::to_string(fields.size()) +
                                        " fields, header has " + std::to_string(header.size()));
    }
    for (std::size_t c = 1; c < fields.size(); ++c) {
      const std::string cell = trim(fields[c]);
      if (cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan") {
        throw Error(Errc::MissingValue, source + ": missing value at row " + std::to_string(row) + ", column '" +
                                            raw.columns[c - 1] + "'");
      }
      double v = 0.0;
      if (!parse_double(cell, v)) {
        throw Error(Errc::ParseError, source + ": non-numeric cell '" + cell + "' at row " + std::to_string(row) +
                                          ", column '" + raw.columns[c - 1] + "'");
      }
      cells.push_back(v);
    }
  }
  if (row == 0) throw Error(Errc::ParseError, source + ": no data rows");
  raw.values.resize(static_cast<Index>(n), static_cast<Index>(row));
  for (std::size_t t = 0; t < row; ++t) {
    for (std::size_t c = 0; c < n; ++c) raw.values(static_cast<Index>(c), static_cast<Index>(t)) = cells[t * n + c];
  }
  if (spec) {
    if (spec->variates != 0 && spec->variates != n) {
      throw Error(Errc::SpecMismatch, source + ": expected " + std::to_string(spec->variates) + " variates for " +
                                          spec->name + ", found " + std::to_string(n));
    }
    const std::size_t needed = spec->train + spec->validation + spec->test;
    if (spec->pinned() && row < needed) {
      throw Error(Errc::SpecMismatch, source + ": " + spec->name + " splits need " + std::to_string(needed) +
                                          " rows, file has " + std::to_string(row));
    }
  }
  return raw;
}

Matrix Standardizer::apply(const Matrix& raw) const {
  return (raw.colwise() - mean).array().colwise() / scale.array();
}

Matrix Standardizer::invert(const Matrix& standardized) const {
  return (standardized.array().colwise() * scale.array()).matrix().colwise() + mean;
}

Standardizer fit_standardizer(const Matrix& raw, std::size_t train_length) {
  if (train_length < 2 || train_length > static_cast<std::size_t>(raw.cols())) {
    throw Error(Errc::SplitTooShort, "train split of length " + std::to_string(train_length) +
                                         " cannot be standardized");
  }
  const auto t = static_cast<Index>(train_length);
  Standardizer s;
  const auto train = raw.leftCols(t);
  s.mean = train.rowwise().mean();
  // Sample (n - 1) standard deviation, the convention of the common scaler.
  const Vector var = (train.colwise() - s.mean).rowwise().squaredNorm() / static_cast<double>(t - 1);
  s.scale = var.cwiseSqrt();
  s.degenerate.assign(static_cast<std::size_t>(raw.rows()), false);
  for (Index v = 0; v < raw.rows(); ++v) {
    if (!(s.scale(v) > 0.0)) {
      s.scale(v) = 1.0;
      s.degenerate[static_cast<std::size_t>(v)] = true;
      log::warn("variate " + std::to_string(v) + " has zero variance on the train split; centering only");
    }
  }
  return s;
}

Dataset make_dataset(const RawSeries& raw, SplitSizes sizes, bool standardize, const std::string& name) {
  const std::size_t total = raw.length();
  if (sizes.train + sizes.validation + sizes.test == 0) {
    sizes.train = static_cast<std::size_t>(static_cast<double>(total) * 0.7);
    sizes.test = static_cast<std::size_t>(static_cast<double>(total) * 0.2);
    sizes.validation = total - sizes.train - sizes.test;
  }
  if (sizes.train == 0 || sizes.validation == 0 || sizes.test == 0) {
    throw Error(Errc::EmptySplit, "train, validation and test splits must all be non-empty");
  }
  if (sizes.train + sizes.validation + sizes.test > total) {
    throw Error(Errc::SpecMismatch, "split sizes exceed the series length " + std::to_string(total));
  }
  Dataset d;
  d.name = name;
  Matrix values = raw.values;
  if (standardize) {
    d.standardizer = fit_standardizer(values, sizes.train);
    values = d.standardizer.apply(values);
  } else {
    d.standardizer.mean = Vector::Zero(values.rows());
    d.standardizer.scale = Vector::Ones(values.rows());
    d.standardizer.degenerate.assign(static_cast<std::size_t>(values.rows()), false);
  }
  const auto tr = static_cast<Index>(sizes.train), va = static_cast<Index>(sizes.validation),
             te = static_cast<Index>(sizes.test);
  d.train = values.middleCols(0, tr);
  d.validation = values.middleCols(tr, va);
  d.test = values.middleCols(tr + va, te);
  return d;
}

WindowSet::WindowSet(const Matrix& split, std::size_t lookback, std::size_t horizon, std::size_t stride)
    : split_(&split), lookback_(lookback), horizon_(horizon), stride_(stride) {
  if (lookback == 0 || horizon == 0 || stride == 0) {
    throw Error(Errc::ConfigInvalid, "lookback, horizon and stride must be positive");
  }
  const auto len = static_cast<std::size_t>(split.cols());
  if (len < lookback + horizon) {
    throw Error(Errc::SplitTooShort, "split of length " + std::to_string(len) + " is shorter than lookback + horizon = " +
                                         std::to_string(lookback + horizon));
  }
  count_ = (len - lookback - horizon) / stride + 1;
}

WindowSample WindowSet::at(std::size_t i) const {
  const auto o = static_cast<Index>(origin(i));
  return WindowSample{split_->middleCols(o, static_cast<Index>(lookback_)),
                      split_->middleCols(o + static_cast<Index>(lookback_), static_cast<Index>(horizon_)), origin(i)};
}

void WindowSet::gather(const std::vector<std::size_t>& indices, SeriesTensor& x, SeriesTensor& y) const {
  const std::size_t n = variates();
  const std::size_t b = indices.size();
  x = SeriesTensor(b, n, lookback_);
  y = SeriesTensor(b, n, horizon_);
  const auto nn = static_cast<Index>(n);
  for (std::size_t k = 0; k < b; ++k) {
    if (indices[k] >= count_) throw Error(Errc::ShapeMismatch, "window index out of range");
    const auto o = static_cast<Index>(origin(indices[k]));
    const auto row = static_cast<Index>(k) * nn;
    x.values.middleRows(row, nn) = split_->middleCols(o, static_cast<Index>(lookback_));
    y.values.middleRows(row, nn) = split_->middleCols(o + static_cast<Index>(lookback_), static_cast<Index>(horizon_));
  }
}

RawSeries synthetic_multitone(const std::vector<Tone>& tones, double noise_sigma, std::size_t length,
                              std::uint64_t seed, std::size_t variates) {
  for (const auto& t : tones) {
    if (!(t.period >= 2.0)) throw Error(Errc::ConfigInvalid, "tone periods must be >= 2 samples");
  }
  RawSeries raw;
  raw.values = Matrix::Zero(static_cast<Index>(variates), static_cast<Index>(length));
  for (std::size_t v = 0; v < variates; ++v) raw.columns.push_back("s" + std::to_string(v));
  for (std::size_t t = 0; t < length; ++t) {
    double s = 0.0;
    for (const auto& tone : tones) {
      s += tone.amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(t) / tone.period + tone.phase);
    }
    raw.values.col(static_cast<Index>(t)).setConstant(s);
  }
  if (noise_sigma > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, noise_sigma);
    for (Index v = 0; v < raw.values.rows(); ++v) {
      for (Index t = 0; t < raw.values.cols(); ++t) raw.values(v, t) += noise(rng);
    }
  }
  return raw;
}

std::vector<Tone> parse_tones(const std::string& text) {
  std::vector<Tone> tones;
  for (const auto& part : split_line(text, ';')) {
    if (trim(part).empty()) continue;
    const auto f = split_line(trim(part), ':');
    if (f.size() < 2 || f.size() > 3) throw Error(Errc::ConfigInvalid, "tone '" + part + "' is not amp:period[:phase]");
    Tone t;
    if (!parse_double(trim(f[0]), t.amplitude) || !parse_double(trim(f[1]), t.period) ||
        (f.size() == 3 && !parse_double(trim(f[2]), t.phase))) {
      throw Error(Errc::ConfigInvalid, "tone '" + part + "' has a non-numeric field");
    }
    tones.push_back(t);
  }
  if (tones.empty()) throw Error(Errc::ConfigInvalid, "tone list is empty");
  return tones;
}

std::string format_tones(const std::vector<Tone>& tones) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < tones.size(); ++i) {
    if (i) out << ';';
    out << tones[i].amplitude << ':' << tones[i].period << ':' << tones[i].phase;
  }
  return out.str();
}

}  // namespace beat::data
