#include "wavelet/wavelet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "common/error.hpp"
#include "wavelet/filter_tables.hpp"

namespace beat::wavelet {
namespace {

using Index = Eigen::Index;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::UnsupportedWavelet, "cannot parse wavelet order in '" + std::string(context) + "'");
  }
  return value;
}

// One analysis level on an even-length periodic signal:
//   lo[o] = sum_j h[j] x[(2o + F/2 - j) mod M], likewise hi with g.
void analyze(const double* x, std::size_t m, const std::vector<double>& h, const std::vector<double>& g,
             double* lo, double* hi) {
  const auto f = static_cast<long>(h.size());
  const auto mm = static_cast<long>(m);
  for (long o = 0; o < mm / 2; ++o) {
    const long base = 2 * o + f / 2;
    double a = 0.0, d = 0.0;
    for (long j = 0; j < f; ++j) {
      long idx = (base - j) % mm;
      if (idx < 0) idx += mm;
      a += h[static_cast<std::size_t>(j)] * x[idx];
      d += g[static_cast<std::size_t>(j)] * x[idx];
    }
    lo[o] = a;
    hi[o] = d;
  }
}

// Transpose of analyze(): accumulates into x (length M, zero-initialized by caller).
void analyze_adjoint(const double* lo, const double* hi, std::size_t m, const std::vector<double>& h,
                     const std::vector<double>& g, double* x) {
  const auto f = static_cast<long>(h.size());
  const auto mm = static_cast<long>(m);
  for (long o = 0; o < mm / 2; ++o) {
    const long base = 2 * o + f / 2;
    for (long j = 0; j < f; ++j) {
      long idx = (base - j) % mm;
      if (idx < 0) idx += mm;
      x[idx] += h[static_cast<std::size_t>(j)] * lo[o] + g[static_cast<std::size_t>(j)] * hi[o];
    }
  }
}

std::vector<double> reversed(const std::vector<double>& v) { return {v.rbegin(), v.rend()}; }

void check_rows(const CoefficientSet& c) {
  const Index rows = c.approximation.rows();
  for (const auto& d : c.details) {
    if (d.rows() != rows) throw Error(Errc::LengthMismatch, "coefficient series disagree on row count");
  }
}

void check_lengths(const CoefficientSet& c, const WaveletSpec& spec) {
  if (c.level() != spec.level || static_cast<int>(c.lengths.coefficients.size()) != spec.level) {
    throw Error(Errc::LengthMismatch, "coefficient set has " + std::to_string(c.level()) +
                                          " detail series, wavelet level is " + std::to_string(spec.level));
  }
  check_rows(c);
  const auto& len = c.lengths.coefficients;
  for (int k = 0; k < spec.level; ++k) {
    if (static_cast<std::size_t>(c.details[k].cols()) != len[k]) {
      throw Error(Errc::LengthMismatch, "detail " + std::to_string(k + 1) + " has length " +
                                            std::to_string(c.details[k].cols()) + ", expected " +
                                            std::to_string(len[k]));
    }
  }
  if (static_cast<std::size_t>(c.approximation.cols()) != len.back()) {
    throw Error(Errc::LengthMismatch, "approximation length " + std::to_string(c.approximation.cols()) +
                                          " disagrees with bookkeeping " + std::to_string(len.back()));
  }
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::Coiflets: return "coiflets";
    case Family::Daubechies: return "daubechies";
    case Family::Biorthogonal: return "biorthogonal";
    case Family::Symlets: return "symlets";
  }
  return "?";
}

Family parse_family(std::string_view family) {
  const std::string f = lower(family);
  if (f == "daubechies" || f == "db") return Family::Daubechies;
  if (f == "symlets" || f == "sym") return Family::Symlets;
  if (f == "coiflets" || f == "coif") return Family::Coiflets;
  if (f == "biorthogonal" || f == "bior") return Family::Biorthogonal;
  throw Error(Errc::UnsupportedWavelet, "unknown wavelet family '" + std::string(family) + "'");
}

std::string WaveletSpec::name() const {
  switch (family) {
    case Family::Daubechies: return "db" + std::to_string(order);
    case Family::Symlets: return "sym" + std::to_string(order);
    case Family::Coiflets: return "coif" + std::to_string(order);
    case Family::Biorthogonal: return "bior" + std::to_string(order) + "." + std::to_string(minor);
  }
  return "?";
}

WaveletSpec parse_wavelet(std::string_view name, int level) {
  const std::string n = lower(name);
  WaveletSpec spec;
  spec.level = level;
  if (n == "haar") {
    spec.family = Family::Daubechies;
    spec.order = 1;
    return spec;
  }
  std::size_t split = 0;
  while (split < n.size() && std::isalpha(static_cast<unsigned char>(n[split]))) ++split;
  spec.family = parse_family(std::string_view(n).substr(0, split));
  const std::string_view digits = std::string_view(n).substr(split);
  if (spec.family == Family::Biorthogonal) {
    const auto dot = digits.find('.');
    if (dot == std::string_view::npos) {
      throw Error(Errc::UnsupportedWavelet, "biorthogonal wavelets need a pair such as bior2.2");
    }
    spec.order = parse_int(digits.substr(0, dot), name);
    spec.minor = parse_int(digits.substr(dot + 1), name);
  } else {
    spec.order = parse_int(digits, name);
  }
  return spec;
}

FilterBank filter_bank(const WaveletSpec& spec) {
  FilterBank bank;
  if (spec.family == Family::Biorthogonal) {
    const auto b = tables::biorthogonal(spec.order, spec.minor);
    if (b.dec_lo.empty()) throw Error(Errc::UnsupportedWavelet, spec.name() + " is not tabulated");
    bank.dec_lo.assign(b.dec_lo.begin(), b.dec_lo.end());
    bank.dec_hi.assign(b.dec_hi.begin(), b.dec_hi.end());
    bank.rec_lo.assign(b.rec_lo.begin(), b.rec_lo.end());
    bank.rec_hi.assign(b.rec_hi.begin(), b.rec_hi.end());
    return bank;
  }
  std::span<const double> lo;
  if (spec.minor == 0) {
    switch (spec.family) {
      case Family::Daubechies: lo = tables::daubechies(spec.order); break;
      case Family::Symlets: lo = tables::symlets(spec.order); break;
      case Family::Coiflets: lo = tables::coiflets(spec.order); break;
      case Family::Biorthogonal: break;
    }
  }
  if (lo.empty()) throw Error(Errc::UnsupportedWavelet, spec.name() + " is not tabulated");
  const std::size_t f = lo.size();
  bank.dec_lo.assign(lo.begin(), lo.end());
  bank.rec_lo = reversed(bank.dec_lo);
  bank.rec_hi.resize(f);
  for (std::size_t k = 0; k < f; ++k) bank.rec_hi[k] = (k % 2 == 0 ? 1.0 : -1.0) * bank.dec_lo[k];
  bank.dec_hi = reversed(bank.rec_hi);
  return bank;
}

void validate(const WaveletSpec& spec) {
  if (spec.level < 1) throw Error(Errc::ConfigInvalid, "wavelet level must be >= 1");
  (void)filter_bank(spec);
}

LevelLengths level_lengths(std::size_t input_length, int level) {
  LevelLengths out;
  std::size_t n = input_length;
  for (int k = 0; k < level; ++k) {
    out.signal.push_back(n);
    n = (n + 1) / 2;
    out.coefficients.push_back(n);
  }
  return out;
}

CoefficientSet dwt_multilevel(const Matrix& signal, const WaveletSpec& spec) {
  return dwt_multilevel(signal, spec, filter_bank(spec));
}

CoefficientSet dwt_multilevel(const Matrix& signal, const WaveletSpec& spec, const FilterBank& bank) {
  if (spec.level < 1) throw Error(Errc::ConfigInvalid, "wavelet level must be >= 1");
  const std::size_t length = static_cast<std::size_t>(signal.cols());
  // Padded-to-even length must allow f halvings.
  const std::size_t padded = length + (length % 2);
  if (length == 0 || padded < (std::size_t{1} << spec.level)) {
    throw Error(Errc::SignalTooShort, "signal of length " + std::to_string(length) +
                                          " is too short for " + std::to_string(spec.level) + " levels");
  }
  CoefficientSet out;
  out.lengths = level_lengths(length, spec.level);
  const Index rows = signal.rows();
  std::vector<double> work;
  Matrix current = signal;
  for (int k = 0; k < spec.level; ++k) {
    const std::size_t n = out.lengths.signal[k];
    const std::size_t m = n + (n % 2);
    const auto half = static_cast<Index>(m / 2);
    Matrix lo(rows, half), hi(rows, half);
    work.resize(m);
    for (Index r = 0; r < rows; ++r) {
      std::copy_n(current.row(r).data(), n, work.begin());
      if (m != n) work[n] = work[n - 1];
      analyze(work.data(), m, bank.dec_lo, bank.dec_hi, lo.row(r).data(), hi.row(r).data());
    }
    out.details.push_back(std::move(hi));
    current = std::move(lo);
  }
  out.approximation = std::move(current);
  return out;
}

Matrix idwt_multilevel(const CoefficientSet& coeffs, const WaveletSpec& spec) {
  return idwt_multilevel(coeffs, spec, filter_bank(spec));
}

Matrix idwt_multilevel(const CoefficientSet& coeffs, const WaveletSpec& spec, const FilterBank& bank) {
  check_lengths(coeffs, spec);
  const auto h = reversed(bank.rec_lo);
  const auto g = reversed(bank.rec_hi);
  const Index rows = coeffs.approximation.rows();
  Matrix current = coeffs.approximation;
  std::vector<double> work;
  for (int k = spec.level - 1; k >= 0; --k) {
    const std::size_t n = coeffs.lengths.signal[k];
    const std::size_t m = n + (n % 2);
    Matrix next(rows, static_cast<Index>(n));
    work.resize(m);
    for (Index r = 0; r < rows; ++r) {
      std::fill(work.begin(), work.end(), 0.0);
      analyze_adjoint(current.row(r).data(), coeffs.details[k].row(r).data(), m, h, g, work.data());
      std::copy_n(work.begin(), n, next.row(r).data());
    }
    current = std::move(next);
  }
  return current;
}

Matrix dwt_multilevel_backward(const CoefficientSet& output_gradients, const WaveletSpec& spec) {
  return dwt_multilevel_backward(output_gradients, spec, filter_bank(spec));
}

Matrix dwt_multilevel_backward(const CoefficientSet& grads, const WaveletSpec& spec, const FilterBank& bank) {
  check_lengths(grads, spec);
  const Index rows = grads.approximation.rows();
  Matrix current = grads.approximation;  // gradient w.r.t. the deepest approximation
  std::vector<double> work;
  for (int k = spec.level - 1; k >= 0; --k) {
    const std::size_t n = grads.lengths.signal[k];
    const std::size_t m = n + (n % 2);
    Matrix next(rows, static_cast<Index>(n));
    work.resize(m);
    for (Index r = 0; r < rows; ++r) {
      std::fill(work.begin(), work.end(), 0.0);
      analyze_adjoint(current.row(r).data(), grads.details[k].row(r).data(), m, bank.dec_lo, bank.dec_hi,
                      work.data());
      // adjoint of repeat-last padding
      if (m != n) work[n - 1] += work[n];
      std::copy_n(work.begin(), n, next.row(r).data());
    }
    current = std::move(next);
  }
  return current;
}

CoefficientSet idwt_multilevel_backward(const Matrix& signal_gradient, const WaveletSpec& spec,
                                        const FilterBank& bank) {
  const std::size_t length = static_cast<std::size_t>(signal_gradient.cols());
  CoefficientSet out;
  out.lengths = level_lengths(length, spec.level);
  const auto h = reversed(bank.rec_lo);
  const auto g = reversed(bank.rec_hi);
  const Index rows = signal_gradient.rows();
  Matrix current = signal_gradient;
  std::vector<double> work;
  for (int k = 0; k < spec.level; ++k) {
    const std::size_t n = out.lengths.signal[k];
    const std::size_t m = n + (n % 2);
    const auto half = static_cast<Index>(m / 2);
    Matrix lo(rows, half), hi(rows, half);
    work.resize(m);
    for (Index r = 0; r < rows; ++r) {
      // adjoint of truncation: zero-extend
      std::copy_n(current.row(r).data(), n, work.begin());
      if (m != n) work[n] = 0.0;
      analyze(work.data(), m, h, g, lo.row(r).data(), hi.row(r).data());
    }
    out.details.push_back(std::move(hi));
    current = std::move(lo);
  }
  out.approximation = std::move(current);
  return out;
}

}  // namespace beat::wavelet
