#pragma once

#include <span>

namespace beat::wavelet::tables {

// Decomposition lowpass filters in the PyWavelets coefficient order. An empty
// span means the order is not tabulated.
std::span<const double> daubechies(int order);  // 1..38
std::span<const double> symlets(int order);     // 2..20
std::span<const double> coiflets(int order);    // 1..17

struct BiorthogonalBank {
  std::span<const double> dec_lo, dec_hi, rec_lo, rec_hi;
};

// Pairs 1.3 2.2 2.4 3.1 3.3 4.4 5.5 6.8; empty spans otherwise.
BiorthogonalBank biorthogonal(int major, int minor);

}  // namespace beat::wavelet::tables
