#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "common/types.hpp"

namespace beat::wavelet {

enum class Family { Coiflets, Daubechies, Biorthogonal, Symlets };
enum class Boundary { Periodized };

/// Wavelet family, order and decomposition depth. Biorthogonal wavelets are
/// named by a (order, minor) pair such as 2.2; orthogonal ones leave minor 0.
struct WaveletSpec {
  Family family = Family::Daubechies;
  int order = 2;
  int minor = 0;
  int level = 1;
  Boundary boundary = Boundary::Periodized;

  /// Short name in the common tooling convention: db2, sym5, coif1, bior2.2.
  std::string name() const;
};

/// Parses "db4", "sym8", "coif3", "bior2.2" (or "haar") with the given level.
WaveletSpec parse_wavelet(std::string_view name, int level);
Family parse_family(std::string_view family);
std::string family_name(Family family);

struct FilterBank {
  std::vector<double> dec_lo;
  std::vector<double> dec_hi;
  std::vector<double> rec_lo;
  std::vector<double> rec_hi;
};

/// Looks up the tabulated filters; throws UnsupportedWavelet for unknown
/// family/order pairs and ConfigInvalid for a non-positive level.
FilterBank filter_bank(const WaveletSpec& spec);
void validate(const WaveletSpec& spec);

/// Per-level length bookkeeping for periodized decomposition of a signal of
/// length `input_length`. `signal[k]` is the (unpadded) length entering level
/// k+1; `coefficients[k]` is the coefficient length produced at level k+1.
struct LevelLengths {
  std::vector<std::size_t> signal;
  std::vector<std::size_t> coefficients;
};

LevelLengths level_lengths(std::size_t input_length, int level);

/// Approximation at the deepest level plus one detail series per level, every
/// series stored one row per (batch item, variate). details[0] is the level-1
/// (highest frequency) detail.
struct CoefficientSet {
  Matrix approximation;
  std::vector<Matrix> details;
  LevelLengths lengths;

  int level() const { return static_cast<int>(details.size()); }
  std::size_t rows() const { return static_cast<std::size_t>(approximation.rows()); }
};

/// Multi-level periodized DWT applied independently to every row.
CoefficientSet dwt_multilevel(const Matrix& signal, const WaveletSpec& spec);
CoefficientSet dwt_multilevel(const Matrix& signal, const WaveletSpec& spec, const FilterBank& bank);

/// Inverse of dwt_multilevel; returns rows of the original length.
Matrix idwt_multilevel(const CoefficientSet& coeffs, const WaveletSpec& spec);
Matrix idwt_multilevel(const CoefficientSet& coeffs, const WaveletSpec& spec, const FilterBank& bank);

/// Adjoint of the (linear) decomposition map: maps coefficient-space gradients
/// back onto the signal.
Matrix dwt_multilevel_backward(const CoefficientSet& output_gradients, const WaveletSpec& spec);
Matrix dwt_multilevel_backward(const CoefficientSet& output_gradients, const WaveletSpec& spec,
                               const FilterBank& bank);

/// Adjoint of the reconstruction map: maps signal-space gradients onto the
/// coefficients that produced the signal.
CoefficientSet idwt_multilevel_backward(const Matrix& signal_gradient, const WaveletSpec& spec,
                                        const FilterBank& bank);

}  // namespace beat::wavelet
