#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "common/error.hpp"
#include "wavelet/filter_tables.hpp"
#include "wavelet/wavelet.hpp"

using namespace beat;
using namespace beat::wavelet;

namespace {

Matrix random_rows(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = n(rng);
  return m;
}

Matrix row(std::initializer_list<double> v) {
  Matrix m(1, static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) m(0, i++) = x;
  return m;
}

double dot(const CoefficientSet& a, const CoefficientSet& b) {
  double s = (a.approximation.array() * b.approximation.array()).sum();
  for (std::size_t i = 0; i < a.details.size(); ++i) s += (a.details[i].array() * b.details[i].array()).sum();
  return s;
}

CoefficientSet random_like(const CoefficientSet& c, std::uint64_t seed) {
  CoefficientSet g;
  g.lengths = c.lengths;
  g.approximation = random_rows(c.approximation.rows(), c.approximation.cols(), seed);
  for (std::size_t i = 0; i < c.details.size(); ++i) {
    g.details.push_back(random_rows(c.details[i].rows(), c.details[i].cols(), seed + 1 + i));
  }
  return g;
}

// Representative orders per family for the sweep tests.
std::vector<std::string> representative() {
  return {"haar", "db2",  "db4",  "db8",  "db20", "db38", "sym2",   "sym5",   "sym8",   "sym20", "coif1",
          "coif3", "coif5", "coif17", "bior1.3", "bior2.2", "bior2.4", "bior3.1", "bior3.3", "bior4.4", "bior5.5", "bior6.8"};
}

}  // namespace

TEST(WaveletDwt, ConstantSignalHaarHasZeroDetail) {
  const double c = 3.25;
  auto coeffs = dwt_multilevel(Matrix::Constant(1, 4, c), parse_wavelet("db1", 1));
  ASSERT_EQ(coeffs.level(), 1);
  EXPECT_NEAR(coeffs.details[0].cwiseAbs().maxCoeff(), 0.0, 1e-15);
  EXPECT_NEAR(coeffs.approximation(0, 0), c * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(coeffs.approximation(0, 1), c * std::sqrt(2.0), 1e-14);
}

TEST(WaveletDwt, HaarHandEvaluated) {
  // a_k = (x_{2k} + x_{2k+1}) / sqrt2, d_k = (x_{2k} - x_{2k+1}) / sqrt2
  auto coeffs = dwt_multilevel(row({1, 2, 3, 4}), parse_wavelet("haar", 1));
  const double s = std::sqrt(2.0);
  EXPECT_NEAR(coeffs.approximation(0, 0), 3.0 / s, 1e-15);
  EXPECT_NEAR(coeffs.approximation(0, 1), 7.0 / s, 1e-15);
  EXPECT_NEAR(coeffs.details[0](0, 0), -1.0 / s, 1e-15);
  EXPECT_NEAR(coeffs.details[0](0, 1), -1.0 / s, 1e-15);
  EXPECT_NEAR(coeffs.approximation(0, 0), 2.12132, 1e-5);
  EXPECT_NEAR(coeffs.approximation(0, 1), 4.94975, 1e-5);
}

TEST(WaveletIdwt, ZeroCoefficientsGiveZeroSignal) {
  auto spec = parse_wavelet("sym4", 3);
  auto c = dwt_multilevel(Matrix::Zero(2, 40), spec);
  EXPECT_EQ(idwt_multilevel(c, spec).cwiseAbs().maxCoeff(), 0.0);
}

TEST(WaveletIdwt, HaarHandInverted) {
  CoefficientSet c;
  c.lengths = level_lengths(4, 1);
  c.approximation = row({std::sqrt(2.0), std::sqrt(2.0)});
  c.details.push_back(row({0.0, 0.0}));
  const Matrix x = idwt_multilevel(c, parse_wavelet("haar", 1));
  ASSERT_EQ(x.cols(), 4);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(x(0, i), 1.0, 1e-15);
}

TEST(WaveletIdwt, LengthMismatchRejected) {
  auto spec = parse_wavelet("db2", 2);
  auto c = dwt_multilevel(random_rows(1, 32, 1), spec);
  c.details[1] = Matrix::Zero(1, 3);
  EXPECT_THROW(
      {
        try {
          idwt_multilevel(c, spec);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::LengthMismatch);
          throw;
        }
      },
      Error);
}

TEST(WaveletDwt, Errors) {
  try {
    dwt_multilevel(Matrix::Zero(1, 7), parse_wavelet("db2", 4));
    FAIL() << "expected SignalTooShort";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SignalTooShort);
  }
  for (const char* bad : {"db39", "db0", "sym1", "sym21", "coif18", "bior2.3", "mexh"}) {
    try {
      filter_bank(parse_wavelet(bad, 1));
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::UnsupportedWavelet) << bad;
    }
  }
}

TEST(WaveletDwt, InputUnmodifiedAndDeterministic) {
  const Matrix x = random_rows(3, 50, 4);
  const Matrix copy = x;
  auto spec = parse_wavelet("coif2", 3);
  auto a = dwt_multilevel(x, spec);
  auto b = dwt_multilevel(x, spec);
  EXPECT_EQ(x, copy);
  EXPECT_EQ(a.approximation, b.approximation);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(a.details[i], b.details[i]);
}

// Values from PyWavelets wavedec(x, w, mode="periodization"), x_i = sin(0.3 i) + 0.01 i^2, i < 21.
// Its symlet tables carry errors near 1e-11 (ours are recomputed in extended
// precision), hence the 1e-10 tolerance.
TEST(WaveletDwt, MatchesReferenceImplementation) {
  Matrix x(1, 21);
  for (int i = 0; i < 21; ++i) x(0, i) = std::sin(0.3 * i) + 0.01 * i * i;
  struct Case {
    const char* name;
    int level;
    std::vector<std::vector<double>> bands;  // A, D_f, ..., D_1
  };
  const std::vector<Case> cases = {
      {"db4", 2,
       {{4.7497634989917294, 5.2148930235992488, 1.4859997336456452, 2.6532901082832945, 2.154215441808605,
         2.3169021976776016},
        {1.1360862460187111, -0.30928862850960609, -0.053487025121604193, 0.10391811098831283, -0.83405964449106984,
         -2.5868185121850864},
        {-0.057310586108868321, -0.045823495882044062, -0.0040611381279136629, -0.0033344091746584197,
         -0.0014428751651407168, 0.00095269665133946614, 0.0030154641182526011, 0.0040248432132125606,
         0.0036282287783311329, 0.68391934047053637, 0.66327479430048297}}},
      {"sym5", 2,
       {{0.36029818489414245, 2.9604289901802492, 2.2973028480484636, 2.6268717784528826, 5.3412748394955685,
         5.9346085574388603},
        {-1.8296953210880094, 0.043165767277318939, 0.030084155342506139, 0.079578063168802088, -0.11827094814656428,
         -0.38906676126858036},
        {-0.98830493704483013, -0.003058388361024858, -0.00025178105267754242, 0.00041968808494454238,
         0.00094454809930166056, 0.0011394502867338174, 0.00093630970537871699, 0.00040608920417932112,
         0.013532943463222053, 0.092733201068567153, -0.3653399865814132}}},
      {"coif2", 1,
       {{4.1483997672744586, 0.047543865590263246, 1.3006567490313123, 1.7642128560008012, 1.9137714975300406,
         1.7500042678233141, 1.4882079268752697, 1.4174456623137115, 1.804568545538717, 2.7465432988469818,
         4.5378467974086671},
        {-0.31580017609992816, 0.024069962181980886, -0.0063931741266242143, -0.0023422016667727667,
         -0.00035962730553153047, 0.0017485752200741282, 0.0032459501144833057, 0.003609421247332335,
         0.11641581669622421, -0.29073276589331687, 1.7133810827056097}}},
      {"bior2.2", 2,
       {{1.7721748699096775, 2.1933550396428378, 2.7091974326238617, 1.8609240792796262, 2.7716518880847492,
         9.076027979661033},
        {0.17470941698504103, -0.13372539427411567, 0.01482549809351752, 0.19548104231231195, 0.41154668500262415,
         -1.8555679359400372},
        {-0.0022620133542305132, -0.017667861920674127, -0.024431690588064436, -0.020190699406309132,
         -0.0064263886092780775, 0.012052972039918008, 0.02879201021197092, 0.037943298288230065,
         0.036310028059447275, 0.024462747806016316, -1.3154252656005561}}},
      {"db1", 3,
       {{2.4077271074796789, 3.2197488146212345, 8.4629752262169706},
        {-1.1466095244386092, 0.13633367601568103, -2.0604268985874801},
        {-0.58622458818058965, -0.17376146247789404, 0.17973437343418097, -0.18059035620007058,
         -0.99926463050497372, 0},
        {-0.21603540991974862, -0.18998858685924841, -0.10992392151576347, -0.013690814658989026,
         0.055213231151803321, 0.062837540642727174, -0.0033617865344893749, -0.13013993052057604,
         -0.2830901478814194, -0.41866303697782592, 0}}},
  };
  for (const auto& c : cases) {
    auto coeffs = dwt_multilevel(x, parse_wavelet(c.name, c.level));
    ASSERT_EQ(coeffs.level(), c.level) << c.name;
    for (std::size_t b = 0; b < c.bands.size(); ++b) {
      const Matrix& got = b == 0 ? coeffs.approximation : coeffs.details[static_cast<std::size_t>(c.level) - b];
      ASSERT_EQ(static_cast<std::size_t>(got.cols()), c.bands[b].size()) << c.name << " band " << b;
      for (std::size_t k = 0; k < c.bands[b].size(); ++k) {
        EXPECT_NEAR(got(0, static_cast<Eigen::Index>(k)), c.bands[b][k], 1e-10) << c.name << " band " << b << " k " << k;
      }
    }
  }
}

TEST(WaveletFilters, OrthogonalTablesAreConsistent) {
  for (int p = 1; p <= 38; ++p) {
    for (Family fam : {Family::Daubechies, Family::Symlets, Family::Coiflets}) {
      if ((fam == Family::Symlets && (p < 2 || p > 20)) || (fam == Family::Coiflets && p > 17)) continue;
      WaveletSpec s;
      s.family = fam;
      s.order = p;
      const auto bank = filter_bank(s);
      const std::size_t n = bank.dec_lo.size();
      double sum = 0.0;
      for (double h : bank.dec_lo) sum += h;
      EXPECT_NEAR(sum, std::sqrt(2.0), 1e-12) << s.name();
      for (std::size_t k = 0; k < n; ++k) {
        EXPECT_EQ(bank.rec_lo[k], bank.dec_lo[n - 1 - k]) << s.name();
        EXPECT_EQ(bank.rec_hi[k], bank.dec_hi[n - 1 - k]) << s.name();
      }
      // Double-shift orthonormality of the lowpass filter.
      for (std::size_t shift = 0; shift < n; shift += 2) {
        double acc = 0.0;
        for (std::size_t k = 0; k + shift < n; ++k) acc += bank.dec_lo[k] * bank.dec_lo[k + shift];
        EXPECT_NEAR(acc, shift == 0 ? 1.0 : 0.0, 1e-12) << s.name() << " shift " << shift;
      }
    }
  }
}

TEST(WaveletProperties, PerfectReconstructionSweep) {
  double worst = 0.0;
  std::uint64_t seed = 100;
  for (const auto& name : representative()) {
    for (int level = 1; level <= 5; ++level) {
      for (Eigen::Index len : {32, 96, 97, 720}) {
        const auto spec = parse_wavelet(name, level);
        const Matrix x = random_rows(2, len, seed++);
        const Matrix back = idwt_multilevel(dwt_multilevel(x, spec), spec);
        ASSERT_EQ(back.cols(), len);
        const double err = (back - x).cwiseAbs().maxCoeff();
        worst = std::max(worst, err);
        EXPECT_LT(err, 1e-10) << name << " level " << level << " length " << len;
      }
    }
  }
  RecordProperty("worst_error", std::to_string(worst));
}

TEST(WaveletProperties, Linearity) {
  for (const auto& name : {"db3", "sym6", "coif2", "bior3.3"}) {
    const auto spec = parse_wavelet(name, 3);
    const Matrix x = random_rows(1, 97, 1), y = random_rows(1, 97, 2);
    const double a = 1.7, b = -0.4;
    auto lhs = dwt_multilevel(a * x + b * y, spec);
    auto cx = dwt_multilevel(x, spec), cy = dwt_multilevel(y, spec);
    EXPECT_LT((lhs.approximation - (a * cx.approximation + b * cy.approximation)).cwiseAbs().maxCoeff(), 1e-12);
    for (int i = 0; i < 3; ++i) {
      EXPECT_LT((lhs.details[i] - (a * cx.details[i] + b * cy.details[i])).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(WaveletAdjoint, ZeroGradientGivesZeroSignalGradient) {
  const auto spec = parse_wavelet("db4", 2);
  auto c = dwt_multilevel(random_rows(1, 33, 9), spec);
  c.approximation.setZero();
  for (auto& d : c.details) d.setZero();
  EXPECT_EQ(dwt_multilevel_backward(c, spec).cwiseAbs().maxCoeff(), 0.0);
}

TEST(WaveletAdjoint, UnitGradientIsRowOfExplicitMatrix) {
  // Build the explicit 8x8 analysis matrix column by column, then the adjoint
  // of a unit coefficient gradient must equal the matching matrix row.
  for (const auto& name : {"haar", "db2", "sym3", "bior2.2"}) {
    const auto spec = parse_wavelet(name, 2);
    const auto lengths = level_lengths(8, 2);
    std::vector<CoefficientSet> columns;
    for (int j = 0; j < 8; ++j) {
      Matrix e = Matrix::Zero(1, 8);
      e(0, j) = 1.0;
      columns.push_back(dwt_multilevel(e, spec));
    }
    const auto n_a = static_cast<int>(lengths.coefficients.back());
    for (int k = 0; k < n_a; ++k) {
      CoefficientSet g = dwt_multilevel(Matrix::Zero(1, 8), spec);
      g.approximation(0, k) = 1.0;
      const Matrix adj = dwt_multilevel_backward(g, spec);
      for (int j = 0; j < 8; ++j) EXPECT_NEAR(adj(0, j), columns[j].approximation(0, k), 1e-14) << name;
    }
    CoefficientSet g = dwt_multilevel(Matrix::Zero(1, 8), spec);
    g.details[0](0, 1) = 1.0;
    const Matrix adj = dwt_multilevel_backward(g, spec);
    for (int j = 0; j < 8; ++j) EXPECT_NEAR(adj(0, j), columns[j].details[0](0, 1), 1e-14) << name;
  }
}

TEST(WaveletAdjoint, InnerProductIdentity) {
  std::uint64_t seed = 7;
  for (const auto& name : representative()) {
    for (int level : {1, 3, 5}) {
      for (Eigen::Index len : {32, 97}) {
        const auto spec = parse_wavelet(name, level);
        const auto bank = filter_bank(spec);
        const Matrix x = random_rows(1, len, seed++);
        const auto cx = dwt_multilevel(x, spec, bank);
        const auto g = random_like(cx, seed++);
        const double lhs = dot(cx, g);
        const double rhs = (x.array() * dwt_multilevel_backward(g, spec, bank).array()).sum();
        EXPECT_NEAR(lhs, rhs, 1e-10) << name << " " << level << " " << len;

        // Reconstruction adjoint: <idwt(c), s> = <c, idwt_backward(s)>
        const Matrix s = random_rows(1, len, seed++);
        const double l2 = (idwt_multilevel(g, spec, bank).array() * s.array()).sum();
        const double r2 = dot(g, idwt_multilevel_backward(s, spec, bank));
        EXPECT_NEAR(l2, r2, 1e-10) << name << " " << level << " " << len;
      }
    }
  }
}

TEST(WaveletProperties, DaubechiesVanishingMoments) {
  const Eigen::Index n = 256;
  for (int p = 1; p <= 12; ++p) {
    const auto spec = parse_wavelet("db" + std::to_string(p), 1);
    const auto taps = static_cast<Eigen::Index>(2 * p);
    for (int degree = 0; degree < p; ++degree) {
      Matrix x(1, n);
      for (Eigen::Index i = 0; i < n; ++i) x(0, i) = std::pow(static_cast<double>(i) / n, degree);
      const auto c = dwt_multilevel(x, spec);
      // Output o reads input indices 2o + F/2 - j, j < F; keep those that never wrap.
      double worst = 0.0;
      for (Eigen::Index o = 0; o < c.details[0].cols(); ++o) {
        const Eigen::Index hi = 2 * o + taps / 2, lo = hi - (taps - 1);
        if (lo < 0 || hi >= n) continue;
        worst = std::max(worst, std::abs(c.details[0](0, o)));
      }
      EXPECT_LT(worst, 1e-8) << "db" << p << " degree " << degree;
    }
  }
}

TEST(WaveletShape, CeilHalvingRecurrence) {
  for (std::size_t len : {32u, 96u, 97u, 720u, 5u}) {
    for (int f = 1; f <= 5; ++f) {
      if ((len + len % 2) < (1u << f)) continue;
      const auto spec = parse_wavelet("db2", f);
      const auto c = dwt_multilevel(Matrix::Ones(1, static_cast<Eigen::Index>(len)), spec);
      std::size_t cur = len;
      for (int i = 0; i < f; ++i) {
        cur = (cur + 1) / 2;
        EXPECT_EQ(static_cast<std::size_t>(c.details[i].cols()), cur) << len << " " << f;
      }
      EXPECT_EQ(static_cast<std::size_t>(c.approximation.cols()), cur);
    }
  }
}

TEST(WaveletSpec, ParseAndName) {
  EXPECT_EQ(parse_wavelet("haar", 1).name(), "db1");
  EXPECT_EQ(parse_wavelet("bior2.2", 1).name(), "bior2.2");
  EXPECT_EQ(parse_wavelet("coif3", 2).family, Family::Coiflets);
  EXPECT_EQ(parse_wavelet("sym8", 2).order, 8);
  EXPECT_THROW(parse_wavelet("xyz", 1), Error);
}
