#include <gtest/gtest.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "common/error.hpp"
#include "config/run_config.hpp"
#include "train/checkpoint.hpp"

using namespace beat;
namespace fs = std::filesystem;

namespace {

std::string error_text(const std::function<void()>& f, Errc expected) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), expected) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no error";
  return "";
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("beat_test_config_" + std::to_string(::getpid())) / name;
  fs::create_directories(p.parent_path());
  return p;
}

std::vector<unsigned char> bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Config, Defaults) {
  const auto c = config::defaults();
  EXPECT_EQ(config::get(c, "data.name"), "ETTh1");
  EXPECT_EQ(config::get(c, "task.lookback"), "96");
  EXPECT_EQ(config::get(c, "task.horizon"), "96");
  EXPECT_EQ(config::get(c, "wavelet.name"), "db2");
  EXPECT_EQ(config::get(c, "wavelet.level"), "2");
  EXPECT_EQ(config::get(c, "train.optimizer"), "adam");
  EXPECT_EQ(config::get(c, "balance.modulation"), "gradient");
  EXPECT_EQ(config::get(c, "balance.c_max"), "10");
  EXPECT_EQ(c.train.batch_size, 32u);
  EXPECT_EQ(c.train.patience, 10u);
  EXPECT_NO_THROW(config::validate(c));
  for (const auto& k : config::schema()) {
    EXPECT_EQ(config::get(c, k.key), k.default_value) << k.key;
    EXPECT_FALSE(k.doc.empty()) << k.key;
  }
}

TEST(Config, ParseCommentsAndAliases) {
  auto c = config::parse(
      "# experiment\n"
      "horizon = 336   # suffix alias\n"
      "wavelet.name = coif3\n"
      "\n"
      "balance.modulation=off\n"
      "train.lr = 5e-4\n");
  EXPECT_EQ(c.model.task.horizon, 336u);
  EXPECT_EQ(c.model.wavelet.family, wavelet::Family::Coiflets);
  EXPECT_EQ(c.train.balance.modulation, train::Modulation::Off);
  EXPECT_EQ(c.train.lr, 5e-4);
}

TEST(Config, ErrorsNameTheKeyAndLine) {
  auto msg = error_text([] { config::parse("task.horizon = 96\nmodel.widht = 3\n", "exp.cfg"); }, Errc::ConfigInvalid);
  EXPECT_NE(msg.find("exp.cfg:2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("model.widht"), std::string::npos) << msg;
  msg = error_text([] { config::parse("train.lr = fast\n"); }, Errc::ConfigInvalid);
  EXPECT_NE(msg.find("train.lr"), std::string::npos) << msg;
  msg = error_text([] { config::parse("no equals sign\n", "x.cfg"); }, Errc::ConfigInvalid);
  EXPECT_NE(msg.find("x.cfg:1"), std::string::npos) << msg;
  // "seed" matches data.seed and train.seed
  msg = error_text([] { auto c = config::defaults(); config::set(c, "seed", "1"); }, Errc::ConfigInvalid);
  EXPECT_NE(msg.find("seed"), std::string::npos);
  error_text([] { config::parse("wavelet.name = db99\n"); }, Errc::UnsupportedWavelet);
  error_text([] { config::parse("balance.modulation = maybe\n"); }, Errc::ConfigInvalid);
}

TEST(Config, ValidateCrossFields) {
  auto c = config::defaults();
  config::set(c, "wavelet.level", "7");  // 2^7 > 96
  error_text([&] { config::validate(c); }, Errc::ConfigInvalid);
  c = config::defaults();
  config::set(c, "train.lr", "-1");
  error_text([&] { config::validate(c); }, Errc::ConfigInvalid);
}

TEST(Config, TextRoundTrip) {
  auto c = config::defaults();
  config::apply_overrides(c, {"wavelet.name=bior2.2", "wavelet.level=3", "train.lr=0.000123456789", "data.source=synthetic",
                              "data.tones=1:96:0.5;0.2:6:0", "balance.metric=mae", "eval.space=original"});
  const auto text = config::to_text(c);
  const auto back = config::parse(text);
  EXPECT_EQ(config::to_text(back), text);
  EXPECT_EQ(back.train.lr, 0.000123456789);
  EXPECT_EQ(config::config_hash(back), config::config_hash(c));
}

TEST(Config, HashCoversTrainingKeysOnly) {
  const auto base = config::defaults();
  const auto h = config::config_hash(base);
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(h, config::config_hash(config::defaults()));
  auto c = base;
  config::set(c, "output.root", "/tmp/elsewhere");
  config::set(c, "output.name", "custom");
  EXPECT_EQ(config::config_hash(c), h);
  for (const auto& [k, v] : std::vector<std::pair<std::string, std::string>>{
           {"balance.modulation", "off"}, {"train.seed", "1"}, {"task.horizon", "192"}, {"wavelet.level", "3"}}) {
    auto d = base;
    config::set(d, k, v);
    EXPECT_NE(config::config_hash(d), h) << k;
  }
}

TEST(Config, RunDirectory) {
  auto c = config::defaults();
  config::set(c, "output.root", "/tmp/r");
  EXPECT_EQ(config::run_directory(c), "/tmp/r/ETTh1-K96-" + config::config_hash(c).substr(0, 8));
  config::set(c, "output.name", "mine");
  EXPECT_EQ(config::run_directory(c), "/tmp/r/mine");
  auto d = config::defaults();
  ::setenv("BEAT_OUTPUT_ROOT", "/tmp/envroot", 1);
  EXPECT_EQ(config::output_root(d), "/tmp/envroot");
  ::unsetenv("BEAT_OUTPUT_ROOT");
  EXPECT_EQ(config::output_root(d), "runs");
}

TEST(Config, DeclaredVariates) {
  auto c = config::defaults();
  EXPECT_EQ(config::declared_variates(c), 7u);
  config::set(c, "data.name", "custom");
  EXPECT_FALSE(config::declared_variates(c));
  config::set(c, "data.source", "synthetic");
  config::set(c, "data.variates", "3");
  EXPECT_EQ(config::declared_variates(c), 3u);
}

TEST(Config, LoadFromFile) {
  const auto p = scratch("a.cfg");
  std::ofstream(p) << "task.horizon = 192\n";
  EXPECT_EQ(config::load(p.string()).model.task.horizon, 192u);
  error_text([] { config::load("/nonexistent.cfg"); }, Errc::Io);
}

namespace {

model::ModelConfig tiny() {
  model::ModelConfig c;
  c.wavelet = wavelet::parse_wavelet("db2", 1);
  c.branch = model::BranchConfig{4, 2, 3, 1};
  c.task = model::Task{8, 4, 1};
  return c;
}

}  // namespace

TEST(Checkpoint, RoundTripBitExact) {
  model::ForecastModel a(tiny(), 1), b(tiny(), 2);
  const auto p = scratch("m.ckpt");
  train::write_checkpoint(p.string(), train::capture(a, "task.horizon = 4\n"));
  const auto ck = train::read_checkpoint(p.string());
  EXPECT_EQ(ck.config_text, "task.horizon = 4\n");
  train::load_into(b, ck);
  auto pa = a.parameters(), pb = b.parameters();
  ASSERT_EQ(pa.size(), pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i) EXPECT_EQ(pa[i]->value, pb[i]->value);
}

TEST(Checkpoint, DocumentedByteLayout) {
  model::ForecastModel m(tiny(), 3);
  const auto p = scratch("layout.ckpt");
  const std::string cfg = "k = v\n";
  train::write_checkpoint(p.string(), train::capture(m, cfg));
  const auto b = bytes(p);
  auto u32 = [&](std::size_t o) { std::uint32_t v; std::memcpy(&v, &b[o], 4); return v; };
  auto u64 = [&](std::size_t o) { std::uint64_t v; std::memcpy(&v, &b[o], 8); return v; };
  ASSERT_GT(b.size(), 32u);
  EXPECT_EQ(std::string(b.begin(), b.begin() + 8), "BEATCKPT");
  EXPECT_EQ(u32(8), 1u);
  EXPECT_EQ(u64(12), cfg.size());
  EXPECT_EQ(std::string(b.begin() + 20, b.begin() + 20 + 6), cfg);
  std::size_t o = 26;
  const auto params = m.parameters();
  EXPECT_EQ(u64(o), params.size());
  o += 8;
  for (auto* prm : params) {
    const auto len = u32(o);
    EXPECT_EQ(std::string(b.begin() + o + 4, b.begin() + o + 4 + len), prm->name);
    o += 4 + len;
    EXPECT_EQ(u32(o), 2u);
    EXPECT_EQ(u64(o + 4), static_cast<std::uint64_t>(prm->value.rows()));
    EXPECT_EQ(u64(o + 12), static_cast<std::uint64_t>(prm->value.cols()));
    o += 20;
    for (Eigen::Index r = 0; r < prm->value.rows(); ++r)
      for (Eigen::Index c = 0; c < prm->value.cols(); ++c, o += 8) {
        double v;
        std::memcpy(&v, &b[o], 8);
        EXPECT_EQ(v, prm->value(r, c));
      }
  }
  EXPECT_EQ(o, b.size());
}

TEST(Checkpoint, Mismatches) {
  model::ForecastModel m(tiny(), 4);
  auto wider_cfg = tiny();
  wider_cfg.branch.width = 5;
  model::ForecastModel wider(wider_cfg, 4);
  auto ck = train::capture(m, "");
  error_text([&] { train::load_into(wider, ck); }, Errc::CheckpointMismatch);
  auto renamed = ck;
  renamed.parameters[0].first = "nope";
  error_text([&] { train::load_into(m, renamed); }, Errc::CheckpointMismatch);
  auto fewer = ck;
  fewer.parameters.pop_back();
  error_text([&] { train::load_into(m, fewer); }, Errc::CheckpointMismatch);

  const auto p = scratch("bad.ckpt");
  std::ofstream(p, std::ios::binary) << "NOTACKPT0000";
  error_text([&] { train::read_checkpoint(p.string()); }, Errc::CheckpointMismatch);
  const auto good = scratch("trunc.ckpt");
  train::write_checkpoint(good.string(), ck);
  fs::resize_file(good, fs::file_size(good) - 3);
  error_text([&] { train::read_checkpoint(good.string()); }, Errc::CheckpointMismatch);
  error_text([&] { train::read_checkpoint("/nonexistent.ckpt"); }, Errc::Io);
}
