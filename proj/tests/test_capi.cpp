#include <gtest/gtest.h>

#include <beat/beat.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

const fs::path& root() {
  static const fs::path r = [] {
    auto p = fs::temp_directory_path() / ("beat_capi_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return r;
}

std::string last() { return beat_last_error(); }

beat_config* synthetic_config(size_t horizon) {
  beat_config* c = nullptr;
  EXPECT_EQ(beat_config_create(&c), BEAT_OK);
  const std::vector<std::pair<const char*, std::string>> kv = {
      {"data.source", "synthetic"}, {"data.name", "tones"},     {"data.length", "700"},
      {"data.variates", "2"},       {"task.lookback", "32"},    {"task.horizon", std::to_string(horizon)},
      {"model.patch_len", "8"},     {"model.stride", "4"},      {"model.width", "8"},
      {"model.depth", "1"},         {"train.max_epochs", "2"},  {"output.root", root().string()}};
  for (const auto& [k, v] : kv) EXPECT_EQ(beat_config_set(c, k, v.c_str()), BEAT_OK) << k << ": " << last();
  return c;
}

std::string get_string(beat_status (*fn)(const beat_config*, char*, size_t, size_t*), const beat_config* c) {
  size_t needed = 0;
  EXPECT_EQ(fn(c, nullptr, 0, &needed), BEAT_ERR_BUFFER_TOO_SMALL);
  std::string s(needed, '\0');
  EXPECT_EQ(fn(c, s.data(), s.size(), &needed), BEAT_OK);
  s.resize(needed - 1);
  return s;
}

// One trained run shared by the model tests.
const std::string& trained_run() {
  static const std::string dir = [] {
    beat_config* c = synthetic_config(16);
    beat_train_summary s{};
    EXPECT_EQ(beat_train(c, &s), BEAT_OK) << last();
    std::string d = get_string(beat_config_run_dir, c);
    beat_config_destroy(c);
    return d;
  }();
  return dir;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(beat_version(), "1.0.0");
  EXPECT_STREQ(beat_status_name(BEAT_OK), "ok");
  EXPECT_STRNE(beat_status_name(BEAT_ERR_CONFIG), beat_status_name(BEAT_ERR_DATA));
  EXPECT_STREQ(beat_status_name(static_cast<beat_status>(99)), "unknown status");
}

TEST(CApi, ConfigStatusesAndBuffers) {
  beat_config* c = nullptr;
  EXPECT_EQ(beat_config_create(nullptr), BEAT_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(beat_config_create(&c), BEAT_OK);
  EXPECT_EQ(beat_config_set(c, "horizon", "192"), BEAT_OK);
  EXPECT_EQ(beat_config_set(c, "no.such.key", "1"), BEAT_ERR_CONFIG);
  EXPECT_NE(last().find("no.such.key"), std::string::npos) << last();
  EXPECT_EQ(beat_config_set(c, "wavelet.name", "bior9.9"), BEAT_ERR_CONFIG);
  EXPECT_EQ(beat_config_set(nullptr, "horizon", "1"), BEAT_ERR_INVALID_ARGUMENT);

  char small[2];
  size_t needed = 0;
  EXPECT_EQ(beat_config_get(c, "task.horizon", small, sizeof small, &needed), BEAT_ERR_BUFFER_TOO_SMALL);
  EXPECT_EQ(needed, 4u);
  char buf[8];
  EXPECT_EQ(beat_config_get(c, "task.horizon", buf, sizeof buf, &needed), BEAT_OK);
  EXPECT_STREQ(buf, "192");

  const std::string text = get_string(beat_config_text, c);
  EXPECT_NE(text.find("task.horizon = 192"), std::string::npos);
  beat_config* parsed = nullptr;
  ASSERT_EQ(beat_config_parse(text.c_str(), &parsed), BEAT_OK);
  EXPECT_EQ(get_string(beat_config_hash, parsed), get_string(beat_config_hash, c));
  EXPECT_EQ(get_string(beat_config_hash, c).size(), 16u);
  beat_config_destroy(parsed);

  EXPECT_EQ(beat_config_parse("bad line\n", &parsed), BEAT_ERR_CONFIG);
  EXPECT_EQ(beat_config_load("/nonexistent.cfg", &parsed), BEAT_ERR_IO);
  beat_config_destroy(c);
  beat_config_destroy(nullptr);
}

TEST(CApi, KeyInfoEnumeration) {
  size_t i = 0;
  const char *k, *d, *doc;
  bool saw_modulation = false;
  while (beat_config_key_info(i, &k, &d, &doc) == BEAT_OK) {
    if (std::string(k) == "balance.modulation") {
      saw_modulation = true;
      EXPECT_STREQ(d, "gradient");
    }
    ++i;
  }
  EXPECT_GT(i, 30u);
  EXPECT_TRUE(saw_modulation);
  EXPECT_EQ(beat_config_key_info(i, &k, &d, &doc), BEAT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, DwtRoundTrip) {
  std::vector<double> x(97);
  for (size_t i = 0; i < x.size(); ++i) x[i] = std::sin(0.2 * i) + 0.01 * i;
  size_t needed = 0;
  EXPECT_EQ(beat_dwt(x.data(), x.size(), "sym4", 3, nullptr, 0, &needed), BEAT_ERR_BUFFER_TOO_SMALL);
  EXPECT_EQ(needed, 49u + 25u + 13u + 13u);
  std::vector<double> c(needed);
  ASSERT_EQ(beat_dwt(x.data(), x.size(), "sym4", 3, c.data(), c.size(), &needed), BEAT_OK);
  std::vector<double> back(x.size());
  ASSERT_EQ(beat_idwt(c.data(), c.size(), x.size(), "sym4", 3, back.data()), BEAT_OK);
  for (size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(back[i], x[i], 1e-10);
  EXPECT_EQ(beat_idwt(c.data(), c.size() - 1, x.size(), "sym4", 3, back.data()), BEAT_ERR_SHAPE);
  EXPECT_EQ(beat_dwt(x.data(), x.size(), "db99", 1, c.data(), c.size(), &needed), BEAT_ERR_CONFIG);
  EXPECT_EQ(beat_dwt(x.data(), 4, "db2", 3, c.data(), c.size(), &needed), BEAT_ERR_SHAPE);
}

TEST(CApi, TrainEvaluateAndPredict) {
  const auto& dir = trained_run();
  ASSERT_TRUE(fs::exists(fs::path(dir) / "checkpoint.bin"));
  for (const char* f : {"config.cfg", "metrics.csv", "balance_log.jsonl", "result.json"})
    EXPECT_TRUE(fs::exists(fs::path(dir) / f)) << f;

  beat_metrics m{};
  ASSERT_EQ(beat_evaluate(dir.c_str(), nullptr, nullptr, 0, &m), BEAT_OK) << last();
  EXPECT_EQ(m.horizon, 16u);
  EXPECT_GT(m.windows, 0u);
  beat_metrics again{};
  ASSERT_EQ(beat_evaluate((dir + "/checkpoint.bin").c_str(), nullptr, nullptr, 0, &again), BEAT_OK) << last();
  EXPECT_EQ(again.mse, m.mse);
  EXPECT_EQ(beat_evaluate(dir.c_str(), "ETTh1", nullptr, 0, &m), BEAT_ERR_CONFIG);
  EXPECT_EQ(beat_evaluate("/nonexistent/run", nullptr, nullptr, 0, &m), BEAT_ERR_IO);

  beat_model* model = nullptr;
  ASSERT_EQ(beat_model_load(dir.c_str(), &model), BEAT_OK) << last();
  size_t n = 0, t = 0, k = 0;
  ASSERT_EQ(beat_model_shape(model, &n, &t, &k), BEAT_OK);
  EXPECT_EQ(n, 2u);
  EXPECT_EQ(t, 32u);
  EXPECT_EQ(k, 16u);
  std::vector<double> x(3 * n * t), y(3 * n * k), y2(3 * n * k);
  for (size_t i = 0; i < x.size(); ++i) x[i] = std::sin(0.3 * i);
  ASSERT_EQ(beat_model_predict(model, x.data(), 3, y.data()), BEAT_OK);
  ASSERT_EQ(beat_model_predict(model, x.data(), 3, y2.data()), BEAT_OK);
  EXPECT_EQ(y, y2);
  for (double v : y) EXPECT_TRUE(std::isfinite(v));
  EXPECT_EQ(beat_model_predict(model, x.data(), 0, y.data()), BEAT_ERR_INVALID_ARGUMENT);
  beat_model_destroy(model);
}

TEST(CApi, InspectBalance) {
  const auto& dir = trained_run();
  beat_balance_summary s{};
  const auto csv = root() / "balance.csv";
  size_t needed = 0;
  ASSERT_EQ(beat_inspect_balance(dir.c_str(), csv.c_str(), &s, nullptr, 0, &needed), BEAT_OK) << last();
  EXPECT_GT(s.batches, 0u);
  EXPECT_EQ(s.level, 2);
  EXPECT_LT(s.max_detail_mean_error, 1e-12);
  std::ifstream in(csv);
  std::string line;
  size_t rows = 0;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("u,mu,", 0), 0u) << line;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, s.batches);
  std::string text(needed, '\0');
  ASSERT_EQ(beat_inspect_balance(dir.c_str(), nullptr, &s, text.data(), text.size(), &needed), BEAT_OK);
  EXPECT_NE(text.find("D1"), std::string::npos);
}

TEST(CApi, ReportTable) {
  std::vector<std::string> dirs;
  for (size_t h : {96u, 192u, 336u, 720u}) {
    beat_config* c = synthetic_config(h);
    ASSERT_EQ(beat_config_set(c, "data.length", "8000"), BEAT_OK);
    ASSERT_EQ(beat_config_set(c, "train.max_epochs", "1"), BEAT_OK);
    ASSERT_EQ(beat_config_set(c, "train.max_steps", "3"), BEAT_OK);
    beat_train_summary s{};
    ASSERT_EQ(beat_train(c, &s), BEAT_OK) << last();
    dirs.push_back(get_string(beat_config_run_dir, c));
    beat_config_destroy(c);
  }
  std::vector<const char*> ptrs;
  for (const auto& d : dirs) ptrs.push_back(d.c_str());
  size_t needed = 0;
  ASSERT_EQ(beat_report_table(ptrs.data(), ptrs.size(), 0, nullptr, 0, &needed), BEAT_ERR_BUFFER_TOO_SMALL);
  std::string text(needed, '\0');
  ASSERT_EQ(beat_report_table(ptrs.data(), ptrs.size(), 0, text.data(), text.size(), &needed), BEAT_OK);
  EXPECT_NE(text.find("tones        Avg"), std::string::npos) << text;
  EXPECT_EQ(beat_report_table(ptrs.data(), 3, 0, text.data(), text.size(), &needed), BEAT_ERR_DATA);
  EXPECT_NE(last().find("MissingHorizon"), std::string::npos);
}
