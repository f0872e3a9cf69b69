#include "config/run_config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "common/error.hpp"

namespace beat::config {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

[[noreturn]] void bad(const std::string& key, const std::string& value, const std::string& why) {
  throw Error(Errc::ConfigInvalid, key + ": invalid value '" + value + "' (" + why + ")");
}

std::size_t to_size(const std::string& key, const std::string& v) {
  std::size_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) bad(key, v, "expected a non-negative integer");
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) bad(key, v, "expected a non-negative integer");
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out)) bad(key, v, "expected a number");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad(key, v, "expected true or false");
}

std::string str(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string str(bool v) { return v ? "true" : "false"; }

// Errors from enum parsers carry no key path; add it.
template <class F>
auto with_key(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), key + ": " + e.message());
  }
}

struct Entry {
  KeyInfo info;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

#define SIZE_KEY(k, field, doc)                                                   \
  Entry {                                                                         \
    {k, "", doc}, [](RunConfig& c, const std::string& v) { c.field = to_size(k, v); }, \
        [](const RunConfig& c) { return std::to_string(c.field); }                \
  }
#define DOUBLE_KEY(k, field, doc)                                                   \
  Entry {                                                                           \
    {k, "", doc}, [](RunConfig& c, const std::string& v) { c.field = to_double(k, v); }, \
        [](const RunConfig& c) { return str(c.field); }                             \
  }
#define BOOL_KEY(k, field, doc)                                                   \
  Entry {                                                                         \
    {k, "", doc}, [](RunConfig& c, const std::string& v) { c.field = to_bool(k, v); }, \
        [](const RunConfig& c) { return str(c.field); }                           \
  }
#define STRING_KEY(k, field, doc) \
  Entry { {k, "", doc}, [](RunConfig& c, const std::string& v) { c.field = v; }, [](const RunConfig& c) { return c.field; } }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> e = {
        STRING_KEY("data.source", data.source, "csv or synthetic"),
        STRING_KEY("data.name", data.name, "dataset name; known names pin variates and split sizes"),
        STRING_KEY("data.path", data.path, "CSV path (timestamp column first)"),
        SIZE_KEY("data.train", data.train, "train split length; 0 uses the known table or 70%"),
        SIZE_KEY("data.validation", data.validation, "validation split length; 0 uses the known table or 10%"),
        SIZE_KEY("data.test", data.test, "test split length; 0 uses the known table or 20%"),
        BOOL_KEY("data.standardize", data.standardize, "z-score each variate with train-split statistics"),
        STRING_KEY("data.tones", data.tones, "synthetic tones, amp:period:phase separated by ';'"),
        DOUBLE_KEY("data.noise", data.noise, "synthetic Gaussian noise sigma"),
        SIZE_KEY("data.length", data.length, "synthetic series length"),
        Entry{{"data.seed", "", "synthetic noise seed"},
              [](RunConfig& c, const std::string& v) { c.data.synthetic_seed = to_u64("data.seed", v); },
              [](const RunConfig& c) { return std::to_string(c.data.synthetic_seed); }},
        SIZE_KEY("data.variates", data.variates, "synthetic variate count"),
        SIZE_KEY("task.lookback", model.task.lookback, "lookback length T"),
        SIZE_KEY("task.horizon", model.task.horizon, "forecast horizon K"),
        Entry{{"wavelet.name", "", "db<p>, sym<p>, coif<p>, bior<p.q> or haar"},
              [](RunConfig& c, const std::string& v) {
                c.model.wavelet = with_key("wavelet.name", [&] {
                  auto spec = wavelet::parse_wavelet(v, c.model.wavelet.level);
                  wavelet::filter_bank(spec);  // rejects untabulated orders here rather than at training time
                  return spec;
                });
              },
              [](const RunConfig& c) { return c.model.wavelet.name(); }},
        Entry{{"wavelet.level", "", "decomposition level f (branches = f + 1)"},
              [](RunConfig& c, const std::string& v) {
                const auto n = to_size("wavelet.level", v);
                if (n == 0 || n > 12) bad("wavelet.level", v, "expected 1..12");
                c.model.wavelet.level = static_cast<int>(n);
              },
              [](const RunConfig& c) { return std::to_string(c.model.wavelet.level); }},
        SIZE_KEY("model.patch_len", model.branch.patch_len, "branch patch length"),
        SIZE_KEY("model.stride", model.branch.stride, "branch patch stride"),
        SIZE_KEY("model.width", model.branch.width, "branch embedding width"),
        SIZE_KEY("model.depth", model.branch.depth, "mixer blocks per branch"),
        BOOL_KEY("model.revin_affine", model.revin_affine, "learnable RevIN affine (shared, never modulated)"),
        DOUBLE_KEY("model.revin_eps", model.revin_epsilon, "RevIN epsilon"),
        Entry{{"train.optimizer", "", "adam or sgd"},
              [](RunConfig& c, const std::string& v) {
                c.train.optimizer = with_key("train.optimizer", [&] { return train::parse_optimizer(v); });
              },
              [](const RunConfig& c) { return train::optimizer_name(c.train.optimizer); }},
        DOUBLE_KEY("train.lr", train.lr, "learning rate"),
        DOUBLE_KEY("train.beta1", train.beta1, "Adam beta1"),
        DOUBLE_KEY("train.beta2", train.beta2, "Adam beta2"),
        DOUBLE_KEY("train.eps", train.eps, "Adam epsilon"),
        SIZE_KEY("train.batch_size", train.batch_size, "windows per batch"),
        SIZE_KEY("train.max_epochs", train.max_epochs, "epoch limit"),
        SIZE_KEY("train.max_steps", train.max_steps, "step budget; 0 for none"),
        SIZE_KEY("train.patience", train.patience, "epochs without validation improvement before stopping"),
        Entry{{"train.seed", "", "initialization and shuffling seed"},
              [](RunConfig& c, const std::string& v) { c.train.seed = to_u64("train.seed", v); },
              [](const RunConfig& c) { return std::to_string(c.train.seed); }},
        Entry{{"train.loss_space", "", "denormalized or normalized"},
              [](RunConfig& c, const std::string& v) {
                c.train.loss_space = with_key("train.loss_space", [&] { return train::parse_loss_space(v); });
              },
              [](const RunConfig& c) { return train::loss_space_name(c.train.loss_space); }},
        Entry{{"balance.modulation", "", "gradient, loss or off"},
              [](RunConfig& c, const std::string& v) {
                c.train.balance.modulation = with_key("balance.modulation", [&] { return train::parse_modulation(v); });
              },
              [](const RunConfig& c) { return train::modulation_name(c.train.balance.modulation); }},
        Entry{{"balance.metric", "", "discrepancy metric: mse, mae, rmse or r2"},
              [](RunConfig& c, const std::string& v) {
                c.train.balance.metric = with_key("balance.metric", [&] { return balance::parse_metric(v); });
              },
              [](const RunConfig& c) { return balance::metric_name(c.train.balance.metric); }},
        DOUBLE_KEY("balance.c_max", train.balance.c_max, "cap on the 1/r coefficient branch"),
        BOOL_KEY("balance.ema", train.balance.ema, "smooth discrepancies with an exponential moving average"),
        DOUBLE_KEY("balance.ema_decay", train.balance.ema_decay, "EMA decay"),
        Entry{{"eval.space", "", "standardized or original"},
              [](RunConfig& c, const std::string& v) { c.eval_space = with_key("eval.space", [&] { return eval::parse_space(v); }); },
              [](const RunConfig& c) { return eval::space_name(c.eval_space); }},
        SIZE_KEY("eval.batch_size", eval_batch, "windows per evaluation batch"),
        STRING_KEY("output.root", output_root, "run root; empty uses $BEAT_OUTPUT_ROOT, then ./runs"),
        STRING_KEY("output.name", run_name, "run directory name; empty derives <data>-K<horizon>-<hash>"),
    };
    RunConfig d = defaults();
    for (auto& entry : e) entry.info.default_value = entry.get(d);
    return e;
  }();
  return table;
}

const Entry& find(const std::string& key) {
  const auto& table = entries();
  for (const auto& e : table) {
    if (e.info.key == key) return e;
  }
  const Entry* match = nullptr;
  for (const auto& e : table) {
    const auto& k = e.info.key;
    if (k.size() > key.size() && k.compare(k.size() - key.size(), key.size(), key) == 0 && k[k.size() - key.size() - 1] == '.') {
      if (match) throw Error(Errc::ConfigInvalid, key + ": ambiguous key (" + match->info.key + ", " + k + ")");
      match = &e;
    }
  }
  if (!match) throw Error(Errc::ConfigInvalid, key + ": unknown key");
  return *match;
}

}  // namespace

RunConfig defaults() {
  RunConfig c;
  c.model.wavelet = wavelet::parse_wavelet("db2", 2);
  return c;
}

const std::vector<KeyInfo>& schema() {
  static const std::vector<KeyInfo> keys = [] {
    std::vector<KeyInfo> k;
    for (const auto& e : entries()) k.push_back(e.info);
    return k;
  }();
  return keys;
}

void set(RunConfig& config, const std::string& key, const std::string& value) {
  find(trim(key)).set(config, trim(value));
}

std::string get(const RunConfig& config, const std::string& key) { return find(trim(key)).get(config); }

RunConfig parse(const std::string& text, const std::string& source) {
  RunConfig c = defaults();
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::ConfigInvalid, source + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      set(c, key, value);
    } catch (const Error& e) {
      throw Error(e.code(), source + ":" + std::to_string(lineno) + ": " + e.message());
    }
  }
  return c;
}

RunConfig load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

void apply_overrides(RunConfig& config, const std::vector<std::string>& overrides) {
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw Error(Errc::ConfigInvalid, "override '" + o + "' is not key=value");
    set(config, o.substr(0, eq), o.substr(eq + 1));
  }
}

std::string to_text(const RunConfig& config) {
  std::string out;
  for (const auto& e : entries()) out += e.info.key + " = " + e.get(config) + "\n";
  return out;
}

std::string config_hash(const RunConfig& config) {
  // Output placement does not change what is trained.
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& e : entries()) {
    if (e.info.key.rfind("output.", 0) == 0) continue;
    for (unsigned char ch : e.info.key + "=" + e.get(config) + "\n") {
      h ^= ch;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void validate(const RunConfig& c) {
  if (c.data.source != "csv" && c.data.source != "synthetic") {
    throw Error(Errc::ConfigInvalid, "data.source: expected csv or synthetic, got '" + c.data.source + "'");
  }
  if (c.data.source == "synthetic") {
    with_key("data.tones", [&] { return data::parse_tones(c.data.tones); });
    if (c.data.length == 0 || c.data.variates == 0) {
      throw Error(Errc::ConfigInvalid, "data.length and data.variates must be positive");
    }
    if (c.data.noise < 0.0) throw Error(Errc::ConfigInvalid, "data.noise must be non-negative");
  }
  const auto& t = c.model.task;
  if (t.lookback < 2) throw Error(Errc::ConfigInvalid, "task.lookback must be at least 2");
  if (t.horizon == 0) throw Error(Errc::ConfigInvalid, "task.horizon must be positive");
  with_key("wavelet.name", [&] {
    wavelet::validate(c.model.wavelet);
    return 0;
  });
  const std::size_t min_len = std::size_t{1} << c.model.wavelet.level;
  if (t.lookback < min_len || t.horizon < min_len) {
    throw Error(Errc::ConfigInvalid, "wavelet.level: lookback and horizon must be at least 2^level = " +
                                         std::to_string(min_len));
  }
  const auto& b = c.model.branch;
  if (b.patch_len == 0 || b.stride == 0 || b.width == 0) {
    throw Error(Errc::ConfigInvalid, "model.patch_len, model.stride and model.width must be positive");
  }
  if (!(c.model.revin_epsilon > 0.0)) throw Error(Errc::ConfigInvalid, "model.revin_eps must be positive");
  if (c.eval_batch == 0) throw Error(Errc::ConfigInvalid, "eval.batch_size must be positive");
  train::validate(c.train);
}

std::optional<std::size_t> declared_variates(const RunConfig& c) {
  if (c.data.source == "synthetic") return c.data.variates;
  if (auto k = data::known_dataset(c.data.name)) return k->variates;
  return std::nullopt;
}

std::string output_root(const RunConfig& c) {
  if (!c.output_root.empty()) return c.output_root;
  if (const char* env = std::getenv("BEAT_OUTPUT_ROOT"); env && *env) return env;
  return "runs";
}

std::string run_directory(const RunConfig& c) {
  std::string name = c.run_name;
  if (name.empty()) name = c.data.name + "-K" + std::to_string(c.model.task.horizon) + "-" + config_hash(c).substr(0, 8);
  return output_root(c) + "/" + name;
}

}  // namespace beat::config
