#include "common/log.hpp"

#include <iostream>
#include <mutex>

namespace beat::log {
namespace {

std::mutex g_mutex;
Sink g_sink;
Level g_threshold = Level::Info;

const char* tag(Level level) {
  switch (level) {
    case Level::Debug: return "debug";
    case Level::Info: return "info";
    case Level::Warn: return "warn";
    case Level::Error: return "error";
  }
  return "?";
}

}  // namespace

void set_sink(Sink sink) {
  std::lock_guard lock(g_mutex);
  g_sink = std::move(sink);
}

void set_threshold(Level level) {
  std::lock_guard lock(g_mutex);
  g_threshold = level;
}

void write(Level level, const std::string& message) {
  std::lock_guard lock(g_mutex);
  if (level < g_threshold) return;
  if (g_sink) {
    g_sink(level, message);
  } else {
    std::cerr << "[beat " << tag(level) << "] " << message << '\n';
  }
}

}  // namespace beat::log
