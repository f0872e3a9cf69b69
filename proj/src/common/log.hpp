#pragma once

#include <functional>
#include <string>

namespace beat::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3 };

using Sink = std::function<void(Level, const std::string&)>;

// Replaces the process-wide sink. An empty sink restores the stderr default.
void set_sink(Sink sink);
void set_threshold(Level level);

void write(Level level, const std::string& message);
inline void debug(const std::string& m) { write(Level::Debug, m); }
inline void info(const std::string& m) { write(Level::Info, m); }
inline void warn(const std::string& m) { write(Level::Warn, m); }

}  // namespace beat::log
