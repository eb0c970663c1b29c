#include "core/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace syncur {

static LogLevel parse_threshold() {
  const char* env = std::getenv("SYNCUR_LOG");
  if (!env) return LogLevel::Warn;
  if (!std::strcmp(env, "debug")) return LogLevel::Debug;
  if (!std::strcmp(env, "info")) return LogLevel::Info;
  if (!std::strcmp(env, "warn")) return LogLevel::Warn;
  if (!std::strcmp(env, "error")) return LogLevel::Error;
  if (!std::strcmp(env, "off")) return LogLevel::Off;
  return LogLevel::Warn;
}

LogLevel log_threshold() {
  static const LogLevel threshold = parse_threshold();
  return threshold;
}

void log_message(LogLevel level, const std::string& message) {
  if (level < log_threshold()) return;
  static const char* names[] = {"debug", "info", "warn", "error"};
  std::fprintf(stderr, "[syncur %s] %s\n",
               names[static_cast<int>(level)], message.c_str());
}

}  // namespace syncur
