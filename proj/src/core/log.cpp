#include "nsv/core/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace nsv {

namespace {

LogLevel parse_level() {
  const char* env = std::getenv("NV_LOG");
  if (env == nullptr) return LogLevel::info;
  const std::string v(env);
  if (v == "error") return LogLevel::error;
  if (v == "debug") return LogLevel::debug;
  if (v == "info") return LogLevel::info;
  std::cerr << "nsverify: warning: unrecognized NV_LOG value '" << v
            << "', using info\n";
  return LogLevel::info;
}

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

void log_message(LogLevel level, std::string_view message) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  const char* tag = level == LogLevel::error  ? "error"
                    : level == LogLevel::info ? "info"
                                              : "debug";
  std::lock_guard<std::mutex> lock(log_mutex());
  std::cerr << "nsverify: " << tag << ": " << message << '\n';
}

}  // namespace nsv
