#pragma once

#include <string_view>

namespace nsv {

// Verbosity is taken once from the NV_LOG environment variable
// (error|info|debug); default is info. Messages go to stderr.
enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level();
void log_message(LogLevel level, std::string_view message);

inline void log_error(std::string_view m) { log_message(LogLevel::error, m); }
inline void log_info(std::string_view m) { log_message(LogLevel::info, m); }
inline void log_debug(std::string_view m) { log_message(LogLevel::debug, m); }

}  // namespace nsv
