#pragma once

#include <iostream>
#include <string>
#include <string_view>

namespace affembed::detail {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

inline LogLevel& log_level() {
    static LogLevel level = LogLevel::Info;
    return level;
}

// All diagnostics go to stderr; stdout is reserved for data.
inline void log(LogLevel level, std::string_view component, std::string_view message) {
    if (level > log_level()) return;
    static constexpr const char* names[] = {"error", "warn", "info", "debug"};
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << component << ": " << message
              << "\n";
}

inline void log_error(std::string_view c, std::string_view m) { log(LogLevel::Error, c, m); }
inline void log_warn(std::string_view c, std::string_view m) { log(LogLevel::Warn, c, m); }
inline void log_info(std::string_view c, std::string_view m) { log(LogLevel::Info, c, m); }
inline void log_debug(std::string_view c, std::string_view m) { log(LogLevel::Debug, c, m); }

}  // namespace affembed::detail
