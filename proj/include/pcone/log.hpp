#pragma once

#include <string>

namespace pcone {

enum class LogLevel { Quiet = 0, Info = 1, Trace = 2 };

// Level comes from PSEUDOCONE_LOG in {quiet, info, trace}; default quiet.
LogLevel log_level();
void set_log_level(LogLevel lv);
void log_info(const std::string& msg);
void log_trace(const std::string& msg);

}  // namespace pcone
