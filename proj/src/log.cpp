#include "pcone/log.hpp"

#include <cstdlib>
#include <iostream>

namespace pcone {

namespace {

LogLevel level_from_env() {
  const char* env = std::getenv("PSEUDOCONE_LOG");
  if (!env) return LogLevel::Quiet;
  std::string s(env);
  if (s == "trace") return LogLevel::Trace;
  if (s == "info") return LogLevel::Info;
  return LogLevel::Quiet;
}

LogLevel& level_ref() {
  static LogLevel lv = level_from_env();
  return lv;
}

}  // namespace

LogLevel log_level() { return level_ref(); }

void set_log_level(LogLevel lv) { level_ref() = lv; }

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::cerr << "[pcone] " << msg << "\n";
}

void log_trace(const std::string& msg) {
  if (log_level() >= LogLevel::Trace) std::cerr << "[pcone:trace] " << msg << "\n";
}

}  // namespace pcone
