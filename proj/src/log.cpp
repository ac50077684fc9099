#include "radar_tr/log.hpp"

#include <cstdlib>
#include <iostream>

namespace radar_tr {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("RADAR_TR_LOG_LEVEL");
    if (env == nullptr) return 0;
    return std::atoi(env);
  }();
  return level;
}

void log_warn(std::string_view msg) {
  std::cerr << "[radar_tr] warning: " << msg << '\n';
}

void log_info(std::string_view msg) {
  if (log_level() >= 1) std::cerr << "[radar_tr] " << msg << '\n';
}

void log_debug(std::string_view msg) {
  if (log_level() >= 2) std::cerr << "[radar_tr] debug: " << msg << '\n';
}

}  // namespace radar_tr
