#pragma once

#include <string_view>

namespace radar_tr {

// Verbosity is read once from the RADAR_TR_LOG_LEVEL environment variable:
// 0 = warnings only (default), 1 = info, 2 = debug.
int log_level();

void log_warn(std::string_view msg);
void log_info(std::string_view msg);
void log_debug(std::string_view msg);

}  // namespace radar_tr
