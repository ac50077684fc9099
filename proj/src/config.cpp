#include "radar_tr/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "radar_tr/log.hpp"

namespace radar_tr {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double d = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for '" + key + "': " + value);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const int i = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer value for '" + key + "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("invalid boolean value for '" + key + "': " + value);
}

}  // namespace

void PipelineConfig::validate() const {
  if (k < 1) throw ConfigError("k must be >= 1");
  if (z_min < 0.0) throw ConfigError("z_min must be >= 0");
  if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
  if (!(grid_res > 0.0)) throw ConfigError("grid_res must be > 0");
  if (min_points < 3) throw ConfigError("min_points must be >= 3");
  if (s_o < 1) throw ConfigError("s_o must be >= 1");
  if (s_m < 1 || s_m % 2 == 0) throw ConfigError("s_m must be odd and >= 1");
  if (s_l < 0) throw ConfigError("s_l must be >= 0");
  if (!(kf_dist > 0.0)) throw ConfigError("kf_dist must be > 0");
  if (!(kf_rot > 0.0)) throw ConfigError("kf_rot must be > 0");
  if (!(cauchy_c > 0.0)) throw ConfigError("cauchy_c must be > 0");
  if (max_iters < 1) throw ConfigError("max_iters must be >= 1");
  if (!(conv_tol > 0.0)) throw ConfigError("conv_tol must be > 0");
  if (s_l > s_m) {
    log_warn("s_l > s_m: live frames outnumber map frames, localization may "
             "lean on drifting odometry");
  }
}

void PipelineConfig::set(const std::string& key, const std::string& value) {
  if (key == "k") k = parse_int(key, value);
  else if (key == "z_min") z_min = parse_double(key, value);
  else if (key == "gamma") gamma = parse_double(key, value);
  else if (key == "beta") beta = parse_double(key, value);
  else if (key == "dr_r") dr_r = parse_double(key, value);
  else if (key == "grid_res") grid_res = parse_double(key, value);
  else if (key == "min_points") min_points = parse_int(key, value);
  else if (key == "s_o") s_o = parse_int(key, value);
  else if (key == "s_m") s_m = parse_int(key, value);
  else if (key == "s_l") s_l = parse_int(key, value);
  else if (key == "kf_dist") kf_dist = parse_double(key, value);
  else if (key == "kf_rot") kf_rot = parse_double(key, value);
  else if (key == "cauchy_c") cauchy_c = parse_double(key, value);
  else if (key == "max_iters") max_iters = parse_int(key, value);
  else if (key == "conv_tol") conv_tol = parse_double(key, value);
  else if (key == "use_doppler") use_doppler = parse_bool(key, value);
  else if (key == "use_range_offset") use_range_offset = parse_bool(key, value);
  else if (key == "use_encoder_angles") use_encoder_angles = parse_bool(key, value);
  else if (key == "use_motion_compensation") use_motion_compensation = parse_bool(key, value);
  else throw ConfigError("unknown configuration key: " + key);
}

std::string PipelineConfig::serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << "k=" << k << '\n'
      << "z_min=" << z_min << '\n'
      << "gamma=" << gamma << '\n'
      << "beta=" << beta << '\n'
      << "dr_r=" << dr_r << '\n'
      << "grid_res=" << grid_res << '\n'
      << "min_points=" << min_points << '\n'
      << "s_o=" << s_o << '\n'
      << "s_m=" << s_m << '\n'
      << "s_l=" << s_l << '\n'
      << "kf_dist=" << kf_dist << '\n'
      << "kf_rot=" << kf_rot << '\n'
      << "cauchy_c=" << cauchy_c << '\n'
      << "max_iters=" << max_iters << '\n'
      << "conv_tol=" << conv_tol << '\n'
      << "use_doppler=" << (use_doppler ? "true" : "false") << '\n'
      << "use_range_offset=" << (use_range_offset ? "true" : "false") << '\n'
      << "use_encoder_angles=" << (use_encoder_angles ? "true" : "false") << '\n'
      << "use_motion_compensation=" << (use_motion_compensation ? "true" : "false") << '\n';
  return out.str();
}

PipelineConfig PipelineConfig::from_string(const std::string& text) {
  PipelineConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key=value, got '" + line + "'");
    }
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

}  // namespace radar_tr
