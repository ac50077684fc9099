#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "radar_tr/geometry.hpp"

namespace radar_tr {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pipeline parameters shared by preprocessing, registration, odometry and
/// localization. Loadable from a plain-text key=value file; command-line
/// flags override file values.
struct PipelineConfig {
  // Polar-scan filtering.
  int k = 40;           // strongest returns kept per azimuth
  double z_min = 60.0;  // intensity threshold

  // Range model.
  double gamma = 0.0596;  // meters per range bin
  double beta = 0.0;      // Doppler correction factor (sensor dependent)
  double dr_r = -0.31;    // static range offset, meters

  // Surface-point extraction.
  double grid_res = 3.0;  // grid cell size, meters
  int min_points = 6;     // minimum samples per surface point

  // Registration window sizes.
  int s_o = 3;  // odometry submap keyframes
  int s_m = 5;  // map frames during localization (odd)
  int s_l = 3;  // live frames during localization (0 disables the window)

  // Keyframe trigger.
  double kf_dist = 1.5;                      // meters
  double kf_rot = 5.0 * kPi / 180.0;         // radians

  // Solver.
  double cauchy_c = 0.1;   // robust loss scale
  int max_iters = 50;
  double conv_tol = 1e-7;  // step-norm convergence threshold

  // Preprocessing stages can be disabled independently for ablation runs.
  bool use_doppler = true;
  bool use_range_offset = true;
  bool use_encoder_angles = true;
  bool use_motion_compensation = true;

  /// Correspondence gating radius.
  double r_max() const { return 2.0 * grid_res; }

  /// Throws ConfigError when any invariant is violated. Warns (stderr) when
  /// s_l exceeds s_m, which tends to over-weight drifting live frames.
  void validate() const;

  /// Applies one key=value assignment. Throws ConfigError on unknown keys or
  /// unparsable values.
  void set(const std::string& key, const std::string& value);

  /// Canonical key=value serialization (deterministic ordering).
  std::string serialize() const;

  static PipelineConfig from_string(const std::string& text);
  static PipelineConfig load(const std::filesystem::path& path);
};

}  // namespace radar_tr
