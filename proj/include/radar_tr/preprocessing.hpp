#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "radar_tr/config.hpp"
#include "radar_tr/geometry.hpp"
#include "radar_tr/polar_scan.hpp"

namespace radar_tr {

/// One reflection kept by the k-strongest filter.
struct PolarDetection {
  int azimuth_index = 0;
  int range_index = 0;
  float intensity = 0.0f;
  double theta_a = 0.0;  // encoder angle of the azimuth
  double time = 0.0;     // acquisition time of the azimuth
};

/// Cartesian detections in the sensor frame, with per-point timestamps.
struct PointCloud {
  std::vector<Eigen::Vector2d> points;
  std::vector<double> times;
  std::vector<float> intensities;

  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  void reserve(size_t n) {
    points.reserve(n);
    times.reserve(n);
    intensities.reserve(n);
  }
  void push_back(const Eigen::Vector2d& p, double t, float z) {
    points.push_back(p);
    times.push_back(t);
    intensities.push_back(z);
  }
};

/// Keeps, per azimuth, the k returns of highest intensity that exceed z_min.
/// Ties in intensity are broken toward the smaller range index; detections of
/// one azimuth are emitted in range order. n_threads > 1 splits the work by
/// azimuth rows and produces identical output.
std::vector<PolarDetection> k_strongest_filter(const PolarScan& scan, int k,
                                               double z_min, int n_threads = 1);

/// Velocity-dependent range correction: beta * (vx cos + vy sin)(theta_a).
double doppler_offset(const Velocity& v, double theta_a, double beta);

/// Maps detections to Cartesian points at range d*gamma + doppler + dr_r.
/// Detections whose corrected range is <= 0 are dropped. The Doppler and
/// static-offset terms honor the config ablation switches.
PointCloud polar_to_cartesian(std::span<const PolarDetection> detections,
                              const Velocity& v, const PipelineConfig& cfg);

/// Re-expresses every point in the sensor frame at ref_time under a constant
/// body twist: each point observed at t is transformed by exp(v * (t - ref)).
/// A zero velocity returns the input bit-exactly.
PointCloud motion_compensate(const PointCloud& cloud, const Velocity& v,
                             double ref_time);

/// Full chain: k-strongest -> polar-to-Cartesian -> motion compensation,
/// with ref_time = scan.scan_time. Stages follow cfg's ablation switches;
/// use_encoder_angles = false substitutes uniform angles 2*pi*a/N_a.
PointCloud preprocess(const PolarScan& scan, const Velocity& v,
                      const PipelineConfig& cfg, int n_threads = 1);

}  // namespace radar_tr
