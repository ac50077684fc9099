#include "radar_tr/preprocessing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace radar_tr {
namespace {

// Top-k of one azimuth row. Candidate order: higher intensity first, then
// smaller range index. Selected detections are emitted in range order.
void filter_row(const PolarScan& scan, int a, int k, double z_min,
                std::vector<int>& scratch, std::vector<PolarDetection>& out) {
  const float* row = scan.intensities.data() + static_cast<size_t>(a) * scan.n_range;
  scratch.clear();
  for (int d = 0; d < scan.n_range; ++d) {
    if (static_cast<double>(row[d]) > z_min) scratch.push_back(d);
  }
  const auto stronger = [row](int lhs, int rhs) {
    if (row[lhs] != row[rhs]) return row[lhs] > row[rhs];
    return lhs < rhs;
  };
  if (static_cast<int>(scratch.size()) > k) {
    std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end(),
                     stronger);
    scratch.resize(k);
  }
  std::sort(scratch.begin(), scratch.end());
  for (int d : scratch) {
    out.push_back({a, d, row[d], scan.encoder_angles[a], scan.azimuth_times[a]});
  }
}

}  // namespace

std::vector<PolarDetection> k_strongest_filter(const PolarScan& scan, int k,
                                               double z_min, int n_threads) {
  std::vector<PolarDetection> detections;
  detections.reserve(static_cast<size_t>(scan.n_azimuth) * std::min(k, 4));
  if (n_threads <= 1) {
    std::vector<int> scratch;
    for (int a = 0; a < scan.n_azimuth; ++a)
      filter_row(scan, a, k, z_min, scratch, detections);
    return detections;
  }

  // Per-row results are independent; compute in parallel, then concatenate
  // in azimuth order so the output matches the serial path exactly.
  std::vector<std::vector<PolarDetection>> per_row(scan.n_azimuth);
  std::vector<std::thread> workers;
  std::atomic<int> next_row{0};
  for (int t = 0; t < n_threads; ++t) {
    workers.emplace_back([&] {
      std::vector<int> scratch;
      for (int a = next_row.fetch_add(1); a < scan.n_azimuth;
           a = next_row.fetch_add(1)) {
        filter_row(scan, a, k, z_min, scratch, per_row[a]);
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& row : per_row)
    detections.insert(detections.end(), row.begin(), row.end());
  return detections;
}

double doppler_offset(const Velocity& v, double theta_a, double beta) {
  return beta * (v.vx * std::cos(theta_a) + v.vy * std::sin(theta_a));
}

PointCloud polar_to_cartesian(std::span<const PolarDetection> detections,
                              const Velocity& v, const PipelineConfig& cfg) {
  PointCloud cloud;
  cloud.reserve(detections.size());
  const double range_offset = cfg.use_range_offset ? cfg.dr_r : 0.0;
  const double beta = cfg.use_doppler ? cfg.beta : 0.0;
  for (const auto& det : detections) {
    const double r = det.range_index * cfg.gamma +
                     doppler_offset(v, det.theta_a, beta) + range_offset;
    if (r <= 0.0) continue;
    cloud.push_back({r * std::cos(det.theta_a), r * std::sin(det.theta_a)},
                    det.time, det.intensity);
  }
  return cloud;
}

PointCloud motion_compensate(const PointCloud& cloud, const Velocity& v,
                             double ref_time) {
  PointCloud out;
  out.reserve(cloud.size());
  for (size_t i = 0; i < cloud.size(); ++i) {
    const double dt = cloud.times[i] - ref_time;
    const Pose2 shift = se2_exp(v, dt);
    out.push_back(transform_point(shift, cloud.points[i]), cloud.times[i],
                  cloud.intensities[i]);
  }
  return out;
}

PointCloud preprocess(const PolarScan& scan, const Velocity& v,
                      const PipelineConfig& cfg, int n_threads) {
  auto detections = k_strongest_filter(scan, cfg.k, cfg.z_min, n_threads);
  if (!cfg.use_encoder_angles) {
    for (auto& det : detections)
      det.theta_a = 2.0 * kPi * det.azimuth_index / scan.n_azimuth;
  }
  PointCloud cloud = polar_to_cartesian(detections, v, cfg);
  if (cfg.use_motion_compensation)
    cloud = motion_compensate(cloud, v, scan.scan_time);
  return cloud;
}

}  // namespace radar_tr
