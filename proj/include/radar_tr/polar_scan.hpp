#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace radar_tr {

struct ScanIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One full radar sweep: an n_azimuth x n_range intensity image plus the
/// encoder angle and acquisition time of every azimuth.
struct PolarScan {
  int n_azimuth = 0;
  int n_range = 0;
  std::vector<float> intensities;       // row-major, [a * n_range + d]
  std::vector<double> encoder_angles;   // radians, one per azimuth
  std::vector<double> azimuth_times;    // seconds, one per azimuth
  double scan_time = 0.0;               // sweep reference timestamp (start)
  double gamma = 0.0;                   // meters per range bin (metadata)

  float at(int a, int d) const {
    return intensities[static_cast<size_t>(a) * n_range + d];
  }
  float& at(int a, int d) {
    return intensities[static_cast<size_t>(a) * n_range + d];
  }

  /// Checks array sizes, finite values, strictly increasing encoder angles
  /// (modulo 2*pi) and non-decreasing azimuth times. Throws ScanIoError.
  void validate() const;
};

// Binary scan file, little-endian:
//   magic "RTRS" | u32 version | u32 n_azimuth | u32 n_range
//   f64 gamma | f64 scan_time
//   n_azimuth * f64 encoder angles | n_azimuth * f64 azimuth times
//   n_azimuth * n_range * f32 intensities (row-major by azimuth)
inline constexpr uint32_t kScanFormatVersion = 1;

void write_polar_scan(const PolarScan& scan, std::ostream& out);
void write_polar_scan(const PolarScan& scan, const std::filesystem::path& path);

PolarScan read_polar_scan(std::istream& in);

/// Reads either the binary format or the CSV fixture format, decided by the
/// leading magic bytes.
PolarScan read_polar_scan(const std::filesystem::path& path);

// CSV fixture format (hand-written test inputs):
//   line 1: n_azimuth,n_range,gamma,scan_time
//   then one line per azimuth: encoder_angle,time,z_0,z_1,...,z_{n_range-1}
PolarScan read_polar_scan_csv(std::istream& in);

}  // namespace radar_tr
