#include "radar_tr/polar_scan.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "radar_tr/geometry.hpp"

static_assert(std::endian::native == std::endian::little,
              "scan format assumes a little-endian host");

namespace radar_tr {
namespace {

constexpr char kScanMagic[4] = {'R', 'T', 'R', 'S'};

template <typename T>
void write_raw(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_raw(std::istream& in) {
  T value;
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw ScanIoError("truncated scan file");
  return value;
}

}  // namespace

void PolarScan::validate() const {
  if (n_azimuth <= 0 || n_range <= 0)
    throw ScanIoError("scan dimensions must be positive");
  const size_t expected = static_cast<size_t>(n_azimuth) * n_range;
  if (intensities.size() != expected ||
      encoder_angles.size() != static_cast<size_t>(n_azimuth) ||
      azimuth_times.size() != static_cast<size_t>(n_azimuth))
    throw ScanIoError("scan array sizes do not match dimensions");
  for (int a = 0; a < n_azimuth; ++a) {
    if (!std::isfinite(encoder_angles[a]) || !std::isfinite(azimuth_times[a]))
      throw ScanIoError("non-finite encoder angle or azimuth time");
    if (a > 0) {
      // Angles advance monotonically around the sweep; compare unwrapped.
      const double step =
          std::fmod(encoder_angles[a] - encoder_angles[a - 1] + 4.0 * kPi,
                    2.0 * kPi);
      if (step <= 0.0)
        throw ScanIoError("encoder angles not strictly increasing");
      if (azimuth_times[a] < azimuth_times[a - 1])
        throw ScanIoError("azimuth times decrease within sweep");
    }
  }
}

void write_polar_scan(const PolarScan& scan, std::ostream& out) {
  out.write(kScanMagic, 4);
  write_raw(out, kScanFormatVersion);
  write_raw(out, static_cast<uint32_t>(scan.n_azimuth));
  write_raw(out, static_cast<uint32_t>(scan.n_range));
  write_raw(out, scan.gamma);
  write_raw(out, scan.scan_time);
  out.write(reinterpret_cast<const char*>(scan.encoder_angles.data()),
            static_cast<std::streamsize>(scan.encoder_angles.size() * sizeof(double)));
  out.write(reinterpret_cast<const char*>(scan.azimuth_times.data()),
            static_cast<std::streamsize>(scan.azimuth_times.size() * sizeof(double)));
  out.write(reinterpret_cast<const char*>(scan.intensities.data()),
            static_cast<std::streamsize>(scan.intensities.size() * sizeof(float)));
  if (!out) throw ScanIoError("failed to write scan");
}

void write_polar_scan(const PolarScan& scan, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ScanIoError("cannot open for writing: " + path.string());
  write_polar_scan(scan, out);
}

PolarScan read_polar_scan(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kScanMagic, 4) != 0)
    throw ScanIoError("not a radar scan file (bad magic)");
  const auto version = read_raw<uint32_t>(in);
  if (version != kScanFormatVersion)
    throw ScanIoError("unsupported scan format version " + std::to_string(version));
  PolarScan scan;
  scan.n_azimuth = static_cast<int>(read_raw<uint32_t>(in));
  scan.n_range = static_cast<int>(read_raw<uint32_t>(in));
  if (scan.n_azimuth <= 0 || scan.n_range <= 0 ||
      static_cast<int64_t>(scan.n_azimuth) * scan.n_range > (1LL << 31))
    throw ScanIoError("implausible scan dimensions");
  scan.gamma = read_raw<double>(in);
  scan.scan_time = read_raw<double>(in);
  scan.encoder_angles.resize(scan.n_azimuth);
  scan.azimuth_times.resize(scan.n_azimuth);
  scan.intensities.resize(static_cast<size_t>(scan.n_azimuth) * scan.n_range);
  in.read(reinterpret_cast<char*>(scan.encoder_angles.data()),
          static_cast<std::streamsize>(scan.encoder_angles.size() * sizeof(double)));
  in.read(reinterpret_cast<char*>(scan.azimuth_times.data()),
          static_cast<std::streamsize>(scan.azimuth_times.size() * sizeof(double)));
  in.read(reinterpret_cast<char*>(scan.intensities.data()),
          static_cast<std::streamsize>(scan.intensities.size() * sizeof(float)));
  if (!in) throw ScanIoError("truncated scan file");
  scan.validate();
  return scan;
}

PolarScan read_polar_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ScanIoError("empty scan CSV");
  PolarScan scan;
  {
    std::istringstream header(line);
    char comma;
    if (!(header >> scan.n_azimuth >> comma >> scan.n_range >> comma >>
          scan.gamma >> comma >> scan.scan_time))
      throw ScanIoError("malformed scan CSV header: " + line);
  }
  if (scan.n_azimuth <= 0 || scan.n_range <= 0)
    throw ScanIoError("implausible scan dimensions in CSV header");
  scan.intensities.resize(static_cast<size_t>(scan.n_azimuth) * scan.n_range);
  scan.encoder_angles.resize(scan.n_azimuth);
  scan.azimuth_times.resize(scan.n_azimuth);
  for (int a = 0; a < scan.n_azimuth; ++a) {
    if (!std::getline(in, line))
      throw ScanIoError("scan CSV truncated at azimuth " + std::to_string(a));
    std::istringstream row(line);
    std::string field;
    auto next = [&](int col) {
      if (!std::getline(row, field, ','))
        throw ScanIoError("scan CSV row " + std::to_string(a + 2) +
                          ": missing column " + std::to_string(col));
      return std::stod(field);
    };
    scan.encoder_angles[a] = next(0);
    scan.azimuth_times[a] = next(1);
    for (int d = 0; d < scan.n_range; ++d)
      scan.at(a, d) = static_cast<float>(next(d + 2));
  }
  scan.validate();
  return scan;
}

PolarScan read_polar_scan(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScanIoError("cannot open scan file: " + path.string());
  char magic[4] = {};
  in.read(magic, 4);
  in.clear();
  in.seekg(0);
  if (std::memcmp(magic, kScanMagic, 4) == 0) return read_polar_scan(in);
  return read_polar_scan_csv(in);
}

}  // namespace radar_tr
