#pragma once

#include <vector>

#include <Eigen/Core>

#include "radar_tr/geometry.hpp"
#include "radar_tr/preprocessing.hpp"

namespace radar_tr {

/// Local surface summary: sample mean, unit normal and sample covariance of
/// a point-cloud neighborhood.
struct SurfacePoint {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  Eigen::Vector2d normal = Eigen::Vector2d::UnitX();
  Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();
  int n_samples = 0;
};

struct SurfacePointSet {
  std::vector<SurfacePoint> points;
  // Sensor pose at extraction time, expressed in the same frame as the
  // means. Identity right after extraction; composed on transform.
  Pose2 origin_pose;

  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// Grid-downsampled oriented surface points. Points are binned into cells of
/// size grid_res; per occupied cell, all cloud points within grid_res of the
/// cell centroid form one candidate neighborhood. Neighborhoods with at
/// least min_points samples emit a surface point whose normal is the
/// smallest-eigenvalue direction of the (regularized) sample covariance,
/// oriented toward the sensor origin. At most one surface point per cell.
SurfacePointSet compute_surface_points(const PointCloud& cloud,
                                       double grid_res, int min_points);

/// Rigidly transforms means (T p), normals (R n) and covariances (R S R^T);
/// the origin pose is composed with the transform.
SurfacePointSet transform_surface_points(const SurfacePointSet& set,
                                         const Pose2& pose);

}  // namespace radar_tr
