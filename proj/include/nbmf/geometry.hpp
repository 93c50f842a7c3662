#pragma once

#include <Eigen/Dense>
#include <vector>

namespace nbmf {

/// Fan-beam acquisition description. The scanner rotates counterclockwise;
/// at angle 0 the source sits at [0, sod, 0] and the flat detector is
/// centered on the -y axis at distance sdd from the source. Everything is a
/// 2-D slice (z = 0); 3-vectors are kept so a cone-beam extension is a data
/// change only.
struct ScanGeometry {
  double sod_mm = 0.0;       ///< source to rotation center
  double sdd_mm = 0.0;       ///< source to detector
  int n_det = 0;             ///< detector unit count
  double det_size_mm = 0.0;  ///< size of one detector unit
  /// Rotation angles per spectrum (angle_sets[k] holds the view angles of
  /// spectrum k, radians in [0, 2pi)).
  std::vector<std::vector<double>> angle_sets;

  int n_spectra() const { return static_cast<int>(angle_sets.size()); }
  /// Detector half-width h = n_det * det_size / 2.
  double half_width() const { return 0.5 * n_det * det_size_mm; }

  /// Throws ConfigError if any invariant is violated.
  void validate() const;
};

/// A single X-ray: L(t) = origin + t * direction, t in mm.
struct Ray {
  Eigen::Vector3d origin;
  Eigen::Vector3d direction;  ///< unit length
};

/// Uniform sampling of a ray chord: n_points midpoints of consecutive
/// step-sized cells starting at t_start. t_end is the end of the covered
/// span, t_start + n_points * step (>= the chord end it was built from).
struct SamplePlan {
  double t_start = 0.0;
  double t_end = 0.0;
  double step = 0.0;
  int n_points = 0;

  double t_at(int i) const { return t_start + (i + 0.5) * step; }
};

/// Radius of the field-of-view disk covered by every fan:
/// R = sod * h / sqrt(sdd^2 + h^2). Pure formula, no validation.
double fov_radius(double sod, double sdd, double half_width);

/// FOV radius of a validated geometry.
double fov_radius(const ScanGeometry& geom);

/// Counterclockwise rotation about +z.
Eigen::Matrix3d rotation_about_z(double phi);

/// Centered detector coordinate of a detector unit:
/// u = (det_index + 0.5 - n_det/2) * det_size.
double detector_u(const ScanGeometry& geom, int det_index);

/// Ray from the rotated source through detector unit det_index at view
/// angle phi. Throws ConfigError if det_index is out of range.
Ray ray_for(const ScanGeometry& geom, double phi, int det_index);

/// Midpoint sampling of the FOV chord [sod - R, sod + R] along a ray:
/// n = ceil(2R / step) points at t_start + (i + 1/2) * step.
/// Throws ConfigError if step <= 0.
SamplePlan chord_sample_plan(const ScanGeometry& geom, double step_mm);

/// The plan's sample positions as a 3 x n matrix of points (mm).
Eigen::Matrix3Xd sample_points(const Ray& ray, const SamplePlan& plan);

/// Convenience: chord_sample_plan + sample_points.
Eigen::Matrix3Xd sample_points(const Ray& ray, const ScanGeometry& geom, double step_mm);

/// Default sampling step: half a pixel of an n_grid-wide reconstruction of
/// the FOV square, i.e. (2R / n_grid) / 2 = R / n_grid.
double default_step(const ScanGeometry& geom, int n_grid);

/// count angles phi_j = (start_index + j * stride) * 2pi / of_total,
/// reduced into [0, 2pi). With of_total == count, stride == 1, start == 0
/// this is a full uniform rotation.
std::vector<double> make_angles(int count, int of_total, int start_index = 0, int stride = 1);

}  // namespace nbmf
