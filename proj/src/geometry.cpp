#include "nbmf/geometry.hpp"

#include <cmath>
#include <numbers>

#include "nbmf/errors.hpp"

namespace nbmf {

void ScanGeometry::validate() const {
  if (!(sod_mm > 0.0)) throw ConfigError("geometry: sod_mm must be > 0");
  if (!(sdd_mm > sod_mm)) throw ConfigError("geometry: sdd_mm must exceed sod_mm");
  if (n_det < 1) throw ConfigError("geometry: n_det must be >= 1");
  if (!(det_size_mm > 0.0)) throw ConfigError("geometry: det_size_mm must be > 0");
  if (angle_sets.empty()) throw ConfigError("geometry: at least one angle set required");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (const auto& set : angle_sets) {
    for (double a : set) {
      if (!(a >= 0.0 && a < two_pi)) throw ConfigError("geometry: angles must lie in [0, 2pi)");
    }
  }
}

double fov_radius(double sod, double sdd, double half_width) {
  return sod * half_width / std::sqrt(sdd * sdd + half_width * half_width);
}

double fov_radius(const ScanGeometry& geom) {
  geom.validate();
  return fov_radius(geom.sod_mm, geom.sdd_mm, geom.half_width());
}

Eigen::Matrix3d rotation_about_z(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  Eigen::Matrix3d m;
  m << c, -s, 0.0,
       s,  c, 0.0,
       0.0, 0.0, 1.0;
  return m;
}

double detector_u(const ScanGeometry& geom, int det_index) {
  return (det_index + 0.5 - geom.n_det / 2.0) * geom.det_size_mm;
}

Ray ray_for(const ScanGeometry& geom, double phi, int det_index) {
  if (det_index < 0 || det_index >= geom.n_det)
    throw ConfigError("ray_for: det_index out of range");
  const double u = detector_u(geom, det_index);
  const double v = 0.0;  // 2-D slice
  Eigen::Vector3d d(u, -geom.sdd_mm, v);
  d.normalize();
  const Eigen::Matrix3d rot = rotation_about_z(phi);
  return Ray{rot * Eigen::Vector3d(0.0, geom.sod_mm, 0.0), rot * d};
}

SamplePlan chord_sample_plan(const ScanGeometry& geom, double step_mm) {
  if (!(step_mm > 0.0)) throw ConfigError("sample plan: step must be > 0");
  const double r = fov_radius(geom);
  const double t_start = geom.sod_mm - r;
  const int n = std::max(1, static_cast<int>(std::ceil(2.0 * r / step_mm)));
  return SamplePlan{t_start, t_start + n * step_mm, step_mm, n};
}

Eigen::Matrix3Xd sample_points(const Ray& ray, const SamplePlan& plan) {
  Eigen::Matrix3Xd pts(3, plan.n_points);
  for (int i = 0; i < plan.n_points; ++i) {
    pts.col(i) = ray.origin + plan.t_at(i) * ray.direction;
  }
  return pts;
}

Eigen::Matrix3Xd sample_points(const Ray& ray, const ScanGeometry& geom, double step_mm) {
  return sample_points(ray, chord_sample_plan(geom, step_mm));
}

double default_step(const ScanGeometry& geom, int n_grid) {
  if (n_grid < 1) throw ConfigError("default_step: n_grid must be >= 1");
  return fov_radius(geom) / n_grid;
}

std::vector<double> make_angles(int count, int of_total, int start_index, int stride) {
  if (count < 1 || of_total < 1 || stride < 1 || start_index < 0)
    throw ConfigError("make_angles: count/of_total/stride must be positive, start_index >= 0");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> angles(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) {
    long idx = (start_index + static_cast<long>(j) * stride) % of_total;
    angles[static_cast<size_t>(j)] = two_pi * static_cast<double>(idx) / of_total;
  }
  return angles;
}

}  // namespace nbmf
