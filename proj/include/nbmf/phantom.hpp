#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "nbmf/geometry.hpp"

namespace nbmf {

/// One rotated ellipse carrying a full density vector (g/cm^3 per material).
struct Ellipse {
  Eigen::Vector2d center_mm;
  Eigen::Vector2d semi_axes_mm;
  double rotation_rad = 0.0;
  Eigen::VectorXd densities;

  bool contains(const Eigen::Vector2d& x) const;
};

/// Analytic multi-material object: ordered ellipses with override semantics
/// (a point takes the densities of the LAST ellipse containing it).
struct Phantom {
  std::vector<Ellipse> ellipses;
  int n_materials = 0;

  void validate() const;  ///< throws ConfigError
};

/// Per-material n x n density grids over the FOV square [-R, R]^2.
/// Row r maps to decreasing y (image convention), column c to increasing x;
/// pixel (r, c) is the value at the pixel center.
struct DensityImage {
  int n_materials = 0;
  int resolution = 0;
  double pixel_size_mm = 0.0;
  std::vector<Eigen::MatrixXd> data;  ///< one resolution x resolution matrix per material

  /// x of column c / y of row r at pixel centers.
  double x_of(int c) const { return (c + 0.5) * pixel_size_mm - 0.5 * resolution * pixel_size_mm; }
  double y_of(int r) const { return 0.5 * resolution * pixel_size_mm - (r + 0.5) * pixel_size_mm; }
};

/// Density vector at a point: last containing ellipse wins, zero if none.
Eigen::VectorXd eval_phantom(const Phantom& ph, const Eigen::Vector2d& x);

/// Batch evaluation over 2 x n points, returns M x n.
Eigen::MatrixXd eval_phantom(const Phantom& ph, const Eigen::Matrix2Xd& points);

/// Thorax-like two-material slice (water body, low-density lungs, bone spine
/// and ribs), sized for the reference fan-beam FOV (R ~ 132 mm). M must be 2.
Phantom build_thorax_like_phantom(int n_materials = 2);

/// Uniform n x n pixel-center sampling of the phantom over the FOV square.
DensityImage rasterize(const Phantom& ph, const ScanGeometry& geom, int n);

/// Reads a phantom from a JSON file: {"n_materials": M, "ellipses": [
///   {"center_mm": [x,y], "semi_axes_mm": [a,b], "rotation_deg": d,
///    "densities": [...]}, ...]}.
Phantom load_phantom(const std::string& path);

}  // namespace nbmf
