#include "nbmf/phantom.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "nbmf/errors.hpp"

namespace nbmf {

bool Ellipse::contains(const Eigen::Vector2d& x) const {
  const double c = std::cos(rotation_rad), s = std::sin(rotation_rad);
  const Eigen::Vector2d d = x - center_mm;
  const double xl = c * d.x() + s * d.y();
  const double yl = -s * d.x() + c * d.y();
  const double qa = xl / semi_axes_mm.x();
  const double qb = yl / semi_axes_mm.y();
  return qa * qa + qb * qb <= 1.0;
}

void Phantom::validate() const {
  if (n_materials < 1) throw ConfigError("phantom: n_materials must be >= 1");
  for (const auto& e : ellipses) {
    if (!(e.semi_axes_mm.x() > 0.0 && e.semi_axes_mm.y() > 0.0))
      throw ConfigError("phantom: semi axes must be positive");
    if (e.densities.size() != n_materials)
      throw ConfigError("phantom: ellipse density vector length != n_materials");
    if ((e.densities.array() < 0.0).any())
      throw ConfigError("phantom: densities must be nonnegative");
  }
}

Eigen::VectorXd eval_phantom(const Phantom& ph, const Eigen::Vector2d& x) {
  for (auto it = ph.ellipses.rbegin(); it != ph.ellipses.rend(); ++it) {
    if (it->contains(x)) return it->densities;
  }
  return Eigen::VectorXd::Zero(ph.n_materials);
}

Eigen::MatrixXd eval_phantom(const Phantom& ph, const Eigen::Matrix2Xd& points) {
  Eigen::MatrixXd out(ph.n_materials, points.cols());
  for (Eigen::Index i = 0; i < points.cols(); ++i) out.col(i) = eval_phantom(ph, points.col(i));
  return out;
}

Phantom build_thorax_like_phantom(int n_materials) {
  if (n_materials != 2)
    throw ConfigError("build_thorax_like_phantom: shipped phantom is two-material (water, bone)");
  constexpr double deg = std::numbers::pi / 180.0;
  auto ell = [](double cx, double cy, double a, double b, double rot_rad, double water,
                double bone) {
    Eigen::VectorXd d(2);
    d << water, bone;
    return Ellipse{{cx, cy}, {a, b}, rot_rad, d};
  };
  Phantom ph;
  ph.n_materials = 2;
  ph.ellipses = {
      ell(0, 0, 110, 85, 0, 1.0, 0.0),            // water body
      ell(-48, 8, 38, 55, 10 * deg, 0.30, 0.0),   // left lung
      ell(48, 8, 38, 55, -10 * deg, 0.30, 0.0),   // right lung
      ell(0, -58, 16, 13, 0, 0.0, 1.92),          // spine
      ell(0, -58, 7, 5, 0, 1.0, 0.0),             // spinal canal
      ell(-84, -30, 7, 14, 25 * deg, 0.0, 1.92),  // ribs
      ell(84, -30, 7, 14, -25 * deg, 0.0, 1.92),
      ell(-95, 5, 6, 13, 5 * deg, 0.0, 1.92),
      ell(95, 5, 6, 13, -5 * deg, 0.0, 1.92),
      ell(-75, 48, 7, 12, -35 * deg, 0.0, 1.92),
      ell(75, 48, 7, 12, 35 * deg, 0.0, 1.92),
      ell(0, 62, 14, 9, 0, 0.05, 0.0),            // trachea, near air
  };
  return ph;
}

DensityImage rasterize(const Phantom& ph, const ScanGeometry& geom, int n) {
  if (n < 1) throw ConfigError("rasterize: resolution must be >= 1");
  ph.validate();
  const double r = fov_radius(geom);
  DensityImage img;
  img.n_materials = ph.n_materials;
  img.resolution = n;
  img.pixel_size_mm = 2.0 * r / n;
  img.data.assign(static_cast<size_t>(ph.n_materials), Eigen::MatrixXd(n, n));
  for (int row = 0; row < n; ++row) {
    const double y = img.y_of(row);
    for (int col = 0; col < n; ++col) {
      const Eigen::VectorXd d = eval_phantom(ph, {img.x_of(col), y});
      for (int m = 0; m < ph.n_materials; ++m) img.data[static_cast<size_t>(m)](row, col) = d[m];
    }
  }
  return img;
}

Phantom load_phantom(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open phantom file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  Phantom ph;
  try {
    ph.n_materials = j.at("n_materials").get<int>();
    for (const auto& je : j.at("ellipses")) {
      Ellipse e;
      e.center_mm = {je.at("center_mm").at(0).get<double>(), je.at("center_mm").at(1).get<double>()};
      e.semi_axes_mm = {je.at("semi_axes_mm").at(0).get<double>(),
                        je.at("semi_axes_mm").at(1).get<double>()};
      e.rotation_rad = je.value("rotation_deg", 0.0) * std::numbers::pi / 180.0;
      const auto& dens = je.at("densities");
      e.densities.resize(static_cast<Eigen::Index>(dens.size()));
      for (size_t i = 0; i < dens.size(); ++i)
        e.densities[static_cast<Eigen::Index>(i)] = dens.at(i).get<double>();
      ph.ellipses.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  ph.validate();
  return ph;
}

}  // namespace nbmf
