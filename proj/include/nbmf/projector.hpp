#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "nbmf/geometry.hpp"
#include "nbmf/phantom.hpp"
#include "nbmf/spectra.hpp"

namespace nbmf {

/// Anything that maps spatial points to per-material densities: the analytic
/// phantom (ground truth) and the neural field (reconstruction) both fit.
/// Implementations must be safe to call concurrently for read-only eval.
class MaterialField {
public:
  virtual ~MaterialField() = default;
  virtual int n_materials() const = 0;
  /// Densities (g/cm^3) at 3 x n points (mm); returns M x n.
  virtual Eigen::MatrixXd eval(const Eigen::Matrix3Xd& points) const = 0;
};

/// Phantom as a MaterialField (z is ignored, 2-D slice).
class PhantomField final : public MaterialField {
public:
  explicit PhantomField(Phantom ph) : phantom_(std::move(ph)) { phantom_.validate(); }
  int n_materials() const override { return phantom_.n_materials; }
  Eigen::MatrixXd eval(const Eigen::Matrix3Xd& points) const override;
  const Phantom& phantom() const { return phantom_; }

private:
  Phantom phantom_;
};

/// Polychromatic projections p_{k,L}, one n_angles x n_det block per spectrum.
struct Sinogram {
  std::vector<Eigen::MatrixXd> data;        ///< data[k](angle_index, det_index)
  std::vector<std::string> spectrum_labels;  ///< one per spectrum

  int n_spectra() const { return static_cast<int>(data.size()); }
};

/// Per-material path integrals g_m = sum_i f_m(L(t_i)) * step (g/cm^2);
/// the mm -> cm conversion of the step happens here.
Eigen::VectorXd line_integrals(const MaterialField& field, const Ray& ray, const SamplePlan& plan);

/// Discrete polychromatic projection
///   p = -ln sum_E S_E * delta_E * exp(-sum_m theta_m(E) g_m),
/// evaluated with a max-shift so thick paths cannot underflow to -ln(0).
/// Throws NumericalError on non-finite g, ConfigError on grid mismatch.
double poly_projection(const SpectrumTable& spectrum, const std::vector<MaterialTable>& materials,
                       const Eigen::VectorXd& g);

/// Spectrum-weighted mean attenuation dp/dg_m at path integrals g:
///   (sum_E S_E dE theta_m(E) e^{-a_E}) / (sum_E S_E dE e^{-a_E}).
/// Shared by the projection and its hand-derived gradient.
Eigen::VectorXd poly_projection_grad(const SpectrumTable& spectrum,
                                     const std::vector<MaterialTable>& materials,
                                     const Eigen::VectorXd& g);

/// Full simulation: entry (k, a, j) is the projection of
/// ray_for(geom, angle_sets[k][a], j) sampled with `step_mm`.
/// Rays are evaluated in parallel; output assembly is indexed, so the result
/// is identical to serial evaluation.
Sinogram simulate_sinogram(const MaterialField& field, const ScanGeometry& geom,
                           const std::vector<SpectrumTable>& spectra,
                           const std::vector<MaterialTable>& materials, double step_mm);

/// Replaces each projection p with -ln(max(n,1)/i0), n ~ Poisson(i0 * e^-p).
/// Every entry draws from its own counter-based stream derived from (seed,
/// spectrum, angle, detector), so parallel and serial sampling agree. If
/// n_clamped is given it receives the number of zero-count clamps.
Sinogram add_poisson_noise(const Sinogram& sino, double i0, std::uint64_t seed,
                           long long* n_clamped = nullptr);

/// Writes `<stem>_k<k>.f32` (row-major float32 LE, angles x det) plus a JSON
/// sidecar `<stem>_k<k>.json` per spectrum describing geometry, angles, the
/// sampling step and optional noise parameters.
void save_sinogram(const std::string& stem, const Sinogram& sino, const ScanGeometry& geom,
                   double step_mm, double noise_i0 = 0.0, std::uint64_t noise_seed = 0,
                   long long n_clamped = 0);

/// Loads what save_sinogram wrote, restoring geometry/step from the sidecars.
/// Values are exact promotions of the stored float32 data.
Sinogram load_sinogram(const std::string& stem, ScanGeometry* geom_out = nullptr,
                       double* step_out = nullptr);

/// Small-sinogram CSV export: one file per spectrum, row per angle.
void save_sinogram_csv(const std::string& stem, const Sinogram& sino);

}  // namespace nbmf
