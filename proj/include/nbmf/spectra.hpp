#pragma once

#include <Eigen/Dense>
#include <string>

namespace nbmf {

/// Uniform energy grid of n_bins intervals over [e_min, e_max], sampled at
/// the left edge of each interval: energy(i) = e_min + i * delta_e. With the
/// default 1 keV grid this samples at integer keV.
struct EnergyGrid {
  double e_min_kev = 10.0;
  double e_max_kev = 150.0;
  double delta_e_kev = 1.0;

  int n_bins() const;
  double energy(int i) const { return e_min_kev + i * delta_e_kev; }
  Eigen::VectorXd energies() const;
  bool operator==(const EnergyGrid&) const = default;

  void validate() const;  ///< throws ConfigError
};

/// Normalized equivalent spectrum on a grid: sum(weights) * delta_e == 1.
struct SpectrumTable {
  EnergyGrid grid;
  Eigen::VectorXd weights;
  std::string label;

  /// Fluence-weighted mean energy (keV).
  double mean_energy() const { return weights.dot(grid.energies()) * grid.delta_e_kev; }
};

/// Mass attenuation curve of one base material on a grid (cm^2/g).
struct MaterialTable {
  EnergyGrid grid;
  Eigen::VectorXd theta;
  std::string name;
};

/// Log-log linear interpolation of a strictly increasing (energy, value > 0)
/// table; the standard resampling rule for attenuation data.
double loglog_interp(const Eigen::VectorXd& energies, const Eigen::VectorXd& values, double e);

/// Reads a two-column CSV (header `energy_kev,value`, ascending energies)
/// and resamples it onto `grid` by log-log interpolation.
/// Throws ConfigError on parse errors or if the table does not cover the grid.
MaterialTable load_attenuation_table(const std::string& path, const EnergyGrid& grid,
                                     const std::string& name = "");

/// Same CSV format, linear interpolation, then normalized; for tabulated
/// spectra replacing a synthesized one.
SpectrumTable load_spectrum_table(const std::string& path, const EnergyGrid& grid,
                                  const std::string& label = "");

/// Scales raw per-bin weights so that sum(w) * delta_e == 1.
/// Throws ConfigError if raw has negative entries or is all zero.
SpectrumTable normalize_spectrum(const Eigen::VectorXd& raw, const EnergyGrid& grid,
                                 const std::string& label = "");

/// Kramers-style bremsstrahlung shape with exponential filtration:
/// raw(E) = max(0, E*(kvp - E)) * exp(-theta_filter(E) * rho * thickness)
/// for E < kvp, else 0. Returns the raw (unnormalized) weights.
/// Passing filter_thickness_cm == 0 skips the filter entirely.
Eigen::VectorXd synth_bremsstrahlung(double kvp_kev, const MaterialTable& filter,
                                     double filter_density_g_cm3, double filter_thickness_cm,
                                     const EnergyGrid& grid);

/// Unfiltered variant.
Eigen::VectorXd synth_bremsstrahlung(double kvp_kev, const EnergyGrid& grid);

}  // namespace nbmf
