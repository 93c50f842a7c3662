#include "nbmf/spectra.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "nbmf/errors.hpp"

namespace nbmf {

int EnergyGrid::n_bins() const {
  return static_cast<int>(std::llround((e_max_kev - e_min_kev) / delta_e_kev));
}

Eigen::VectorXd EnergyGrid::energies() const {
  const int n = n_bins();
  Eigen::VectorXd e(n);
  for (int i = 0; i < n; ++i) e[i] = energy(i);
  return e;
}

void EnergyGrid::validate() const {
  if (!(e_min_kev > 0.0)) throw ConfigError("energy grid: e_min must be > 0");
  if (!(delta_e_kev > 0.0)) throw ConfigError("energy grid: delta_e must be > 0");
  const double bins = (e_max_kev - e_min_kev) / delta_e_kev;
  if (bins < 1.0 || std::abs(bins - std::llround(bins)) > 1e-9)
    throw ConfigError("energy grid: (e_max - e_min) must be a positive multiple of delta_e");
}

double loglog_interp(const Eigen::VectorXd& energies, const Eigen::VectorXd& values, double e) {
  const auto n = energies.size();
  if (e < energies[0] || e > energies[n - 1])
    throw ConfigError("attenuation table does not cover requested energy " + std::to_string(e));
  // find the bracketing segment
  Eigen::Index hi = 1;
  while (hi < n - 1 && energies[hi] < e) ++hi;
  const Eigen::Index lo = hi - 1;
  const double x0 = std::log(energies[lo]), x1 = std::log(energies[hi]);
  const double y0 = std::log(values[lo]), y1 = std::log(values[hi]);
  const double t = (std::log(e) - x0) / (x1 - x0);
  return std::exp(y0 + t * (y1 - y0));
}

namespace {

struct TwoColumnTable {
  Eigen::VectorXd energies;
  Eigen::VectorXd values;
};

TwoColumnTable read_two_column_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open table file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty table file: " + path);
  // header line required: energy_kev,value
  std::vector<double> es, vs;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    double e, v;
    char comma;
    if (!(ss >> e >> comma >> v) || comma != ',')
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected `energy,value`");
    if (!es.empty() && e <= es.back())
      throw ConfigError(path + ":" + std::to_string(line_no) + ": energies must be strictly increasing");
    es.push_back(e);
    vs.push_back(v);
  }
  if (es.size() < 2) throw ConfigError(path + ": need at least two rows");
  TwoColumnTable t;
  t.energies = Eigen::Map<Eigen::VectorXd>(es.data(), static_cast<Eigen::Index>(es.size()));
  t.values = Eigen::Map<Eigen::VectorXd>(vs.data(), static_cast<Eigen::Index>(vs.size()));
  return t;
}

}  // namespace

MaterialTable load_attenuation_table(const std::string& path, const EnergyGrid& grid,
                                     const std::string& name) {
  grid.validate();
  const TwoColumnTable t = read_two_column_csv(path);
  if ((t.values.array() <= 0.0).any())
    throw ConfigError(path + ": attenuation values must be positive for log-log resampling");
  const int n = grid.n_bins();
  MaterialTable out;
  out.grid = grid;
  out.name = name.empty() ? path : name;
  out.theta.resize(n);
  for (int i = 0; i < n; ++i) out.theta[i] = loglog_interp(t.energies, t.values, grid.energy(i));
  return out;
}

SpectrumTable load_spectrum_table(const std::string& path, const EnergyGrid& grid,
                                  const std::string& label) {
  grid.validate();
  const TwoColumnTable t = read_two_column_csv(path);
  if ((t.values.array() < 0.0).any())
    throw ConfigError(path + ": spectrum weights must be nonnegative");
  const int n = grid.n_bins();
  Eigen::VectorXd raw(n);
  for (int i = 0; i < n; ++i) {
    const double e = grid.energy(i);
    if (e < t.energies[0] || e > t.energies[t.energies.size() - 1]) {
      raw[i] = 0.0;  // outside the tabulated support
      continue;
    }
    Eigen::Index hi = 1;
    while (hi < t.energies.size() - 1 && t.energies[hi] < e) ++hi;
    const Eigen::Index lo = hi - 1;
    const double u = (e - t.energies[lo]) / (t.energies[hi] - t.energies[lo]);
    raw[i] = t.values[lo] + u * (t.values[hi] - t.values[lo]);
  }
  return normalize_spectrum(raw, grid, label.empty() ? path : label);
}

SpectrumTable normalize_spectrum(const Eigen::VectorXd& raw, const EnergyGrid& grid,
                                 const std::string& label) {
  grid.validate();
  if (raw.size() != grid.n_bins())
    throw ConfigError("normalize_spectrum: raw weight count does not match grid");
  if ((raw.array() < 0.0).any()) throw ConfigError("normalize_spectrum: negative weights");
  const double integral = raw.sum() * grid.delta_e_kev;
  if (!(integral > 0.0)) throw ConfigError("normalize_spectrum: spectrum is all zero");
  return SpectrumTable{grid, raw / integral, label};
}

Eigen::VectorXd synth_bremsstrahlung(double kvp_kev, const MaterialTable& filter,
                                     double filter_density_g_cm3, double filter_thickness_cm,
                                     const EnergyGrid& grid) {
  grid.validate();
  if (filter_thickness_cm < 0.0) throw ConfigError("synth_bremsstrahlung: negative filter thickness");
  if (kvp_kev > grid.e_max_kev) throw ConfigError("synth_bremsstrahlung: kvp above grid e_max");
  if (kvp_kev <= grid.e_min_kev) throw ConfigError("synth_bremsstrahlung: kvp at or below grid e_min");
  if (filter_thickness_cm > 0.0 && !(filter.grid == grid))
    throw ConfigError("synth_bremsstrahlung: filter table on a different grid");
  const int n = grid.n_bins();
  Eigen::VectorXd raw(n);
  for (int i = 0; i < n; ++i) {
    const double e = grid.energy(i);
    double w = e < kvp_kev ? std::max(0.0, e * (kvp_kev - e)) : 0.0;
    if (w > 0.0 && filter_thickness_cm > 0.0)
      w *= std::exp(-filter.theta[i] * filter_density_g_cm3 * filter_thickness_cm);
    raw[i] = w;
  }
  return raw;
}

Eigen::VectorXd synth_bremsstrahlung(double kvp_kev, const EnergyGrid& grid) {
  return synth_bremsstrahlung(kvp_kev, MaterialTable{grid, Eigen::VectorXd::Zero(grid.n_bins()), ""},
                              0.0, 0.0, grid);
}

}  // namespace nbmf
