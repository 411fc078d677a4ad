#include "modeswarm/femodel.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace modeswarm {

std::pair<Eigen::Matrix4d, Eigen::Matrix4d> element_matrices(double ei, double ell, double me) {
  if (!(ei > 0.0) || !(ell > 0.0) || !(me > 0.0))
    throw NonPositiveInput("element_matrices: ei, ell and me must all be > 0");
  const double l = ell;
  Eigen::Matrix4d k;
  k << 12, 6 * l, -12, 6 * l,
      6 * l, 4 * l * l, -6 * l, 2 * l * l,
      -12, -6 * l, 12, -6 * l,
      6 * l, 2 * l * l, -6 * l, 4 * l * l;
  k *= ei / (l * l * l);
  Eigen::Matrix4d m;
  m << 13.0 / 35, 11 * l / 210, 9.0 / 70, -13 * l / 420,
      11 * l / 210, l * l / 105, 13 * l / 420, -l * l / 140,
      9.0 / 70, 13 * l / 420, 13.0 / 35, -11 * l / 210,
      -13 * l / 420, -l * l / 140, -11 * l / 210, l * l / 105;
  m *= me;
  return {k, m};
}

ReducedSystem assemble(const WingConfig& config, Symmetry symmetry) {
  const int n = config.elements_per_halfspan;
  if (n < 1) throw NonPositiveInput("assemble: need at least one element");
  if (!(config.flexural_stiffness > 0.0) || !(config.halfspan_length > 0.0) ||
      !(config.halfwing_mass > 0.0))
    throw NonPositiveInput("assemble: EI, L and Mw must all be > 0");
  if (config.mass_ratio < 0.0) throw NonPositiveInput("assemble: R must be >= 0");

  const double ell = config.halfspan_length / n;
  const double me = config.halfwing_mass / n;
  auto [ke, m_elem] = element_matrices(config.flexural_stiffness, ell, me);

  const Eigen::Index full = 2 * (n + 1);
  Eigen::MatrixXd k_full = Eigen::MatrixXd::Zero(full, full);
  Eigen::MatrixXd m_full = Eigen::MatrixXd::Zero(full, full);
  for (int e = 0; e < n; ++e) {
    const Eigen::Index at = 2 * e;
    k_full.block<4, 4>(at, at) += ke;
    m_full.block<4, 4>(at, at) += m_elem;
  }
  // Fuselage half-mass on the root translation DOF.
  m_full(0, 0) += config.mass_ratio * config.halfwing_mass;

  const Eigen::Index drop = symmetry == Symmetry::symmetric ? 1 : 0;
  const Eigen::Index reduced = full - 1;
  Eigen::MatrixXd k_red(reduced, reduced), m_red(reduced, reduced);
  for (Eigen::Index i = 0, ri = 0; i < full; ++i) {
    if (i == drop) continue;
    for (Eigen::Index j = 0, rj = 0; j < full; ++j) {
      if (j == drop) continue;
      k_red(ri, rj) = k_full(i, j);
      m_red(ri, rj) = m_full(i, j);
      ++rj;
    }
    ++ri;
  }

  Eigen::VectorXd coords(n + 1);
  for (int i = 0; i <= n; ++i) coords(i) = config.halfspan_length * i / n;

  return ReducedSystem{SystemPair(SymMatrix(m_red), SymMatrix(k_red)), symmetry, reduced,
                       coords};
}

Eigen::VectorXd nondim_frequencies(const WingConfig& config, Symmetry symmetry,
                                   Eigen::Index k) {
  WingConfig unit = config;
  unit.flexural_stiffness = 1.0;
  unit.halfspan_length = 1.0;
  unit.halfwing_mass = 1.0;
  ReducedSystem r = assemble(unit, symmetry);
  if (k > r.dof_count)
    throw DimensionMismatch("nondim_frequencies: k exceeds DOF count " +
                            std::to_string(r.dof_count));
  Eigen::VectorXd lambda = generalized_eigenvalues(r.system.mass, r.system.stiffness, k);
  return lambda.cwiseMax(0.0).cwiseSqrt();
}

ModeShapes mode_shapes(const WingConfig& config, Symmetry symmetry, Eigen::Index k) {
  ReducedSystem r = assemble(config, symmetry);
  if (k > r.dof_count)
    throw DimensionMismatch("mode_shapes: k exceeds DOF count " + std::to_string(r.dof_count));
  Spectrum s = generalized_eig(r.system.mass, r.system.stiffness, k);

  const Eigen::Index nodes = r.node_coordinates.size();
  // Half-span translations. After the root deletion the reduced DOF layout
  // is [w0, w1, t1, w2, t2, ...] (symmetric) or [t0, w1, t1, w2, t2, ...]
  // (antisymmetric, root translation pinned to zero).
  Eigen::MatrixXd half(nodes, k);
  for (Eigen::Index mode = 0; mode < k; ++mode) {
    const Eigen::VectorXd& v = s.eigenvectors->col(mode);
    if (symmetry == Symmetry::symmetric) {
      half(0, mode) = v(0);
      for (Eigen::Index i = 1; i < nodes; ++i) half(i, mode) = v(2 * i - 1);
    } else {
      half(0, mode) = 0.0;
      for (Eigen::Index i = 1; i < nodes; ++i) half(i, mode) = v(2 * i - 1);
    }
  }

  ModeShapes out;
  out.coordinates.resize(2 * nodes - 1);
  out.shapes.resize(2 * nodes - 1, k);
  for (Eigen::Index i = 0; i < nodes; ++i) {
    out.coordinates(nodes - 1 - i) = -r.node_coordinates(i);
    out.coordinates(nodes - 1 + i) = r.node_coordinates(i);
  }
  const double mirror = symmetry == Symmetry::symmetric ? 1.0 : -1.0;
  for (Eigen::Index mode = 0; mode < k; ++mode) {
    for (Eigen::Index i = 0; i < nodes; ++i) {
      out.shapes(nodes - 1 + i, mode) = half(i, mode);
      out.shapes(nodes - 1 - i, mode) = mirror * half(i, mode);
    }
    Eigen::Index at = 0;
    out.shapes.col(mode).cwiseAbs().maxCoeff(&at);
    const double peak = out.shapes(at, mode);
    if (peak != 0.0) out.shapes.col(mode) /= peak;
  }
  return out;
}

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) throw NonPositiveInput(std::string(name) + " must be > 0");
}

}  // namespace

double wing_weight(const WeightInputs& in) {
  require_positive(in.wing_wetted_area, "wing_weight: S_w");
  require_positive(in.wing_fuel_weight, "wing_weight: W_fw");
  require_positive(in.aspect_ratio, "wing_weight: A");
  require_positive(in.dynamic_pressure, "wing_weight: q");
  require_positive(in.taper_ratio, "wing_weight: taper ratio");
  require_positive(in.thickness_to_chord, "wing_weight: t/c");
  require_positive(in.ultimate_load_factor, "wing_weight: N_z");
  require_positive(in.design_gross_weight, "wing_weight: W_dg");
  if (in.sweep_rad < 0.0 || in.sweep_rad >= M_PI / 2)
    throw NonPositiveInput("wing_weight: sweep must lie in [0, pi/2)");
  const double cos_sweep = std::cos(in.sweep_rad);
  return 0.036 * std::pow(in.wing_wetted_area, 0.758) *
         std::pow(in.wing_fuel_weight, 0.0035) *
         std::pow(in.aspect_ratio / (cos_sweep * cos_sweep), 0.6) *
         std::pow(in.dynamic_pressure, 0.006) * std::pow(in.taper_ratio, 0.04) *
         std::pow(100.0 * in.thickness_to_chord / cos_sweep, -0.3) *
         std::pow(in.ultimate_load_factor * in.design_gross_weight, 0.49);
}

double fuselage_weight(const WeightInputs& in) {
  require_positive(in.fuselage_wetted_area, "fuselage_weight: S_f");
  require_positive(in.tail_length, "fuselage_weight: L_t");
  require_positive(in.fineness_ratio, "fuselage_weight: L/D");
  require_positive(in.dynamic_pressure, "fuselage_weight: q");
  require_positive(in.ultimate_load_factor, "fuselage_weight: N_z");
  require_positive(in.design_gross_weight, "fuselage_weight: W_dg");
  if (in.pressurized_volume < 0.0 || in.cabin_pressure_delta < 0.0)
    throw NonPositiveInput("fuselage_weight: V_pr and P_delta must be >= 0");
  const double shell = 0.052 * std::pow(in.fuselage_wetted_area, 1.086) *
                       std::pow(in.ultimate_load_factor * in.design_gross_weight, 0.177) *
                       std::pow(in.tail_length, -0.051) *
                       std::pow(in.fineness_ratio, -0.072) *
                       std::pow(in.dynamic_pressure, 0.241);
  const double pressurization = 11.9 + in.pressurized_volume * in.cabin_pressure_delta;
  return shell + pressurization;
}

double mass_ratio(double wing_w, double fuselage_w) {
  if (!(wing_w > 0.0)) throw DivisionByZero("mass_ratio: wing weight must be > 0");
  return fuselage_w / wing_w;
}

WeightInputs b737_weight_inputs() {
  WeightInputs in;
  in.wing_wetted_area = 1133.90;
  in.wing_fuel_weight = 35640.0;
  in.aspect_ratio = 9.16;
  in.sweep_rad = 25.0 * M_PI / 180.0;
  in.dynamic_pressure = 234.44;
  in.thickness_to_chord = 0.08;
  in.ultimate_load_factor = 5.7;
  in.design_gross_weight = 109269.60;
  in.fuselage_wetted_area = 4104.80;
  in.tail_length = 15.89;
  in.cabin_pressure_delta = 8.00;
  // Not tabulated; derived from the airframe geometry (length 105.94 ft,
  // depth 12.33 ft) and a typical narrow-body taper.
  in.taper_ratio = 0.24;
  in.fineness_ratio = 105.94 / 12.33;
  in.pressurized_volume = M_PI * (12.33 / 2.0) * (12.33 / 2.0) * 105.94;
  return in;
}

WingConfig b737_wing_config(int elements_per_halfspan) {
  WingConfig config;
  config.elements_per_halfspan = elements_per_halfspan;
  config.mass_ratio = 1.35;
  return config;
}

}  // namespace modeswarm
