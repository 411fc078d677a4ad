#ifndef MODESWARM_FEMODEL_HPP
#define MODESWARM_FEMODEL_HPP

#include <Eigen/Core>

#include <utility>

#include "modeswarm/aiep.hpp"
#include "modeswarm/linalg.hpp"

namespace modeswarm {

/// Half-span Euler-Bernoulli wing: N equal beam elements of total length L
/// and uniformly distributed mass Mw, with a fuselage point mass R*Mw at
/// the root translation DOF. R is the fuselage-to-wing mass ratio M_F/M_w.
struct WingConfig {
  int elements_per_halfspan = 30;
  double flexural_stiffness = 1.0;  // EI
  double halfspan_length = 1.0;     // L
  double halfwing_mass = 1.0;       // Mw
  double mass_ratio = 0.0;          // R >= 0
};

/// Root boundary realised by DOF deletion: symmetric modes delete the root
/// rotation (guided root), antisymmetric modes delete the root translation
/// (pinned root).
enum class Symmetry { symmetric, antisymmetric };

/// Consistent Euler-Bernoulli beam element matrices (stiffness, mass) for
/// flexural stiffness ei, length ell and element mass me. DOF order per
/// node: transverse displacement w, then slope dw/dx.
std::pair<Eigen::Matrix4d, Eigen::Matrix4d> element_matrices(double ei, double ell, double me);

struct ReducedSystem {
  SystemPair system;
  Symmetry symmetry;
  Eigen::Index dof_count;             // 2*(nodes) - 1 after the root deletion
  Eigen::VectorXd node_coordinates;   // root..tip, length nodes
};

/// Assembles the half-span model and applies the root reduction. The mass
/// matrix is SPD; the symmetric stiffness keeps the rigid translation in
/// its nullspace.
ReducedSystem assemble(const WingConfig& config, Symmetry symmetry);

/// First k non-dimensional frequencies sqrt(lambda_i), ascending, from the
/// unit-scaled (EI = L = Mw = 1) model with the same element count and R.
/// Eigenvalues that round-off drives slightly negative count as zero.
Eigen::VectorXd nondim_frequencies(const WingConfig& config, Symmetry symmetry,
                                   Eigen::Index k);

/// Full-span nodal translations of the first k modes, mirrored across the
/// root (even reflection for symmetric, odd for antisymmetric) and scaled
/// to unit max amplitude with the largest-magnitude entry positive.
struct ModeShapes {
  Eigen::VectorXd coordinates;  // -L..L, 2*nodes - 1 points
  Eigen::MatrixXd shapes;       // (2*nodes - 1) x k
};

ModeShapes mode_shapes(const WingConfig& config, Symmetry symmetry, Eigen::Index k);

/// Inputs to the conceptual-design weight formulas, in the units of the
/// B737 parameter tables (ft, ft^2, lb, lb/ft^2).
struct WeightInputs {
  // Wing
  double wing_wetted_area = 0.0;      // S_w, ft^2
  double wing_fuel_weight = 0.0;      // W_fw, lb
  double aspect_ratio = 0.0;          // A
  double sweep_rad = 0.0;             // quarter-chord sweep, radians
  double dynamic_pressure = 0.0;      // q, lb/ft^2
  double taper_ratio = 0.0;
  double thickness_to_chord = 0.0;
  double ultimate_load_factor = 0.0;  // N_z
  double design_gross_weight = 0.0;   // W_dg, lb
  // Fuselage
  double fuselage_wetted_area = 0.0;  // S_f, ft^2
  double tail_length = 0.0;           // L_t, ft
  double fineness_ratio = 0.0;        // L/D
  double pressurized_volume = 0.0;    // V_pr, ft^3
  double cabin_pressure_delta = 0.0;  // P_delta
};

/// W_wing = 0.036 S_w^0.758 W_fw^0.0035 (A/cos^2 L)^0.6 q^0.006
///          taper^0.04 (100 t/c / cos L)^-0.3 (N_z W_dg)^0.49
double wing_weight(const WeightInputs& inputs);

/// W_fus = 0.052 S_f^1.086 (N_z W_dg)^0.177 L_t^-0.051 (L/D)^-0.072 q^0.241
///         + 11.9 + V_pr * P_delta
double fuselage_weight(const WeightInputs& inputs);

/// R = fuselage half-mass / wing half-mass (the halves cancel).
double mass_ratio(double wing_w, double fuselage_w);

/// B737-300 table values. Taper ratio, fineness ratio and pressurized
/// volume are not tabulated; the preset fills them from the airframe
/// geometry (taper 0.24, L/D = length/depth, V_pr = cylindrical cabin).
WeightInputs b737_weight_inputs();

/// Unit-scaled wing with the B737 mass ratio R = 1.35.
WingConfig b737_wing_config(int elements_per_halfspan = 30);

}  // namespace modeswarm

#endif  // MODESWARM_FEMODEL_HPP
