#ifndef SHOCKFRONT_SHOCK_HPP
#define SHOCKFRONT_SHOCK_HPP

#include <utility>

#include "shockfront/gas.hpp"
#include "shockfront/geometry.hpp"

namespace shockfront {

// Constant state: density and velocity.
struct FlowState {
    double rho = 1.0;
    Vec2 v;
};

// State seen from a point xi of the similarity plane: pseudo-velocity
// z = v - xi and pseudo-Mach number L = |z|/c.
struct PseudoState {
    Vec2 xi;
    Vec2 z;
    double L = 0.0;
};

PseudoState make_pseudo(const GasModel& gas, const FlowState& state, Vec2 xi);

// One point of a shock: oriented unit normal n (pointing downstream),
// tangent t = n rotated +90 degrees, upstream/downstream states and the
// normal/tangential pseudo-velocity decomposition.
struct ShockSolution {
    Vec2 xi;
    Vec2 n;
    Vec2 t;
    FlowState upstream;
    FlowState downstream;
    double zn_u = 0.0;
    double zn_d = 0.0;
    double zt = 0.0;     // tangential component, shared across the shock
    double sigma = 0.0;  // shock speed xi . n
    bool vanishing = false;
};

// Two roots of the jump system coincide (normal-sonic upstream) below this
// relative distance; the solution is then flagged `vanishing`.
inline constexpr double kVanishTol = 1e-10;

// Solve the self-similar potential-flow Rankine-Hugoniot conditions at xi for
// the downstream state, given the upstream state and the downstream-oriented
// unit normal n.  Picks the compressive root zn_d < zn_u.
//
// Throws OrientationError if (v_u - xi).n <= 0, NoShockError if the upstream
// normal pseudo-Mach is < 1.
ShockSolution downstream_state(const GasModel& gas, const FlowState& upstream, Vec2 xi,
                               Vec2 n);

// Signed mass-flux and Bernoulli residuals of a shock solution, no filtering:
//   mass      = rho_u zn_u - rho_d zn_d
//   bernoulli = pi(rho_d) - pi(rho_u) - (zn_u^2 - zn_d^2)/2
std::pair<double, double> shock_residual(const GasModel& gas, const ShockSolution& sol);

// Downstream pseudo-Mach |v_d - xi| / c(rho_d).
double downstream_pseudo_mach(const GasModel& gas, const ShockSolution& sol);

// Vertical incident shock at x = xi_s separating the quiescent Q region
// (upstream, v_Q = 0) from the reference I region (downstream, rho_I = rho_ref,
// v_I = (M_I c_ref, 0)).  xi_s is both the shock position and its speed.
struct IncidentShock {
    double xi_s = 0.0;
    double rho_Q = 0.0;
    double c_Q = 0.0;
};

// Solve for the vertical incident shock of Mach number M_I.  Throws
// NoIncidentShockError when the Q density would need to be at or below vacuum
// (the region above the dashed curve of the feasibility map).
IncidentShock vertical_incident_shock(const GasModel& gas, double M_I);

// Core of the incident-shock family: for a normal velocity jump J across the
// shock (upstream at rest relative to the downstream by J along the normal),
// solve for the downstream normal pseudo-speed w = zn_d and the upstream
// density.  zn_u = J + w.
struct IncidentStrength {
    double w = 0.0;
    double rho_Q = 0.0;
};
IncidentStrength solve_incident_strength(const GasModel& gas, double jump_speed);

}  // namespace shockfront

#endif
