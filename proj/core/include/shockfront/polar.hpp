#ifndef SHOCKFRONT_POLAR_HPP
#define SHOCKFRONT_POLAR_HPP

#include <optional>
#include <vector>

#include "shockfront/shock.hpp"

namespace shockfront {

// One sample of the shock polar.  beta is the counterclockwise angle from the
// upstream pseudo-velocity z_u to the shock normal n; turning is the signed
// angle from z_u to z_d (negative for beta > 0).
struct PolarPoint {
    double beta = 0.0;
    Vec2 n;
    FlowState downstream;
    double L_d = 0.0;
    double turning = 0.0;
};

// Shock polar of a fixed upstream state over the normal angle beta, sampled on
// [-beta_vanish, beta_vanish], plus its critical and sonic angles.
struct PolarCurve {
    FlowState upstream;            // at xi = 0, so v doubles as z_u
    std::vector<PolarPoint> samples;
    double beta_vanish = 0.0;      // arccos(c_u/|z_u|)
    double tau_star = 0.0;         // max |turning| (detachment angle)
    double beta_star = 0.0;
    std::optional<double> tau_sonic;   // |turning| where L_d = 1
    std::optional<double> beta_sonic;
};

// Sample the polar for upstream (rho_u, z_u); throws SubsonicUpstreamError if
// |z_u| <= c_u.  n_samples >= 64.
PolarCurve polar_curve(const GasModel& gas, double rho_u, Vec2 z_u, int n_samples);

// beta-derivatives of the downstream velocity at fixed xi:
//   d(v_d)/d(beta) . n = zt (d zn_d / d zn_u - 1)
//   d(v_d)/d(beta) . t = zn_d - zn_u
// with d zn_d/d zn_u from implicit differentiation of the jump conditions.
// Returns (0, 0) exactly for a vanishing shock.
struct PolarDerivatives {
    double dv_dbeta_n = 0.0;
    double dv_dbeta_t = 0.0;
};
PolarDerivatives polar_derivatives(const GasModel& gas, const ShockSolution& sol);

// Which way the shock turns the flow: Right = clockwise (beta > 0 branch).
enum class TurnSide {
    Left,
    Right,
};

// The two shocks that turn z_u by the angle tau >= 0: the weak root (larger
// |beta|, larger L_d) and the strong root.  They coincide at tau = tau_star.
// Throws NoReflectedShockError for tau > tau_star.
struct TurningSolutions {
    ShockSolution weak;
    ShockSolution strong;
    double beta_weak = 0.0;
    double beta_strong = 0.0;
};
TurningSolutions solve_turning(const GasModel& gas, double rho_u, Vec2 z_u, double tau,
                               TurnSide side);

// Vanishing angle arccos(c_u/|z_u|) of the polar.
double polar_beta_vanish(const GasModel& gas, double rho_u, Vec2 z_u);

}  // namespace shockfront

#endif
