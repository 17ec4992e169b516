#ifndef SHOCKFRONT_REFLECTION_HPP
#define SHOCKFRONT_REFLECTION_HPP

#include <optional>
#include <span>
#include <vector>

#include "shockfront/envelope.hpp"
#include "shockfront/polar.hpp"
#include "shockfront/shock.hpp"

namespace shockfront {

// Local regular-reflection configuration in the corner frame: wall A is the
// negative x-axis, wall B the ray at polar angle theta, rho_I = c_I = 1 and
// v_I = (M_I, 0).  beta_Q = 0 denotes a vertical incident shock.
struct RRConfiguration {
    GasModel gas;
    double M_I = 0.0;
    double beta_Q = 0.0;
    double theta = 0.0;
    Ray wallA;
    Ray wallB;
    Vec2 v_I;
    IncidentShock incident;
    Vec2 xi_R;
    ShockSolution reflected;  // weak branch
    double L_R = 0.0;         // downstream pseudo-Mach at xi_R
    Vec2 xi_C0;               // sonic point on the reflected shock nearer xi_R
    struct Verdicts {
        bool sonic_ok = false;     // L_R > 1
        bool vInB_ok = false;      // |v_I . n_B| <= c_I
        bool envelope_ok = false;  // envelope from xi_C0 reaches wall A first
    } verdicts;
    EnvelopeCurve envelope;
};

struct TransitionAngles {
    double theta_d = 0.0;               // detachment
    double theta_s = 0.0;               // sonic
    std::optional<double> theta_N;      // von Neumann; absent for weak incidents
};

enum class FeasibilityStatus {
    NoIncidentShock,
    EnvelopeFails,
    Feasible,
};

const char* to_string(FeasibilityStatus s);

struct FeasibilityRecord {
    double gamma = 0.0;
    double M_I = 0.0;
    FeasibilityStatus status = FeasibilityStatus::NoIncidentShock;
    std::optional<double> theta_s;
};

// Assemble the full local configuration for (gas, M_I, beta_Q, theta) and
// evaluate the three hypotheses.  Throws SubsonicUpstreamError when xi_R lies
// inside the I sonic circle, NoReflectedShockError past detachment, and
// propagates NoIncidentShockError.
RRConfiguration build_local_rr(const GasModel& gas, double M_I, double beta_Q,
                               double theta);

// The two intersections of a straight shock's line with the circle of radius
// c_d sqrt(1-epsilon) about the downstream velocity (the points where
// L_d = sqrt(1-epsilon)).  Ordered by the tangent parameter along sol.t.
struct SonicPoints {
    Vec2 xi_L;
    Vec2 xi_R_pt;
};
SonicPoints sonic_points(const GasModel& gas, const ShockSolution& sol, double epsilon);

// Unique shock position (0, eta) with downstream normal (sin beta, -cos beta)
// and upstream v_u = (0, v_u_y), v_u_y < 0, such that the downstream velocity
// is horizontal (v^y_d = 0).
struct VdZeroResult {
    double eta_star = 0.0;
    FlowState downstream;
};
VdZeroResult vdzero_shock(const GasModel& gas, double v_u_y, double rho_u, double beta);

// Transition angles theta_d <= theta_s (and theta_N when the Mach-stem
// pressure can match the reflected-shock pressure) for a vertical-or-tilted
// incident shock.  Roots located by a 1e-3 rad bracketing sweep + bisection.
TransitionAngles transition_angles(const GasModel& gas, double M_I, double beta_Q,
                                   double theta_tol = 1e-10);

// Sonic angle only (the root of L_R(theta) = 1); cheaper than full
// transition_angles when theta_d/theta_N are not needed.
double theta_sonic(const GasModel& gas, double M_I, double beta_Q,
                   double theta_tol = 1e-10);

struct EnvelopeCheck {
    bool ok = false;
    EnvelopeTermination termination = EnvelopeTermination::MaxAngle;
    Vec2 end_point;
    EnvelopeCurve curve;
};

// Integrate the envelope from xi_C0 counterclockwise about v_I and test
// Theorem-style condition 3: the envelope must reach wall A before wall B or
// the sonic circle.
EnvelopeCheck check_envelope_condition(const RRConfiguration& config);

// Classify each (gamma, M_I) grid cell at theta = theta_s.  Output is row-major
// over (gamma, M_I) regardless of execution order.
std::vector<FeasibilityRecord> feasibility_scan(std::span<const double> gammas,
                                                std::span<const double> mis);

FeasibilityRecord classify_feasibility(double gamma, double M_I);

}  // namespace shockfront

#endif
