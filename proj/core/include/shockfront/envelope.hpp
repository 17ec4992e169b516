#ifndef SHOCKFRONT_ENVELOPE_HPP
#define SHOCKFRONT_ENVELOPE_HPP

#include <optional>
#include <span>
#include <vector>

#include "shockfront/gas.hpp"
#include "shockfront/geometry.hpp"

namespace shockfront {

enum class EnvelopeTermination {
    HitWallA,
    HitWallB,
    AtCircle,
    MaxAngle,
};

const char* to_string(EnvelopeTermination t);

struct EnvelopePoint {
    double phi = 0.0;
    double r = 0.0;
};

// Counterclockwise envelope r*(phi) in polar coordinates about the upstream
// velocity v_u.  r is strictly decreasing; the curve ends at the first stop
// event (wall A, wall B, the sonic circle r = c_u, or the angle budget).
struct EnvelopeCurve {
    Vec2 center;
    double c_u = 0.0;
    std::vector<EnvelopePoint> points;
    EnvelopeTermination termination = EnvelopeTermination::MaxAngle;
    Vec2 end_point;
};

enum class EnvelopeRhsMode {
    Explicit,  // closed form, gamma > 1 only
    Numeric,   // from the L_d = 1 shock construction
};

// Right-hand side f(r) > 0 of the envelope ODE dr*/dphi = -f(r*).
// Explicit mode evaluates the closed form for gamma > 1 in a formulation that
// stays accurate as r -> c_u (the naive form cancels catastrophically there).
// Numeric mode finds the beta > 0 shock normal with downstream L_d = 1 and
// converts its tangent direction: f = r tan(beta).
double envelope_rhs(const GasModel& gas, double r, double c_u, EnvelopeRhsMode mode);

struct EnvelopeStops {
    std::optional<Ray> wallA;
    std::optional<Ray> wallB;
    double max_angle = 6.283185307179586;
};

struct EnvelopeOptions {
    double rel_tol = 1e-10;
    EnvelopeStops stops;
};

// Integrate the envelope ODE counterclockwise from `start` about `center`,
// with adaptive embedded 4(5) stepping and event detection.  The step size is
// capped near the circle where f has a square-root singularity in its slope.
// Throws CircleDomainError if the start lies inside the circle.
EnvelopeCurve integrate_envelope(const GasModel& gas, Vec2 start, Vec2 center, double c_u,
                                 const EnvelopeOptions& opts);

enum class CurveComparison {
    Outside,  // shock strictly outside the envelope past the start
    Inside,
    Crosses,
};

const char* to_string(CurveComparison c);

// Compare a shock curve (phi, r) samples against an envelope over their common
// phi range, excluding the shared start.  Tolerance band 1e-9 on r.
CurveComparison compare_shock_envelope(std::span<const EnvelopePoint> shock_samples,
                                       const EnvelopeCurve& envelope);

}  // namespace shockfront

#endif
