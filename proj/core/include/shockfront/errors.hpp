#ifndef SHOCKFRONT_ERRORS_HPP
#define SHOCKFRONT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shockfront {

// Base class for all shockfront failures so callers can catch broadly.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument outside a function's mathematical domain (rho <= 0, ...).
struct DomainError : Error {
    using Error::Error;
};

// pi_inv argument at or below the vacuum bound -c_ref^2/(gamma-1).
struct VacuumError : Error {
    using Error::Error;
};

// Shock normal does not point downstream (z_u . n <= 0).
struct OrientationError : Error {
    using Error::Error;
};

// Upstream normal pseudo-Mach <= 1: no admissible compressive root.
struct NoShockError : Error {
    using Error::Error;
};

// No vertical incident shock with quiescent Q region exists for (gamma, M_I).
struct NoIncidentShockError : Error {
    using Error::Error;
};

// Upstream pseudo-Mach <= 1: no shock polar exists at this point.
struct SubsonicUpstreamError : Error {
    using Error::Error;
};

// Requested turning angle exceeds the critical angle tau_*.
struct NoReflectedShockError : Error {
    using Error::Error;
};

// Envelope radius at or inside the sonic circle r <= c_u.
struct CircleDomainError : Error {
    using Error::Error;
};

// Closed-form envelope RHS requested for gamma = 1.
struct UnsupportedBranchError : Error {
    using Error::Error;
};

// Shock line misses the downstream sonic circle.
struct NoSonicPointError : Error {
    using Error::Error;
};

// Curves to compare have disjoint parameter ranges.
struct ParameterRangeError : Error {
    using Error::Error;
};

// A root-bracketing sweep found no sign change.
struct BracketError : Error {
    using Error::Error;
};

// Degenerate configuration geometry (e.g. incident shock parallel to wall B).
struct GeometryError : Error {
    using Error::Error;
};

}  // namespace shockfront

#endif
