#ifndef SHOCKFRONT_GAS_HPP
#define SHOCKFRONT_GAS_HPP

#include "shockfront/errors.hpp"

namespace shockfront {

// Polytropic (gamma-law) gas, nondimensionalized so that the reference state
// has density rho_ref and sound speed c_ref.  All thermodynamic closures used
// by the shock and envelope machinery live here.
//
// pi(rho) is the enthalpy-like integral of p'(rho)/rho with pi(rho_ref) = 0.
// Isentropic flow only; there is no temperature or entropy field.
struct GasModel {
    double gamma;
    double rho_ref;
    double c_ref;

    explicit GasModel(double gamma_, double rho_ref_ = 1.0, double c_ref_ = 1.0);

    // Treat the gas as isothermal (gamma = 1 log branch) below this width.
    static constexpr double isothermal_eps = 1e-12;

    bool isothermal() const { return gamma - 1.0 < isothermal_eps; }
};

// pi(rho) = c_ref^2 ((rho/rho_ref)^(gamma-1) - 1)/(gamma-1), log branch at gamma = 1.
double pi(const GasModel& gas, double rho);

// Inverse of pi; throws VacuumError at or below the vacuum bound.
double pi_inv(const GasModel& gas, double q);

// Largest lower bound of pi's range: -c_ref^2/(gamma-1), -inf for gamma = 1.
double vacuum_bound(const GasModel& gas);

// c(rho) = c_ref (rho/rho_ref)^((gamma-1)/2).
double sound_speed(const GasModel& gas, double rho);

// p(rho) = c_ref^2 rho_ref / gamma (rho/rho_ref)^gamma.
double pressure(const GasModel& gas, double rho);

}  // namespace shockfront

#endif
