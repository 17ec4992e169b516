#include "shockfront/gas.hpp"

#include <cmath>
#include <limits>

namespace shockfront {

GasModel::GasModel(double gamma_, double rho_ref_, double c_ref_)
    : gamma(gamma_), rho_ref(rho_ref_), c_ref(c_ref_) {
    if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
        throw DomainError("GasModel: gamma must be >= 1");
    }
    if (!(rho_ref > 0.0) || !std::isfinite(rho_ref)) {
        throw DomainError("GasModel: rho_ref must be > 0");
    }
    if (!(c_ref > 0.0) || !std::isfinite(c_ref)) {
        throw DomainError("GasModel: c_ref must be > 0");
    }
}

double pi(const GasModel& gas, double rho) {
    if (!(rho > 0.0)) {
        throw DomainError("pi: rho must be > 0");
    }
    const double c2 = gas.c_ref * gas.c_ref;
    const double lr = std::log(rho / gas.rho_ref);
    if (gas.isothermal()) {
        return c2 * lr;
    }
    const double gm1 = gas.gamma - 1.0;
    // expm1 keeps the value continuous as gamma -> 1.
    return c2 * std::expm1(gm1 * lr) / gm1;
}

double vacuum_bound(const GasModel& gas) {
    if (gas.isothermal()) {
        return -std::numeric_limits<double>::infinity();
    }
    return -gas.c_ref * gas.c_ref / (gas.gamma - 1.0);
}

double pi_inv(const GasModel& gas, double q) {
    const double c2 = gas.c_ref * gas.c_ref;
    if (gas.isothermal()) {
        return gas.rho_ref * std::exp(q / c2);
    }
    const double gm1 = gas.gamma - 1.0;
    const double base = gm1 * q / c2;  // (rho/rho_ref)^(gamma-1) - 1
    if (base <= -1.0) {
        throw VacuumError("pi_inv: argument at or below the vacuum bound");
    }
    return gas.rho_ref * std::exp(std::log1p(base) / gm1);
}

double sound_speed(const GasModel& gas, double rho) {
    if (!(rho > 0.0)) {
        throw DomainError("sound_speed: rho must be > 0");
    }
    if (gas.isothermal()) {
        return gas.c_ref;
    }
    return gas.c_ref * std::exp(0.5 * (gas.gamma - 1.0) * std::log(rho / gas.rho_ref));
}

double pressure(const GasModel& gas, double rho) {
    if (!(rho > 0.0)) {
        throw DomainError("pressure: rho must be > 0");
    }
    const double c2 = gas.c_ref * gas.c_ref;
    return c2 * gas.rho_ref / gas.gamma * std::pow(rho / gas.rho_ref, gas.gamma);
}

}  // namespace shockfront
