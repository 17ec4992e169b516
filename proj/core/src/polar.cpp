#include "shockfront/polar.hpp"

#include <cmath>

#include "shockfront/roots.hpp"

namespace shockfront {

namespace {

// Polars are sampled at xi = 0 with v_u = z_u; translation invariance of the
// jump conditions makes the choice irrelevant.
ShockSolution polar_shock(const GasModel& gas, double rho_u, Vec2 z_u, double beta) {
    const Vec2 n = rotated(z_u / z_u.norm(), beta);
    return downstream_state(gas, FlowState{rho_u, z_u}, Vec2{0.0, 0.0}, n);
}

PolarPoint to_polar_point(const GasModel& gas, const ShockSolution& sol, Vec2 z_u,
                          double beta) {
    PolarPoint p;
    p.beta = beta;
    p.n = sol.n;
    p.downstream = sol.downstream;
    p.L_d = downstream_pseudo_mach(gas, sol);
    p.turning = signed_angle(z_u, sol.downstream.v - sol.xi);
    return p;
}

}  // namespace

double polar_beta_vanish(const GasModel& gas, double rho_u, Vec2 z_u) {
    const double c_u = sound_speed(gas, rho_u);
    const double speed = z_u.norm();
    if (!(speed > c_u)) {
        throw SubsonicUpstreamError("polar: upstream pseudo-Mach <= 1");
    }
    return std::acos(c_u / speed);
}

PolarCurve polar_curve(const GasModel& gas, double rho_u, Vec2 z_u, int n_samples) {
    if (n_samples < 64) {
        throw DomainError("polar_curve: n_samples must be >= 64");
    }
    const double bv = polar_beta_vanish(gas, rho_u, z_u);

    PolarCurve curve;
    curve.upstream = FlowState{rho_u, z_u};
    curve.beta_vanish = bv;
    curve.samples.reserve(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double beta = -bv + 2.0 * bv * static_cast<double>(i) / (n_samples - 1);
        const ShockSolution sol = polar_shock(gas, rho_u, z_u, beta);
        curve.samples.push_back(to_polar_point(gas, sol, z_u, beta));
    }

    const auto turn_mag = [&](double beta) {
        return std::abs(to_polar_point(gas, polar_shock(gas, rho_u, z_u, beta), z_u, beta)
                            .turning);
    };
    curve.beta_star = golden_section_max(turn_mag, 0.0, bv, 1e-12);
    curve.tau_star = turn_mag(curve.beta_star);

    // L_d - 1 is strictly increasing in beta; the sonic angle sits on the weak
    // side of beta_star.  A polar with L_d < 1 everywhere has no sonic point.
    const auto sonic_fn = [&](double beta) {
        return to_polar_point(gas, polar_shock(gas, rho_u, z_u, beta), z_u, beta).L_d - 1.0;
    };
    const double s0 = sonic_fn(0.0);
    const double s1 = z_u.norm() / sound_speed(gas, rho_u) - 1.0;  // vanishing endpoint
    if (s0 < 0.0 && s1 > 0.0) {
        const double bs = solve_bracketed(sonic_fn, 0.0, bv, s0, s1, 1e-12);
        curve.beta_sonic = bs;
        curve.tau_sonic = turn_mag(bs);
    }
    return curve;
}

PolarDerivatives polar_derivatives(const GasModel& gas, const ShockSolution& sol) {
    if (sol.vanishing) {
        return {0.0, 0.0};
    }
    // Implicit differentiation of  rho_d zn_d = rho_u zn_u  and
    // pi(rho_d) - pi(rho_u) = (zn_u^2 - zn_d^2)/2  with respect to zn_u:
    //   zn_d rho_d' + rho_d zn_d'        = rho_u
    //   (c_d^2/rho_d) rho_d' + zn_d zn_d' = zn_u
    const double rho_u = sol.upstream.rho;
    const double rho_d = sol.downstream.rho;
    const double c_d = sound_speed(gas, rho_d);
    const double det = sol.zn_d * sol.zn_d - c_d * c_d;
    const double dznd_dznu = (sol.zn_d * sol.zn_u - rho_u * c_d * c_d / rho_d) / det;

    PolarDerivatives d;
    d.dv_dbeta_n = sol.zt * (dznd_dznu - 1.0);
    d.dv_dbeta_t = sol.zn_d - sol.zn_u;
    return d;
}

TurningSolutions solve_turning(const GasModel& gas, double rho_u, Vec2 z_u, double tau,
                               TurnSide side) {
    if (!(tau >= 0.0)) {
        throw DomainError("solve_turning: tau must be >= 0");
    }
    const double bv = polar_beta_vanish(gas, rho_u, z_u);
    const auto turn_mag = [&](double beta) {
        ShockSolution sol = polar_shock(gas, rho_u, z_u, beta);
        return std::abs(signed_angle(z_u, sol.downstream.v - sol.xi));
    };
    const double beta_star = golden_section_max(turn_mag, 0.0, bv, 1e-12);
    const double tau_star = turn_mag(beta_star);
    if (tau > tau_star + 1e-12) {
        throw NoReflectedShockError("solve_turning: tau exceeds tau_star (detachment)");
    }

    const double sgn = (side == TurnSide::Right) ? 1.0 : -1.0;
    TurningSolutions out;
    if (tau >= tau_star - 1e-12) {
        out.beta_weak = out.beta_strong = sgn * beta_star;
        out.weak = out.strong = polar_shock(gas, rho_u, z_u, out.beta_weak);
        return out;
    }

    // tau(beta) is unimodal: increasing on [0, beta_star], decreasing to zero
    // on [beta_star, beta_vanish].
    const auto fn = [&](double beta) { return turn_mag(beta) - tau; };
    const double b_strong = solve_bracketed(fn, 0.0, beta_star, 1e-13);
    const double b_weak = solve_bracketed(fn, beta_star, bv, 1e-13);
    out.beta_strong = sgn * b_strong;
    out.beta_weak = sgn * b_weak;
    out.strong = polar_shock(gas, rho_u, z_u, out.beta_strong);
    out.weak = polar_shock(gas, rho_u, z_u, out.beta_weak);
    return out;
}

}  // namespace shockfront
