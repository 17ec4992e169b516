#include "shockfront/shock.hpp"

#include <cmath>

#include "shockfront/roots.hpp"

namespace shockfront {

PseudoState make_pseudo(const GasModel& gas, const FlowState& state, Vec2 xi) {
    PseudoState ps;
    ps.xi = xi;
    ps.z = state.v - xi;
    ps.L = ps.z.norm() / sound_speed(gas, state.rho);
    return ps;
}

namespace {

ShockSolution vanishing_solution(const FlowState& upstream, Vec2 xi, Vec2 n, Vec2 t,
                                 double zn_u, double zt) {
    ShockSolution sol;
    sol.xi = xi;
    sol.n = n;
    sol.t = t;
    sol.upstream = upstream;
    sol.downstream = upstream;
    sol.zn_u = zn_u;
    sol.zn_d = zn_u;
    sol.zt = zt;
    sol.sigma = dot(xi, n);
    sol.vanishing = true;
    return sol;
}

// Normal pseudo-speed zn where zn = c(rho_u zn_u / zn), the minimum of the
// Bernoulli residual.  The compressive root lies left of it, the trivial
// root zn_u right of it.
double critical_normal_speed(const GasModel& gas, double rho_u, double zn_u) {
    if (gas.isothermal()) {
        return gas.c_ref;
    }
    const auto g = [&](double zn) { return zn - sound_speed(gas, rho_u * zn_u / zn); };
    double hi = zn_u;           // g(zn_u) = zn_u - c_u > 0 (supersonic upstream)
    double lo = 0.5 * zn_u;
    for (int it = 0; it < 2000 && g(lo) >= 0.0; ++it) {
        lo *= 0.5;
    }
    return solve_bracketed(g, lo, hi, 1e-15 * zn_u);
}

}  // namespace

ShockSolution downstream_state(const GasModel& gas, const FlowState& upstream, Vec2 xi,
                               Vec2 n) {
    if (!(upstream.rho > 0.0)) {
        throw DomainError("downstream_state: upstream density must be > 0");
    }
    const Vec2 t = n.perp();
    const Vec2 z_u = upstream.v - xi;
    const double zn_u = dot(z_u, n);
    const double zt = dot(z_u, t);
    if (!(zn_u > 0.0)) {
        throw OrientationError("downstream_state: normal does not point downstream (zn_u <= 0)");
    }

    const double rho_u = upstream.rho;
    const double c_u = sound_speed(gas, rho_u);
    const double normal_mach = zn_u / c_u;
    if (normal_mach < 1.0 - kVanishTol) {
        throw NoShockError("downstream_state: upstream normal pseudo-Mach < 1");
    }
    if (normal_mach <= 1.0 + kVanishTol) {
        return vanishing_solution(upstream, xi, n, t, zn_u, zt);
    }

    const double pi_u = pi(gas, rho_u);
    const auto bernoulli = [&](double zn_d) {
        const double rho_d = rho_u * zn_u / zn_d;  // mass flux eliminated
        return pi(gas, rho_d) - pi_u - 0.5 * (zn_u * zn_u - zn_d * zn_d);
    };

    const double zn_crit = critical_normal_speed(gas, rho_u, zn_u);
    // bernoulli(zn_crit) < 0 (interior minimum), bernoulli(0+) = +inf.
    double lo = 0.5 * zn_crit;
    for (int it = 0; it < 2000 && bernoulli(lo) <= 0.0; ++it) {
        lo *= 0.5;
    }
    double zn_d = solve_bracketed(bernoulli, lo, zn_crit, 1e-13);
    // Newton polish: strong shocks have roots zn_d << 1 where the residual
    // slope (zn_d^2 - c_d^2)/zn_d is huge and an absolute bracket tolerance
    // leaves a visible Bernoulli residual.
    for (int it = 0; it < 3; ++it) {
        const double c_d = sound_speed(gas, rho_u * zn_u / zn_d);
        const double slope = (zn_d * zn_d - c_d * c_d) / zn_d;
        if (slope == 0.0) break;
        const double next = zn_d - bernoulli(zn_d) / slope;
        if (!(next > 0.0) || !(next < zn_u)) break;
        zn_d = next;
    }

    ShockSolution sol;
    sol.xi = xi;
    sol.n = n;
    sol.t = t;
    sol.upstream = upstream;
    sol.downstream.rho = rho_u * zn_u / zn_d;
    sol.downstream.v = xi + zt * t + zn_d * n;
    sol.zn_u = zn_u;
    sol.zn_d = zn_d;
    sol.zt = zt;
    sol.sigma = dot(xi, n);
    sol.vanishing = false;
    return sol;
}

std::pair<double, double> shock_residual(const GasModel& gas, const ShockSolution& sol) {
    const double mass = sol.upstream.rho * sol.zn_u - sol.downstream.rho * sol.zn_d;
    const double bern = pi(gas, sol.downstream.rho) - pi(gas, sol.upstream.rho) -
                        0.5 * (sol.zn_u * sol.zn_u - sol.zn_d * sol.zn_d);
    return {mass, bern};
}

double downstream_pseudo_mach(const GasModel& gas, const ShockSolution& sol) {
    return (sol.downstream.v - sol.xi).norm() / sound_speed(gas, sol.downstream.rho);
}

IncidentStrength solve_incident_strength(const GasModel& gas, double jump_speed) {
    if (!(jump_speed > 0.0) || !std::isfinite(jump_speed)) {
        throw DomainError("solve_incident_strength: jump speed must be > 0");
    }
    const double rho_I = gas.rho_ref;
    const double pi_I = pi(gas, rho_I);
    const double J = jump_speed;

    // Upstream density over the downstream normal speed w (= zn_d):
    //   zn_u = J + w,  pi_Q = pi_I - ((J+w)^2 - w^2)/2 = pi_I - J (J + 2w)/2.
    const auto rho_q_at = [&](double w) {
        return pi_inv(gas, pi_I - 0.5 * J * (J + 2.0 * w));
    };
    // Mass residual in w, with vacuum as the continuous extension rho_Q = 0.
    const auto mass = [&](double w) {
        double rho_q;
        try {
            rho_q = rho_q_at(w);
        } catch (const VacuumError&) {
            return -rho_I * w;
        }
        return rho_q * (J + w) - rho_I * w;
    };

    // Existence is exactly the weak-limit vacuum test: mass(0+) = rho_Q(0) J.
    if (pi_I - 0.5 * J * J <= vacuum_bound(gas)) {
        throw NoIncidentShockError("incident shock: Q region at vacuum");
    }

    // Strong shocks (isothermal especially) can have w smaller than any fixed
    // absolute scale, so sweep and bisect in log(w).
    const double lw_lo = std::log(1e-300);
    const double lw_hi = std::log(10.0 * gas.c_ref);
    const auto mass_lw = [&](double lw) { return mass(std::exp(lw)); };
    const int n_sweep = 4096;
    double a = lw_lo, fa = mass_lw(lw_lo);
    if (!(fa > 0.0)) {
        throw NoIncidentShockError("incident shock: no admissible root");
    }
    double b = 0.0, fb = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= n_sweep; ++i) {
        const double lw = lw_lo + (lw_hi - lw_lo) * static_cast<double>(i) / n_sweep;
        const double f = mass_lw(lw);
        if (f <= 0.0) {
            b = lw;
            fb = f;
            bracketed = true;
            break;
        }
        a = lw;
        fa = f;
    }
    if (!bracketed) {
        throw NoIncidentShockError("incident shock: no sign change up to w = 10 c_ref");
    }
    const double w = std::exp(solve_bracketed(mass_lw, a, b, fa, fb, 1e-14));

    IncidentStrength out;
    out.w = w;
    out.rho_Q = rho_q_at(w);
    return out;
}

IncidentShock vertical_incident_shock(const GasModel& gas, double M_I) {
    if (!(M_I > 0.0) || !std::isfinite(M_I)) {
        throw DomainError("vertical_incident_shock: M_I must be > 0");
    }
    const double v_I = M_I * gas.c_ref;
    const IncidentStrength s = solve_incident_strength(gas, v_I);
    IncidentShock inc;
    inc.xi_s = v_I + s.w;
    inc.rho_Q = s.rho_Q;
    inc.c_Q = sound_speed(gas, s.rho_Q);
    return inc;
}

}  // namespace shockfront
