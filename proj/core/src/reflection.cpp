#include "shockfront/reflection.hpp"

#include <cmath>

#include "shockfront/roots.hpp"

namespace shockfront {

const char* to_string(FeasibilityStatus s) {
    switch (s) {
        case FeasibilityStatus::NoIncidentShock: return "NoIncidentShock";
        case FeasibilityStatus::EnvelopeFails: return "EnvelopeFails";
        case FeasibilityStatus::Feasible: return "Feasible";
    }
    return "?";
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Ray wall_A() { return {Vec2{0.0, 0.0}, Vec2{-1.0, 0.0}}; }
Ray wall_B(double theta) { return {Vec2{0.0, 0.0}, unit_vector(theta)}; }

// Inward normal of wall B is dir rotated -90 degrees for theta in (0, pi/2];
// the slip condition only uses |v . n_B| so the sign is immaterial.
Vec2 wall_B_normal(double theta) { return {std::sin(theta), -std::cos(theta)}; }

// Incident shock as a line {xi . n = sigma} with upstream Q and downstream I.
struct IncidentGeometry {
    IncidentShock inc;
    Vec2 n;
    double sigma = 0.0;
    FlowState Q;
    FlowState I;
};

// beta_Q = 0 is the vertical incident shock with quiescent Q region.  For
// beta_Q != 0 the shock ray is inclined beta_Q from vertical; sector data must
// satisfy slip on both walls, which pins v_Q parallel to wall B and the normal
// velocity jump fixes it completely.
IncidentGeometry incident_geometry(const GasModel& gas, double M_I, double beta_Q,
                                   double theta) {
    IncidentGeometry geo;
    geo.I = FlowState{gas.rho_ref, Vec2{M_I * gas.c_ref, 0.0}};

    if (beta_Q == 0.0) {
        geo.inc = vertical_incident_shock(gas, M_I);
        geo.n = Vec2{-1.0, 0.0};
        geo.sigma = -geo.inc.xi_s;
        geo.Q = FlowState{geo.inc.rho_Q, Vec2{0.0, 0.0}};
        return geo;
    }

    const Vec2 d{std::sin(beta_Q), std::cos(beta_Q)};  // shock ray direction
    const Vec2 n = d.perp();                           // points into the I sector
    const Vec2 n_B = wall_B_normal(theta);
    const double nn = dot(n, n_B);
    if (std::abs(nn) < 1e-14) {
        throw GeometryError("incident_geometry: incident shock parallel to wall B slip");
    }
    const Vec2 v_I = geo.I.v;
    const double kappa = dot(v_I, n_B) / nn;
    const Vec2 v_Q = v_I - kappa * n;  // tangential continuity + slip on wall B

    const double a = dot(v_Q, n);  // upstream normal velocity
    const double b = dot(v_I, n);
    if (!(a > b)) {
        throw GeometryError("incident_geometry: inadmissible incident orientation");
    }
    // Same one-parameter family as the vertical shock with jump speed a - b:
    // sigma = b - w places the line so that zn_d = w, zn_u = (a - b) + w.
    const IncidentStrength s = solve_incident_strength(gas, a - b);
    geo.n = n;
    geo.sigma = b - s.w;
    geo.Q = FlowState{s.rho_Q, v_Q};
    geo.inc.xi_s = geo.sigma;
    geo.inc.rho_Q = s.rho_Q;
    geo.inc.c_Q = sound_speed(gas, s.rho_Q);
    return geo;
}

Vec2 reflection_point(const IncidentGeometry& geo, double theta) {
    const Vec2 b_dir = unit_vector(theta);
    const double denom = dot(b_dir, geo.n);
    if (std::abs(denom) < 1e-14) {
        throw GeometryError("reflection_point: incident shock parallel to wall B");
    }
    const double s = geo.sigma / denom;
    if (!(s > 0.0)) {
        throw GeometryError("reflection_point: incident shock misses wall B");
    }
    return s * b_dir;
}

}  // namespace

SonicPoints sonic_points(const GasModel& gas, const ShockSolution& sol, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
        throw DomainError("sonic_points: epsilon must be in [0, 1)");
    }
    const double radius = sound_speed(gas, sol.downstream.rho) * std::sqrt(1.0 - epsilon);
    const Vec2 q = sol.downstream.v - sol.xi;
    const double st = dot(sol.t, q);
    double disc = radius * radius - dot(sol.n, q) * dot(sol.n, q);
    if (disc < 0.0 && disc > -1e-12 * radius * radius) {
        disc = 0.0;  // tangency within rounding
    }
    if (disc < 0.0) {
        throw NoSonicPointError("sonic_points: shock line misses the L_d circle");
    }
    const double root = std::sqrt(disc);
    SonicPoints pts;
    pts.xi_L = sol.xi + (st - root) * sol.t;
    pts.xi_R_pt = sol.xi + (st + root) * sol.t;
    return pts;
}

RRConfiguration build_local_rr(const GasModel& gas, double M_I, double beta_Q,
                               double theta) {
    if (!(theta > 0.0 && theta < kPi)) {
        throw DomainError("build_local_rr: theta must be in (0, pi)");
    }
    const IncidentGeometry geo = incident_geometry(gas, M_I, beta_Q, theta);
    const Vec2 xi_R = reflection_point(geo, theta);
    const double c_I = sound_speed(gas, geo.I.rho);
    const Vec2 z_I = geo.I.v - xi_R;
    if (!(z_I.norm() > c_I)) {
        throw SubsonicUpstreamError("build_local_rr: xi_R inside the I sonic circle");
    }

    // The reflected shock must turn z_I onto the wall B direction (slip).
    const Vec2 b_dir = unit_vector(theta);
    const double delta = signed_angle(z_I, -b_dir);
    const TurnSide side = (delta <= 0.0) ? TurnSide::Right : TurnSide::Left;
    const TurningSolutions turn = solve_turning(gas, geo.I.rho, z_I, std::abs(delta), side);

    const Vec2 n_R = rotated(z_I / z_I.norm(), turn.beta_weak);
    const ShockSolution reflected = downstream_state(gas, geo.I, xi_R, n_R);
    const double L_R = downstream_pseudo_mach(gas, reflected);

    const SonicPoints sp = sonic_points(gas, reflected, 0.0);
    const Vec2 xi_C0 = ((sp.xi_L - xi_R).norm() <= (sp.xi_R_pt - xi_R).norm()) ? sp.xi_L
                                                                               : sp.xi_R_pt;

    RRConfiguration cfg{
        .gas = gas,
        .M_I = M_I,
        .beta_Q = beta_Q,
        .theta = theta,
        .wallA = wall_A(),
        .wallB = wall_B(theta),
        .v_I = geo.I.v,
        .incident = geo.inc,
        .xi_R = xi_R,
        .reflected = reflected,
        .L_R = L_R,
        .xi_C0 = xi_C0,
        .verdicts = {},
        .envelope = {},
    };
    cfg.verdicts.sonic_ok = L_R > 1.0;
    cfg.verdicts.vInB_ok = std::abs(dot(cfg.v_I, wall_B_normal(theta))) <= c_I;

    const EnvelopeCheck env = check_envelope_condition(cfg);
    cfg.verdicts.envelope_ok = env.ok;
    cfg.envelope = env.curve;
    return cfg;
}

EnvelopeCheck check_envelope_condition(const RRConfiguration& config) {
    EnvelopeOptions opts;
    opts.stops.wallA = config.wallA;
    opts.stops.wallB = config.wallB;
    opts.stops.max_angle = 2.0 * kPi;

    EnvelopeCheck out;
    out.curve = integrate_envelope(config.gas, config.xi_C0, config.v_I,
                                   sound_speed(config.gas, config.gas.rho_ref), opts);
    out.termination = out.curve.termination;
    out.end_point = out.curve.end_point;
    out.ok = out.termination == EnvelopeTermination::HitWallA;
    return out;
}

VdZeroResult vdzero_shock(const GasModel& gas, double v_u_y, double rho_u, double beta) {
    if (!(v_u_y < 0.0)) {
        throw DomainError("vdzero_shock: v_u_y must be < 0");
    }
    if (!(std::abs(beta) < 0.5 * kPi)) {
        throw DomainError("vdzero_shock: |beta| must be < pi/2");
    }
    const FlowState upstream{rho_u, Vec2{0.0, v_u_y}};
    const Vec2 n{std::sin(beta), -std::cos(beta)};
    const double c_u = sound_speed(gas, rho_u);

    const auto vyd = [&](double eta) {
        return downstream_state(gas, upstream, Vec2{0.0, eta}, n).downstream.v.y;
    };

    // Vanishing threshold: zn_u = (eta - v_u_y) cos(beta) = c_u.
    const double eta_min = v_u_y + c_u / std::cos(beta);
    double lo = eta_min + 1e-9 * c_u;
    double f_lo = vyd(lo);
    if (f_lo >= 0.0) {
        throw NoShockError("vdzero_shock: no sign change at the vanishing end");
    }
    double hi = 0.0, f_hi = 0.0;
    bool bracketed = false;
    for (int k = 0; k < 80; ++k) {
        const double cand = eta_min + c_u * std::ldexp(1e-6, k);
        const double f_cand = vyd(cand);
        if (f_cand >= 0.0) {
            hi = cand;
            f_hi = f_cand;
            bracketed = true;
            break;
        }
        lo = cand;
        f_lo = f_cand;
    }
    if (!bracketed) {
        throw NoShockError("vdzero_shock: v^y_d never reaches zero");
    }
    const double eta = solve_bracketed(vyd, lo, hi, f_lo, f_hi,
                                       1e-12 * (1.0 + std::abs(eta_min)));

    VdZeroResult res;
    res.eta_star = eta;
    res.downstream = downstream_state(gas, upstream, Vec2{0.0, eta}, n).downstream;
    return res;
}

namespace {

// Everything transition-angle roots need at one wedge angle theta.
struct ThetaProbe {
    bool valid = false;      // xi_R exists and upstream is pseudo-supersonic
    double detach = 0.0;     // tau - tau_star  (> 0: detached)
    bool has_sonic = false;
    double sonic = 0.0;      // L_R - 1 on the weak branch
    bool has_stem = false;
    double stem = 0.0;       // p(rho_stem) - p(rho_R)
};

ThetaProbe probe_theta(const GasModel& gas, double M_I, double beta_Q, double theta,
                       const IncidentGeometry* cached_geo) {
    ThetaProbe p;
    IncidentGeometry geo_local;
    if (!cached_geo) {
        geo_local = incident_geometry(gas, M_I, beta_Q, theta);
    }
    const IncidentGeometry& geo = cached_geo ? *cached_geo : geo_local;

    Vec2 xi_R;
    try {
        xi_R = reflection_point(geo, theta);
    } catch (const GeometryError&) {
        return p;
    }
    const double c_I = sound_speed(gas, geo.I.rho);
    const Vec2 z_I = geo.I.v - xi_R;
    if (!(z_I.norm() > c_I * (1.0 + 1e-12))) {
        return p;
    }
    p.valid = true;

    const Vec2 b_dir = unit_vector(theta);
    const double delta = signed_angle(z_I, -b_dir);
    const double tau = std::abs(delta);
    const double sgn = (delta <= 0.0) ? 1.0 : -1.0;

    const double bv = polar_beta_vanish(gas, geo.I.rho, z_I);
    const Vec2 zhat = z_I / z_I.norm();
    const auto turn_mag = [&](double beta) {
        const ShockSolution s = downstream_state(gas, geo.I, xi_R, rotated(zhat, beta));
        return std::abs(signed_angle(z_I, s.downstream.v - xi_R));
    };
    const double beta_star = golden_section_max(turn_mag, 0.0, bv, 1e-12);
    const double tau_star = turn_mag(beta_star);
    p.detach = tau - tau_star;
    if (p.detach > 0.0) {
        return p;
    }

    double beta_w = beta_star;
    if (tau < tau_star - 1e-12) {
        beta_w = solve_bracketed([&](double b) { return turn_mag(b) - tau; }, beta_star,
                                 bv, 1e-13);
    }
    const ShockSolution reflected =
        downstream_state(gas, geo.I, xi_R, rotated(zhat, sgn * beta_w));
    p.has_sonic = true;
    p.sonic = downstream_pseudo_mach(gas, reflected) - 1.0;

    // Mach-stem model: straight shock through xi_R perpendicular to wall B,
    // upstream = Q state, pseudo-steady at xi_R.
    const double zn_stem = xi_R.norm();
    if (zn_stem > geo.inc.c_Q * (1.0 + 1e-12)) {
        const ShockSolution stem = downstream_state(gas, geo.Q, xi_R, -b_dir);
        p.has_stem = true;
        p.stem = pressure(gas, stem.downstream.rho) - pressure(gas, reflected.downstream.rho);
    }
    return p;
}

}  // namespace

TransitionAngles transition_angles(const GasModel& gas, double M_I, double beta_Q,
                                   double theta_tol) {
    // For a vertical incident shock the incident state is theta-independent.
    IncidentGeometry cached;
    const bool can_cache = (beta_Q == 0.0);
    if (can_cache) {
        cached = incident_geometry(gas, M_I, beta_Q, 0.25 * kPi);
    }
    const auto probe = [&](double theta) {
        return probe_theta(gas, M_I, beta_Q, theta, can_cache ? &cached : nullptr);
    };

    constexpr double step = 1e-3;
    const double theta_hi = 0.5 * kPi - 1e-9;
    const int n_steps = static_cast<int>(theta_hi / step);

    TransitionAngles out;
    bool have_d = false, have_s = false, have_N = false;

    const auto detach_fn = [&](double th) {
        const ThetaProbe q = probe(th);
        if (!q.valid) throw BracketError("transition_angles: probe invalid in bracket");
        return q.detach;
    };
    const auto sonic_fn = [&](double th) {
        const ThetaProbe q = probe(th);
        if (!q.has_sonic) throw BracketError("transition_angles: probe invalid in bracket");
        return q.sonic;
    };
    const auto stem_fn = [&](double th) {
        const ThetaProbe q = probe(th);
        if (!q.has_stem) throw BracketError("transition_angles: probe invalid in bracket");
        return q.stem;
    };

    ThetaProbe prev;
    double prev_theta = 0.0;
    bool prev_any = false;
    for (int i = 1; i <= n_steps; ++i) {
        const double theta = i * step;
        const ThetaProbe cur = probe(theta);
        if (prev_any && prev.valid && cur.valid) {
            if (!have_d && prev.detach > 0.0 && cur.detach <= 0.0) {
                out.theta_d = solve_bracketed(detach_fn, prev_theta, theta, prev.detach,
                                              cur.detach, theta_tol);
                have_d = true;
            }
            if (!have_s && prev.has_sonic && cur.has_sonic && prev.sonic < 0.0 &&
                cur.sonic >= 0.0) {
                out.theta_s = solve_bracketed(sonic_fn, prev_theta, theta, prev.sonic,
                                              cur.sonic, theta_tol);
                have_s = true;
            }
            if (!have_N && prev.has_stem && cur.has_stem &&
                (prev.stem > 0.0) != (cur.stem > 0.0)) {
                out.theta_N = solve_bracketed(stem_fn, prev_theta, theta, prev.stem,
                                              cur.stem, theta_tol);
                have_N = true;
            }
        }
        prev = cur;
        prev_theta = theta;
        prev_any = true;
    }
    if (!have_d || !have_s) {
        throw BracketError("transition_angles: sweep found no detachment/sonic bracket");
    }
    return out;
}

double theta_sonic(const GasModel& gas, double M_I, double beta_Q, double theta_tol) {
    IncidentGeometry cached;
    const bool can_cache = (beta_Q == 0.0);
    if (can_cache) {
        cached = incident_geometry(gas, M_I, beta_Q, 0.25 * kPi);
    }
    const auto sonic_at = [&](double theta) {
        return probe_theta(gas, M_I, beta_Q, theta, can_cache ? &cached : nullptr);
    };
    const auto sonic_fn = [&](double th) {
        const ThetaProbe q = sonic_at(th);
        if (!q.has_sonic) throw BracketError("theta_sonic: probe invalid in bracket");
        return q.sonic;
    };

    constexpr double step = 1e-3;
    const double theta_hi = 0.5 * kPi - 1e-9;
    const int n_steps = static_cast<int>(theta_hi / step);
    ThetaProbe prev;
    double prev_theta = 0.0;
    bool prev_any = false;
    for (int i = 1; i <= n_steps; ++i) {
        const double theta = i * step;
        const ThetaProbe cur = sonic_at(theta);
        if (prev_any && prev.valid && cur.valid && prev.has_sonic && cur.has_sonic &&
            prev.sonic < 0.0 && cur.sonic >= 0.0) {
            return solve_bracketed(sonic_fn, prev_theta, theta, prev.sonic, cur.sonic,
                                   theta_tol);
        }
        prev = cur;
        prev_theta = theta;
        prev_any = true;
    }
    throw BracketError("theta_sonic: no L_R = 1 bracket in (0, pi/2)");
}

FeasibilityRecord classify_feasibility(double gamma, double M_I) {
    FeasibilityRecord rec;
    rec.gamma = gamma;
    rec.M_I = M_I;
    const GasModel gas(gamma);
    try {
        (void)vertical_incident_shock(gas, M_I);
    } catch (const NoIncidentShockError&) {
        rec.status = FeasibilityStatus::NoIncidentShock;
        return rec;
    }
    const double ths = theta_sonic(gas, M_I, 0.0);
    rec.theta_s = ths;
    const RRConfiguration cfg = build_local_rr(gas, M_I, 0.0, ths);
    rec.status = cfg.verdicts.envelope_ok ? FeasibilityStatus::Feasible
                                          : FeasibilityStatus::EnvelopeFails;
    return rec;
}

std::vector<FeasibilityRecord> feasibility_scan(std::span<const double> gammas,
                                                std::span<const double> mis) {
    std::vector<FeasibilityRecord> records;
    records.reserve(gammas.size() * mis.size());
    for (const double g : gammas) {
        for (const double mi : mis) {
            records.push_back(classify_feasibility(g, mi));
        }
    }
    return records;
}

}  // namespace shockfront
