#include "shockfront/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "shockfront/roots.hpp"

namespace shockfront {

const char* to_string(EnvelopeTermination t) {
    switch (t) {
        case EnvelopeTermination::HitWallA: return "HitWallA";
        case EnvelopeTermination::HitWallB: return "HitWallB";
        case EnvelopeTermination::AtCircle: return "AtCircle";
        case EnvelopeTermination::MaxAngle: return "MaxAngle";
    }
    return "?";
}

const char* to_string(CurveComparison c) {
    switch (c) {
        case CurveComparison::Outside: return "Outside";
        case CurveComparison::Inside: return "Inside";
        case CurveComparison::Crosses: return "Crosses";
    }
    return "?";
}

namespace {

// r has reached the circle when r - c_u drops below this.
constexpr double kCircleEps = 1e-9;

// The closed form
//   f(r) = r sqrt((1 - A B^(2/(gamma-1))) / (A - 1)),
//   A = (gamma+1)/(gamma-1+2(r/c_u)^-2),  B = (gamma+1)/(2+(gamma-1)(r/c_u)^2)
// cancels catastrophically in the numerator as r -> c_u (it is O((r-c_u)^2)),
// which is exactly where the feasibility question is decided.  Rewrite with
// eps = (r/c_u)^2 - 1 and w = (gamma+1)/(gamma-1):
//   A - 1 = 2 eps / ((gamma+1) + (gamma-1) eps)
//   1 - A B^(2/(gamma-1)) = -expm1(log1p(eps) - w log1p(eps/w))
// which is accurate down to the circle.
double rhs_explicit(const GasModel& gas, double r, double c_u) {
    if (gas.isothermal()) {
        throw UnsupportedBranchError("envelope_rhs: explicit form requires gamma > 1");
    }
    const double g = gas.gamma;
    const double eps = (r - c_u) * (r + c_u) / (c_u * c_u);
    const double w = (g + 1.0) / (g - 1.0);
    const double num = -std::expm1(std::log1p(eps) - w * std::log1p(eps / w));
    const double den = 2.0 * eps / ((g + 1.0) + (g - 1.0) * eps);
    if (!(num > 0.0) || !(den > 0.0)) {
        return 0.0;  // only possible within rounding of the circle
    }
    return r * std::sqrt(num / den);
}

// Numeric construction in units c_u = rho_u = 1: for the shock through a point
// at distance rr = r/c_u from the upstream velocity, find beta > 0 with
// downstream L_d = 1; then f = r tan(beta).
//
// The inner jump solve runs in lambda = log(zn_d): strong shocks (gamma near 1
// at large r) have zn_d many orders below zn_u, and near-vanishing ones sit
// within rounding of zn_u; log parametrization plus a Newton polish keeps full
// relative precision in both regimes.  The sonic defect is assembled from
//   L_d^2 - 1 = (rr^2 - 1) - (zn_u^2 - zn_d^2) - (gamma-1) pi(rho_d)
// with every term evaluated cancellation-free.
double rhs_numeric(const GasModel& gas, double r, double c_u) {
    const double g = gas.gamma;
    const double gm1 = g - 1.0;
    const bool iso = gas.isothermal();
    const double rr = r / c_u;

    const auto pi_d = [&](double zn_u, double zn_d) {
        const double lr = std::log(zn_u) - std::log(zn_d);  // log(rho_d)
        return iso ? lr : std::expm1(gm1 * lr) / gm1;
    };
    // Bernoulli residual at fixed zn_u as a function of lambda = log(zn_d).
    const auto solve_zn_d = [&](double zn_u) {
        const auto S = [&](double lam) {
            const double zn_d = std::exp(lam);
            return pi_d(zn_u, zn_d) - 0.5 * (zn_u - zn_d) * (zn_u + zn_d);
        };
        // S decreases in zn_d on (0, zn_crit); S(zn_crit) < 0.
        const double zn_crit = iso ? 1.0 : std::pow(zn_u, gm1 / (g + 1.0));
        double hi = std::log(zn_crit);
        double lo = hi - 2.0;
        bool ok = false;
        for (int k = 0; k < 200; ++k) {
            if (S(lo) > 0.0) {
                ok = true;
                break;
            }
            lo -= 5.0;
            if (lo < -650.0) break;
        }
        if (!ok) {
            throw Error("envelope_rhs: shock strength underflows double range");
        }
        double lam = solve_bracketed(S, lo, hi, 1e-13);
        for (int k = 0; k < 3; ++k) {  // Newton in lambda: dS/dlam = zn_d^2 - c_d^2
            const double zn_d = std::exp(lam);
            const double c_d2 = iso ? 1.0 : 1.0 + gm1 * pi_d(zn_u, zn_d);
            const double dS = zn_d * zn_d - c_d2;
            if (!(dS < 0.0)) break;
            lam -= S(lam) / dS;
        }
        return std::exp(lam);
    };
    const auto sonic_defect = [&](double beta) {
        const double zn_u = rr * std::cos(beta);
        if (zn_u <= 1.0 + 1e-12) {
            return (rr - 1.0) * (rr + 1.0);  // vanishing end of the bracket
        }
        const double zn_d = solve_zn_d(zn_u);
        return (rr - 1.0) * (rr + 1.0) - (zn_u - zn_d) * (zn_u + zn_d) -
               (iso ? 0.0 : gm1 * pi_d(zn_u, zn_d));
    };

    const double bv = std::acos(1.0 / rr);
    const double d0 = sonic_defect(0.0);
    if (!(d0 < 0.0)) {
        return 0.0;  // within rounding of the circle
    }
    const double beta = solve_bracketed(sonic_defect, 0.0, bv, d0,
                                        (rr - 1.0) * (rr + 1.0), 1e-14 * bv);
    return r * std::tan(beta);
}

}  // namespace

double envelope_rhs(const GasModel& gas, double r, double c_u, EnvelopeRhsMode mode) {
    if (!(c_u > 0.0)) {
        throw DomainError("envelope_rhs: c_u must be > 0");
    }
    if (!(r > c_u)) {
        throw CircleDomainError("envelope_rhs: r must be > c_u");
    }
    return mode == EnvelopeRhsMode::Explicit ? rhs_explicit(gas, r, c_u)
                                             : rhs_numeric(gas, r, c_u);
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 5179.0 / 57600, E3 = 7571.0 / 16695, E4 = 393.0 / 640,
                 E5 = -92097.0 / 339200, E6 = 187.0 / 2100, E7 = 1.0 / 40;

struct EventSpec {
    EnvelopeTermination kind;
    bool enabled = false;
    Ray ray;          // wall events
    bool is_circle = false;
};

}  // namespace

EnvelopeCurve integrate_envelope(const GasModel& gas, Vec2 start, Vec2 center, double c_u,
                                 const EnvelopeOptions& opts) {
    if (!(c_u > 0.0)) {
        throw DomainError("integrate_envelope: c_u must be > 0");
    }
    const double r0 = (start - center).norm();
    if (r0 < c_u * (1.0 - 1e-12)) {
        throw CircleDomainError("integrate_envelope: start inside the sonic circle");
    }

    EnvelopeCurve curve;
    curve.center = center;
    curve.c_u = c_u;

    const double phi0 = (start - center).angle();
    curve.points.push_back({phi0, r0});
    if (r0 - c_u < kCircleEps) {
        curve.termination = EnvelopeTermination::AtCircle;
        curve.end_point = start;
        return curve;
    }

    const EnvelopeRhsMode mode =
        gas.isothermal() ? EnvelopeRhsMode::Numeric : EnvelopeRhsMode::Explicit;
    const auto f = [&](double r) {
        return r <= c_u ? 0.0 : envelope_rhs(gas, r, c_u, mode);
    };

    // One embedded 5(4) step from r over dphi = h; err is the embedded error.
    const auto dopri_step = [&](double r, double h, double& err) {
        const double k1 = -f(r);
        const double k2 = -f(r + h * (A21 * k1));
        const double k3 = -f(r + h * (A31 * k1 + A32 * k2));
        const double k4 = -f(r + h * (A41 * k1 + A42 * k2 + A43 * k3));
        const double k5 = -f(r + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4));
        const double k6 = -f(r + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5));
        const double r5 = r + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
        const double k7 = -f(r5);
        const double r4 = r + h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
        err = std::abs(r5 - r4);
        return r5;
    };

    const auto position = [&](double phi, double r) {
        return center + r * unit_vector(phi);
    };

    EventSpec events[3];
    events[0] = {EnvelopeTermination::HitWallA, opts.stops.wallA.has_value(),
                 opts.stops.wallA.value_or(Ray{}), false};
    events[1] = {EnvelopeTermination::HitWallB, opts.stops.wallB.has_value(),
                 opts.stops.wallB.value_or(Ray{}), false};
    events[2] = {EnvelopeTermination::AtCircle, true, Ray{}, true};

    const auto event_value = [&](const EventSpec& ev, double phi, double r) {
        if (ev.is_circle) {
            return r - (c_u + kCircleEps);
        }
        return cross(ev.ray.dir, position(phi, r) - ev.ray.origin);
    };
    const auto event_on_ray = [&](const EventSpec& ev, double phi, double r) {
        if (ev.is_circle) return true;
        return dot(ev.ray.dir, position(phi, r) - ev.ray.origin) >= 0.0;
    };

    // A start on or within rounding noise of a wall (the theta = theta_s
    // configuration starts on wall B) must not fire that wall's event; the
    // event is armed once the trajectory has cleared the wall.  A genuine
    // later crossing passes through much larger distances first.
    const auto arm_tol = [&](const EventSpec& ev) {
        return ev.is_circle ? 0.0 : 1e-7 * (1.0 + r0);
    };
    double prev_val[3];
    bool armed[3];
    for (int k = 0; k < 3; ++k) {
        prev_val[k] = event_value(events[k], phi0, r0);
        armed[k] = std::abs(prev_val[k]) > arm_tol(events[k]);
    }

    const double phi_end = phi0 + opts.stops.max_angle;
    const double atol = 1e-13 * c_u;
    double phi = phi0;
    double r = r0;
    double h = 1e-6;

    for (long step = 0; step < 50'000'000; ++step) {
        const double gap = r - c_u;
        if (gap < kCircleEps) {
            curve.termination = EnvelopeTermination::AtCircle;
            break;
        }
        if (phi >= phi_end) {
            curve.termination = EnvelopeTermination::MaxAngle;
            break;
        }

        const double fr = f(r);
        double h_try = h;
        if (fr > 0.0) {
            h_try = std::min(h_try, 0.1 * gap / fr);  // sqrt-singularity guard
        }
        h_try = std::min(h_try, phi_end - phi);

        double err = 0.0;
        const double r_new = dopri_step(r, h_try, err);
        const double tol = atol + opts.rel_tol * std::abs(r);
        if (err > tol) {
            h = std::max(h_try * std::max(0.2, 0.9 * std::pow(tol / err, 0.2)), 1e-15);
            continue;
        }
        const double phi_new = phi + h_try;

        // Earliest event inside this step, refined by bisection on the step
        // fraction; each candidate is re-integrated from the step start.
        bool have_event = false;
        double best_frac = 2.0;
        int best_k = -1;
        double new_val[3];
        for (int k = 0; k < 3; ++k) {
            new_val[k] = event_value(events[k], phi_new, r_new);
            if (!events[k].enabled) continue;
            if (!armed[k]) continue;
            if (prev_val[k] == 0.0 || new_val[k] == 0.0 ||
                (prev_val[k] > 0.0) != (new_val[k] > 0.0)) {
                double lo = 0.0, hi = 1.0;
                const double v_lo = prev_val[k];
                for (int it = 0; it < 100 && (hi - lo) * h_try > 1e-13; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    double e2;
                    const double rm = dopri_step(r, mid * h_try, e2);
                    const double vm = event_value(events[k], phi + mid * h_try, rm);
                    if (vm == 0.0 || (vm > 0.0) != (v_lo > 0.0)) {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                const double frac = 0.5 * (lo + hi);
                double e2;
                const double rm = dopri_step(r, frac * h_try, e2);
                if (!event_on_ray(events[k], phi + frac * h_try, rm)) {
                    continue;  // crossed the supporting line off the half-line
                }
                // Priority at ties (within 1e-12 in phi): wallA > wallB > circle,
                // which is the array order.
                if (frac < best_frac - 1e-12 / h_try ||
                    (std::abs(frac - best_frac) <= 1e-12 / h_try && best_k > k)) {
                    best_frac = frac;
                    best_k = k;
                    have_event = true;
                }
            }
        }

        if (have_event) {
            double e2;
            const double r_ev = dopri_step(r, best_frac * h_try, e2);
            const double phi_ev = phi + best_frac * h_try;
            curve.points.push_back({phi_ev, r_ev});
            curve.termination = events[best_k].kind;
            curve.end_point = position(phi_ev, r_ev);
            return curve;
        }

        phi = phi_new;
        r = r_new;
        for (int k = 0; k < 3; ++k) {
            prev_val[k] = new_val[k];
            if (!armed[k] && std::abs(new_val[k]) > arm_tol(events[k])) {
                armed[k] = true;
            }
        }
        curve.points.push_back({phi, r});
        h = h_try * std::min(5.0, std::max(0.2, 0.9 * std::pow(tol / std::max(err, 1e-300), 0.2)));
    }

    curve.end_point = position(phi, r);
    if (curve.points.empty() || curve.points.back().phi != phi) {
        curve.points.push_back({phi, r});
    }
    return curve;
}

CurveComparison compare_shock_envelope(std::span<const EnvelopePoint> shock_samples,
                                       const EnvelopeCurve& envelope) {
    if (shock_samples.size() < 2 || envelope.points.size() < 2) {
        throw ParameterRangeError("compare_shock_envelope: need at least two samples each");
    }
    const auto& env = envelope.points;
    const double lo = std::max(shock_samples.front().phi, env.front().phi);
    const double hi = std::min(shock_samples.back().phi, env.back().phi);
    if (!(hi > lo)) {
        throw ParameterRangeError("compare_shock_envelope: disjoint phi ranges");
    }

    const auto interp = [](std::span<const EnvelopePoint> pts, double phi) {
        auto it = std::lower_bound(pts.begin(), pts.end(), phi,
                                   [](const EnvelopePoint& p, double v) { return p.phi < v; });
        if (it == pts.begin()) return it->r;
        if (it == pts.end()) return (it - 1)->r;
        const auto& b = *it;
        const auto& a = *(it - 1);
        const double t = (phi - a.phi) / (b.phi - a.phi);
        return a.r + t * (b.r - a.r);
    };

    constexpr double tol = 1e-9;
    bool all_above = true;
    bool all_below = true;
    const auto consider = [&](double phi) {
        if (phi <= lo + 1e-12 || phi > hi) return;  // skip the shared start
        const double d = interp(shock_samples, phi) - interp(env, phi);
        if (d <= tol) all_above = false;
        if (d >= -tol) all_below = false;
    };
    for (const auto& p : shock_samples) consider(p.phi);
    for (const auto& p : env) consider(p.phi);
    consider(hi);

    if (all_above) return CurveComparison::Outside;
    if (all_below) return CurveComparison::Inside;
    return CurveComparison::Crosses;
}

}  // namespace shockfront
