#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "shockfront/envelope.hpp"

using namespace shockfront;
using namespace shockfront::testing;

namespace {

// Synthetic curve with dr/dphi = -k f(r): k < 1 corresponds to the L_d < 1
// family (tangents shallower than the envelope), k > 1 to L_d > 1.
std::vector<EnvelopePoint> synthetic_curve(const GasModel& gas, double k, double phi0,
                                           double r0, double c_u, double phi_len) {
    std::vector<EnvelopePoint> pts{{phi0, r0}};
    const auto f = [&](double r) {
        return r <= c_u * (1.0 + 1e-12) ? 0.0
                                        : k * envelope_rhs(gas, r, c_u, EnvelopeRhsMode::Explicit);
    };
    const double h = 1e-4;
    double phi = phi0, r = r0;
    while (phi < phi0 + phi_len && r > c_u + 1e-6) {
        const double k1 = -f(r);
        const double k2 = -f(std::max(r + 0.5 * h * k1, c_u));
        const double k3 = -f(std::max(r + 0.5 * h * k2, c_u));
        const double k4 = -f(std::max(r + h * k3, c_u));
        r += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        phi += h;
        pts.push_back({phi, r});
    }
    return pts;
}

}  // namespace

TEST_CASE("envelope RHS: limits, frozen value, errors") {
    const GasModel gas(5.0 / 3.0);
    // tangency: f -> 0 as r -> c_u
    CHECK(envelope_rhs(gas, 1.0 + 1e-12, 1.0, EnvelopeRhsMode::Explicit) < 1e-5);
    // frozen closed-form value at r = 1.5 (numeric mode is the oracle below)
    CHECK(envelope_rhs(gas, 1.5, 1.0, EnvelopeRhsMode::Explicit) ==
          doctest::Approx(0.872732380274833).epsilon(1e-12));
    // large-r asymptote f/r -> sqrt((gamma-1)/2)
    const double slope = envelope_rhs(gas, 1e6, 1.0, EnvelopeRhsMode::Explicit) / 1e6;
    CHECK(std::abs(slope - std::sqrt((gas.gamma - 1.0) / 2.0)) <= 1e-4 * slope);

    CHECK_THROWS_AS(envelope_rhs(gas, 0.99, 1.0, EnvelopeRhsMode::Explicit),
                    CircleDomainError);
    CHECK_THROWS_AS(envelope_rhs(GasModel(1.0), 2.0, 1.0, EnvelopeRhsMode::Explicit),
                    UnsupportedBranchError);
    CHECK(envelope_rhs(GasModel(1.0), 2.0, 1.0, EnvelopeRhsMode::Numeric) > 0.0);
}

TEST_CASE("explicit and numeric RHS agree over the full range") {
    const double ratios[] = {1.0 + 1e-6, 1.0 + 1e-4, 1.01, 1.1, 1.5, 2.0, 5.0, 10.0, 100.0,
                             1000.0};
    for (const double g : {1.1, 1.4, 5.0 / 3.0, 3.0}) {
        const GasModel gas(g);
        for (const double q : ratios) {
            for (const double c_u : {1.0, 0.6471}) {
                const double r = q * c_u;
                const double fe = envelope_rhs(gas, r, c_u, EnvelopeRhsMode::Explicit);
                const double fn = envelope_rhs(gas, r, c_u, EnvelopeRhsMode::Numeric);
                CHECK(std::abs(fe - fn) <= 1e-8 * fe);
            }
        }
    }
}

TEST_CASE("start on the circle terminates immediately") {
    const GasModel gas(1.4);
    EnvelopeOptions opts;
    const EnvelopeCurve env =
        integrate_envelope(gas, Vec2{1.0, 0.0}, Vec2{0.0, 0.0}, 1.0, opts);
    CHECK(env.termination == EnvelopeTermination::AtCircle);
    CHECK(env.points.size() == 1);
    CHECK_THROWS_AS(
        integrate_envelope(gas, Vec2{0.5, 0.0}, Vec2{0.0, 0.0}, 1.0, opts),
        CircleDomainError);
}

TEST_CASE("r decreases strictly and phi increases") {
    const GasModel gas(1.4);
    EnvelopeOptions opts;
    opts.stops.max_angle = 1.0;
    const EnvelopeCurve env =
        integrate_envelope(gas, Vec2{3.0, 0.0}, Vec2{0.0, 0.0}, 1.0, opts);
    CHECK(env.termination == EnvelopeTermination::MaxAngle);
    for (size_t i = 1; i < env.points.size(); ++i) {
        CHECK(env.points[i].phi > env.points[i - 1].phi);
        CHECK(env.points[i].r < env.points[i - 1].r);
    }
}

TEST_CASE("with no wall stops the envelope always reaches the circle") {
    for (const double g : {1.0, 1.2, 5.0 / 3.0, 3.0}) {
        const GasModel gas(g);
        EnvelopeOptions opts;
        opts.stops.max_angle = 50.0;
        const Vec2 center{0.4, -0.3};
        const EnvelopeCurve env =
            integrate_envelope(gas, center + Vec2{0.0, 1.7}, center, 1.0, opts);
        CHECK(env.termination == EnvelopeTermination::AtCircle);
        CHECK((env.end_point - center).norm() == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("integration is tolerance-independent") {
    const GasModel gas(5.0 / 3.0);
    EnvelopeOptions a, b;
    a.rel_tol = 1e-10;
    b.rel_tol = 5e-11;
    a.stops.max_angle = b.stops.max_angle = 1.2;
    const Vec2 start{2.3, 0.7}, center{0.9, 0.0};
    const EnvelopeCurve ea = integrate_envelope(gas, start, center, 1.0, a);
    const EnvelopeCurve eb = integrate_envelope(gas, start, center, 1.0, b);
    CHECK((ea.end_point - eb.end_point).norm() < 1e-9);
}

TEST_CASE("comparison verdicts") {
    const GasModel gas(5.0 / 3.0);
    EnvelopeOptions opts;
    opts.stops.max_angle = 1.5;
    const Vec2 center{0.0, 0.0};
    const double r0 = 2.0, phi0 = 0.7;
    const Vec2 start = center + r0 * unit_vector(phi0);
    const EnvelopeCurve env = integrate_envelope(gas, start, center, 1.0, opts);

    SUBCASE("envelope vs itself crosses (degenerate equality)") {
        CHECK(compare_shock_envelope(env.points, env) == CurveComparison::Crosses);
    }
    SUBCASE("envelope shifted outward is Outside") {
        std::vector<EnvelopePoint> shifted = env.points;
        for (auto& p : shifted) p.r += 1e-6;
        CHECK(compare_shock_envelope(shifted, env) == CurveComparison::Outside);
    }
    SUBCASE("synthetic L_d<1 curves stay outside, L_d>1 inside") {
        Rng rng(31);
        for (int i = 0; i < 20; ++i) {
            const double k_out = rng.uniform(0.5, 0.95);
            const auto outside = synthetic_curve(gas, k_out, phi0, r0, 1.0, 1.5);
            CHECK(compare_shock_envelope(outside, env) == CurveComparison::Outside);
        }
        for (int i = 0; i < 20; ++i) {
            const double k_in = rng.uniform(1.05, 1.5);
            const auto inside = synthetic_curve(gas, k_in, phi0, r0, 1.0, 1.5);
            CHECK(compare_shock_envelope(inside, env) == CurveComparison::Inside);
        }
    }
    SUBCASE("the tangent line (vanishing shock) lies inside the envelope") {
        // Straight line through the start point touching the circle: in polar
        // form r(phi) = c_u / cos(phi - phi_t) with phi_t = phi0 + arccos(c_u/r0).
        const double phi_t = phi0 + std::acos(1.0 / r0);
        std::vector<EnvelopePoint> line;
        for (int k = 0; k <= 400; ++k) {
            const double phi = phi0 + (phi_t - 1e-3 - phi0) * k / 400.0;
            line.push_back({phi, 1.0 / std::cos(phi - phi_t)});
        }
        CHECK(compare_shock_envelope(line, env) == CurveComparison::Inside);
    }
    SUBCASE("disjoint ranges raise") {
        std::vector<EnvelopePoint> far{{phi0 + 10.0, 2.0}, {phi0 + 11.0, 1.9}};
        CHECK_THROWS_AS(compare_shock_envelope(far, env), ParameterRangeError);
    }
}

TEST_CASE("isothermal gas integrates through the numeric RHS") {
    const GasModel gas(1.0);
    EnvelopeOptions opts;
    opts.stops.max_angle = 20.0;
    const EnvelopeCurve env =
        integrate_envelope(gas, Vec2{1.25, 0.0}, Vec2{0.0, 0.0}, 1.0, opts);
    CHECK(env.termination == EnvelopeTermination::AtCircle);
}
