#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "shockfront/reflection.hpp"

using namespace shockfront;
using namespace shockfront::testing;

namespace {
constexpr double kDeg = 57.29577951308232;
}

TEST_CASE("local RR at the sonic angle: tangency and slip") {
    const GasModel gas(5.0 / 3.0);
    const double ths = theta_sonic(gas, 1.0, 0.0);
    CHECK(ths * kDeg == doctest::Approx(55.4583).epsilon(2e-4));

    const RRConfiguration cfg = build_local_rr(gas, 1.0, 0.0, ths);
    CHECK(std::abs(cfg.L_R - 1.0) <= 1e-8);
    CHECK((cfg.xi_C0 - cfg.xi_R).norm() <= 1e-6);
    CHECK(cfg.verdicts.vInB_ok);

    // slip: downstream velocity tangential to wall B
    const Vec2 n_B{std::sin(cfg.theta), -std::cos(cfg.theta)};
    CHECK(std::abs(dot(cfg.reflected.downstream.v, n_B)) <= 1e-10);

    // just above the sonic angle the criterion holds
    const RRConfiguration above = build_local_rr(gas, 1.0, 0.0, ths + 0.01);
    CHECK(above.verdicts.sonic_ok);
    CHECK(above.L_R > 1.0);

    // slip residual across a range of wedge angles
    for (double deg = 55.0; deg <= 75.0; deg += 5.0) {
        const RRConfiguration c = build_local_rr(gas, 1.0, 0.0, deg / kDeg);
        CHECK(std::abs(dot(c.reflected.downstream.v, Vec2{std::sin(c.theta),
                                                          -std::cos(c.theta)})) <= 1e-10);
    }
}

TEST_CASE("build_local_rr failure modes") {
    const GasModel gas(5.0 / 3.0);
    CHECK_THROWS_AS(build_local_rr(gas, 1.0, 0.0, 53.0 / kDeg), NoReflectedShockError);
    CHECK_THROWS_AS(build_local_rr(gas, 1.0, 0.0, 20.0 / kDeg), SubsonicUpstreamError);
    CHECK_THROWS_AS(build_local_rr(GasModel(3.0), 1.5, 0.0, 1.0), NoIncidentShockError);
    CHECK_THROWS_AS(build_local_rr(gas, 1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("sonic points: tangent, through-center, and scan oracle") {
    const GasModel gas(5.0 / 3.0);

    SUBCASE("epsilon chosen so the circle is tangent to the line") {
        const ShockSolution sol = downstream_state(gas, FlowState{1.0, Vec2{0.6, -2.0}},
                                                   Vec2{0.1, 0.2}, Vec2{0, -1});
        const double c_d = sound_speed(gas, sol.downstream.rho);
        const double eps = 1.0 - (sol.zn_d / c_d) * (sol.zn_d / c_d) - 1e-14;
        const SonicPoints pts = sonic_points(gas, sol, eps);
        CHECK((pts.xi_L - pts.xi_R_pt).norm() <= 1e-6);
    }
    SUBCASE("line through the center gives symmetric points") {
        ShockSolution fake;
        fake.xi = Vec2{0.5, -0.25};
        fake.n = Vec2{0, -1};
        fake.t = fake.n.perp();
        fake.downstream = FlowState{2.0, fake.xi};  // v_d = xi: zero pseudo-velocity
        const double radius = sound_speed(gas, 2.0);
        const SonicPoints pts = sonic_points(gas, fake, 0.0);
        CHECK((pts.xi_L - fake.xi).norm() == doctest::Approx(radius).epsilon(1e-12));
        CHECK((pts.xi_R_pt - fake.xi).norm() == doctest::Approx(radius).epsilon(1e-12));
        CHECK(dot(pts.xi_L - fake.xi, pts.xi_R_pt - fake.xi) ==
              doctest::Approx(-radius * radius).epsilon(1e-12));
    }
    SUBCASE("dense scan of L_d along the reflected shock at theta = 60 deg") {
        const RRConfiguration cfg = build_local_rr(gas, 1.0, 0.0, 60.0 / kDeg);
        const SonicPoints pts = sonic_points(gas, cfg.reflected, 0.0);
        const auto L_at = [&](double s) {
            const Vec2 p = cfg.xi_R + s * cfg.reflected.t;
            return (cfg.reflected.downstream.v - p).norm() /
                   sound_speed(gas, cfg.reflected.downstream.rho);
        };
        // scan a wide parameter window for |L_d - 1| crossings
        double best_lo = 0, best_hi = 0;
        int found = 0;
        double prev_s = -6.0, prev_v = L_at(-6.0) - 1.0;
        for (int i = 1; i <= 1'000'000; ++i) {
            const double s = -6.0 + 12.0 * i / 1e6;
            const double v = L_at(s) - 1.0;
            if ((prev_v > 0) != (v > 0)) {
                (found == 0 ? best_lo : best_hi) = 0.5 * (prev_s + s);
                ++found;
            }
            prev_s = s;
            prev_v = v;
        }
        REQUIRE(found == 2);
        const double s_L = dot(pts.xi_L - cfg.xi_R, cfg.reflected.t);
        const double s_R = dot(pts.xi_R_pt - cfg.xi_R, cfg.reflected.t);
        CHECK(std::abs(s_L - best_lo) <= 1e-4);
        CHECK(std::abs(s_R - best_hi) <= 1e-4);
        // the library solves the quadratic far tighter than the scan
        CHECK(std::abs(L_at(s_L) - 1.0) <= 1e-12);
        CHECK(std::abs(L_at(s_R) - 1.0) <= 1e-12);
    }
    SUBCASE("vanishing shock line is tangent at eps = 0 and misses for eps > 0") {
        const ShockSolution vanish = downstream_state(
            gas, FlowState{1.0, Vec2{0.0, -1.0}}, Vec2{0, 0}, Vec2{0, -1});
        const SonicPoints touch = sonic_points(gas, vanish, 0.0);
        CHECK((touch.xi_L - touch.xi_R_pt).norm() <= 1e-6);
        CHECK_THROWS_AS(sonic_points(gas, vanish, 0.5), NoSonicPointError);
    }
}

TEST_CASE("vdzero shock: root, symmetry, monotonicity") {
    const GasModel gas(5.0 / 3.0);

    const VdZeroResult base = vdzero_shock(gas, -2.0, 1.0, 0.0);
    CHECK(std::abs(base.downstream.v.y) <= 1e-10);
    // cross-check through downstream_state at the root
    const ShockSolution sol = downstream_state(gas, FlowState{1.0, Vec2{0.0, -2.0}},
                                               Vec2{0.0, base.eta_star}, Vec2{0, -1});
    const auto [mass, bern] = shock_residual(gas, sol);
    CHECK(std::abs(mass) <= 1e-10);
    CHECK(std::abs(bern) <= 1e-10);
    CHECK(std::abs(sol.downstream.v.y) <= 1e-9);

    const VdZeroResult plus = vdzero_shock(gas, -2.0, 1.0, 0.4);
    const VdZeroResult minus = vdzero_shock(gas, -2.0, 1.0, -0.4);
    CHECK(plus.eta_star == doctest::Approx(minus.eta_star).epsilon(1e-11));

    double prev = base.eta_star;
    for (double beta = 0.1; beta <= 1.2 + 1e-9; beta += 0.1) {
        const double eta = vdzero_shock(gas, -2.0, 1.0, beta).eta_star;
        CHECK(eta > prev);
        prev = eta;
    }

    CHECK_THROWS_AS(vdzero_shock(gas, 2.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(vdzero_shock(gas, -2.0, 1.0, 1.6), DomainError);
}

TEST_CASE("transition angles at the monatomic reference point") {
    const GasModel gas(5.0 / 3.0);
    const TransitionAngles ta = transition_angles(gas, 1.0, 0.0);
    CHECK(ta.theta_s * kDeg == doctest::Approx(55.4583).epsilon(2e-4));
    CHECK(ta.theta_d <= ta.theta_s);
    // the perpendicular Mach-stem pressure never matches here
    CHECK(!ta.theta_N.has_value());
}

TEST_CASE("near-acoustic incident shocks have no von Neumann angle") {
    const GasModel gas(5.0 / 3.0);
    const TransitionAngles ta = transition_angles(gas, 1e-3, 0.0);
    CHECK(!ta.theta_N.has_value());
    CHECK(ta.theta_d <= ta.theta_s);
}

TEST_CASE("envelope condition across the coverage examples") {
    SUBCASE("gamma = 5/3 is covered") {
        const GasModel gas(5.0 / 3.0);
        const double ths = theta_sonic(gas, 1.0, 0.0);
        const RRConfiguration cfg = build_local_rr(gas, 1.0, 0.0, ths);
        const EnvelopeCheck chk = check_envelope_condition(cfg);
        CHECK(chk.ok);
        CHECK(chk.termination == EnvelopeTermination::HitWallA);
        CHECK(chk.end_point.x < 0.0);
        CHECK(std::abs(chk.end_point.x) <= 1e-3);
        CHECK(std::abs(chk.end_point.y) <= 1e-9);
    }
    SUBCASE("gamma = 7/5 is not covered") {
        const GasModel gas(7.0 / 5.0);
        const double ths = theta_sonic(gas, 1.0, 0.0);
        const RRConfiguration cfg = build_local_rr(gas, 1.0, 0.0, ths);
        CHECK(!cfg.verdicts.envelope_ok);
    }
    SUBCASE("start on the I-sonic circle fails immediately") {
        const GasModel gas(5.0 / 3.0);
        const double ths = theta_sonic(gas, 1.0, 0.0);
        RRConfiguration cfg = build_local_rr(gas, 1.0, 0.0, ths);
        cfg.xi_C0 = cfg.v_I + Vec2{0.6, 0.8};  // exactly on the unit circle
        const EnvelopeCheck chk = check_envelope_condition(cfg);
        CHECK(!chk.ok);
        CHECK(chk.termination == EnvelopeTermination::AtCircle);
    }
    SUBCASE("verdict is invariant under tolerance halving") {
        for (const double g : {5.0 / 3.0, 7.0 / 5.0}) {
            const GasModel gas(g);
            const double ths = theta_sonic(gas, 1.0, 0.0);
            const RRConfiguration cfg = build_local_rr(gas, 1.0, 0.0, ths);
            EnvelopeOptions opts;
            opts.stops.wallA = cfg.wallA;
            opts.stops.wallB = cfg.wallB;
            opts.rel_tol = 1e-10;
            const auto t1 = integrate_envelope(gas, cfg.xi_C0, cfg.v_I, 1.0, opts).termination;
            opts.rel_tol = 5e-11;
            const auto t2 = integrate_envelope(gas, cfg.xi_C0, cfg.v_I, 1.0, opts).termination;
            CHECK(t1 == t2);
        }
    }
}

TEST_CASE("feasibility scan statuses and ordering") {
    const double gammas[] = {4.0 / 3.0, 5.0 / 3.0};
    const double mis[] = {1.0};
    const auto records = feasibility_scan(gammas, mis);
    REQUIRE(records.size() == 2);
    CHECK(records[0].gamma == doctest::Approx(4.0 / 3.0));
    CHECK(records[0].status == FeasibilityStatus::EnvelopeFails);
    CHECK(records[1].status == FeasibilityStatus::Feasible);
    REQUIRE(records[1].theta_s.has_value());
    CHECK(*records[1].theta_s * kDeg == doctest::Approx(55.4583).epsilon(2e-4));

    const FeasibilityRecord vac = classify_feasibility(3.0, 1.5);
    CHECK(vac.status == FeasibilityStatus::NoIncidentShock);
    CHECK(!vac.theta_s.has_value());
}

TEST_CASE("tilted incident shock reduces to the vertical one as beta_Q -> 0") {
    const GasModel gas(5.0 / 3.0);
    const RRConfiguration v = build_local_rr(gas, 1.0, 0.0, 1.0);
    const RRConfiguration t = build_local_rr(gas, 1.0, 1e-9, 1.0);
    CHECK((t.xi_R - v.xi_R).norm() <= 1e-6);
    CHECK(t.incident.rho_Q == doctest::Approx(v.incident.rho_Q).epsilon(1e-6));
    CHECK(t.L_R == doctest::Approx(v.L_R).epsilon(1e-6));

    // a genuinely tilted configuration still satisfies slip on wall B
    const RRConfiguration s = build_local_rr(gas, 1.0, 0.15, 1.0);
    const Vec2 n_B{std::sin(s.theta), -std::cos(s.theta)};
    CHECK(std::abs(dot(s.reflected.downstream.v, n_B)) <= 1e-10);
    CHECK(s.incident.rho_Q > 0.0);
}

TEST_CASE("obtuse wedge angles work with incidents tilted toward wall A") {
    const GasModel gas(5.0 / 3.0);
    const RRConfiguration c = build_local_rr(gas, 1.0, -0.5, 2.0);
    CHECK(c.L_R > 1.0);
    const Vec2 n_B{std::sin(c.theta), -std::cos(c.theta)};
    CHECK(std::abs(dot(c.reflected.downstream.v, n_B)) <= 1e-10);
    // a vertical incident shock cannot meet a wall at theta >= pi/2
    CHECK_THROWS_AS(build_local_rr(gas, 1.0, 0.0, 1.7), GeometryError);
}
