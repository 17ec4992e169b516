#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "shockfront/gas.hpp"

using namespace shockfront;
using shockfront::testing::Rng;

TEST_CASE("pi at reference and direct substitutions") {
    CHECK(pi(GasModel(1.4), 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(pi(GasModel(2.0), 2.0) == doctest::Approx(1.0).epsilon(1e-14));     // (2^1-1)/1
    CHECK(pi(GasModel(1.0), std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pi rejects non-positive density") {
    const GasModel gas(1.4);
    CHECK_THROWS_AS(pi(gas, 0.0), DomainError);
    CHECK_THROWS_AS(pi(gas, -1.0), DomainError);
    CHECK_THROWS_AS(sound_speed(gas, 0.0), DomainError);
}

TEST_CASE("pi_inv inverts pi and hits the vacuum bound") {
    CHECK(pi_inv(GasModel(1.4), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pi_inv(GasModel(2.0), 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    const GasModel gas(5.0 / 3.0);
    CHECK_THROWS_AS(pi_inv(gas, vacuum_bound(gas)), VacuumError);
    CHECK_THROWS_AS(pi_inv(gas, vacuum_bound(gas) - 0.1), VacuumError);
    // isothermal gas never reaches vacuum
    CHECK(pi_inv(GasModel(1.0), -300.0) > 0.0);
}

TEST_CASE("sound speed closed form") {
    CHECK(sound_speed(GasModel(1.4), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sound_speed(GasModel(3.0), 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sound_speed(GasModel(1.0), 7.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pi is strictly monotone in rho") {
    for (const double g : {1.0, 1.4, 5.0 / 3.0, 3.0}) {
        const GasModel gas(g);
        Rng rng(42 + static_cast<std::uint64_t>(g * 1000));
        for (int i = 0; i < 1000; ++i) {
            double a = rng.uniform(1e-3, 1e3);
            double b = rng.uniform(1e-3, 1e3);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            CHECK(pi(gas, b) > pi(gas, a));
        }
    }
}

TEST_CASE("pi_inv(pi(rho)) round trip") {
    // Near the vacuum bound (large gamma, tiny rho) the inverse map has
    // condition number d(rho)/d(q) = rho^(2-gamma), so one ulp of q already
    // moves rho by more than 1e-10 rho; allow that unavoidable term.
    for (const double g : {1.0, 1.4, 5.0 / 3.0, 3.0}) {
        const GasModel gas(g);
        for (double rho = 1e-4; rho <= 1e4; rho *= 2.7) {
            const double q = pi(gas, rho);
            const double back = pi_inv(gas, q);
            const double cond =
                std::abs(q) * 2.3e-16 * std::pow(rho, 2.0 - gas.gamma);
            CHECK(std::abs(back - rho) <= 1e-10 * rho + 8.0 * cond);
        }
    }
}

TEST_CASE("pi is continuous in gamma at gamma = 1") {
    const GasModel iso(1.0);
    const GasModel near(1.0 + 1e-9);
    for (double rho = 0.1; rho <= 10.0; rho *= 1.37) {
        CHECK(std::abs(pi(near, rho) - pi(iso, rho)) <= 1e-6);
    }
}

TEST_CASE("c^2 = c_ref^2 + (gamma-1) pi(rho)") {
    for (const double g : {1.0, 1.4, 5.0 / 3.0, 3.0}) {
        const GasModel gas(g);
        for (double rho = 0.02; rho <= 50.0; rho *= 1.9) {
            const double c = sound_speed(gas, rho);
            const double rhs = gas.c_ref * gas.c_ref + (gas.gamma - 1.0) * pi(gas, rho);
            CHECK(std::abs(c * c - rhs) <= 1e-12 * std::max(1.0, rhs));
        }
    }
}

TEST_CASE("pressure is the polytropic law") {
    const GasModel gas(1.4);
    CHECK(pressure(gas, 1.0) == doctest::Approx(1.0 / 1.4).epsilon(1e-15));
    // p'(rho)/rho integrates to pi: check p' = rho pi' = c^2 numerically
    const double h = 1e-6;
    const double dp = (pressure(gas, 2.0 + h) - pressure(gas, 2.0 - h)) / (2.0 * h);
    const double c = sound_speed(gas, 2.0);
    CHECK(dp == doctest::Approx(c * c).epsilon(1e-8));
}

TEST_CASE("GasModel validates its parameters") {
    CHECK_THROWS_AS(GasModel(0.9), DomainError);
    CHECK_THROWS_AS(GasModel(1.4, -1.0), DomainError);
    CHECK_THROWS_AS(GasModel(1.4, 1.0, 0.0), DomainError);
}
