#include "doctest.h"

#include "dmv/relative_energy.hpp"

#include <cmath>
#include <random>

using namespace dmv;

namespace {

const GasModel& make_gas(GasVariant variant) {
    static const GasModel ideal{GasModelConfig{}};
    static const GasModel degenerate{[] {
        GasModelConfig cfg;
        cfg.variant = GasVariant::monatomic_degenerate;
        return cfg;
    }()};
    return variant == GasVariant::ideal ? ideal : degenerate;
}

} // namespace

TEST_CASE("relative energy vanishes for identical states") {
    const auto& gas = make_gas(GasVariant::ideal);
    const PrimitiveState s{1.3, 0.8, -0.2};
    CHECK(relative_energy_primitive(gas, s, s).value.require_finite() == 0.0);
    const auto c = conservative_from_primitive(gas, s);
    CHECK(relative_energy_conservative(gas, c, c).value.require_finite() == 0.0);
}

TEST_CASE("velocity-only perturbation gives exactly the kinetic term") {
    const auto& gas = make_gas(GasVariant::ideal);
    const double delta = 0.25;
    const auto v = relative_energy_primitive(gas, {1.0, 1.0, delta}, {1.0, 1.0, 0.0});
    CHECK(v.value.require_finite() == 0.5 * delta * delta);
}

TEST_CASE("frozen hand-evaluated oracle value") {
    // direct evaluation of the H_theta~ expression for c_v = 3/2,
    // state (1.2, 0.9, 0.3) against reference (1, 1, 0), computed independently
    const auto& gas = make_gas(GasVariant::ideal);
    const auto v = relative_energy_primitive(gas, {1.2, 0.9, 0.3}, {1.0, 1.0, 0.0});
    CHECK(num::rel_diff(v.value.require_finite(), 0.08243479633683289) < 1e-12);
    CHECK(v.value.require_finite() > 0.0);
}

TEST_CASE("identity between primitive and conservative forms, ideal gas") {
    const auto& gas = make_gas(GasVariant::ideal);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> rho_d(0.3, 3.0), th_d(0.3, 3.0), u_d(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const PrimitiveState a{rho_d(rng), th_d(rng), u_d(rng)};
        const PrimitiveState b{rho_d(rng), th_d(rng), u_d(rng)};
        const double prim = relative_energy_primitive(gas, a, b).value.require_finite();
        const double cons = relative_energy_conservative(gas, conservative_from_primitive(gas, a),
                                                         conservative_from_primitive(gas, b))
                                .value.require_finite();
        CHECK(num::rel_diff(prim, cons) < 1e-10);
    }
}

TEST_CASE("identity between primitive and conservative forms, degenerate gas") {
    const auto& gas = make_gas(GasVariant::monatomic_degenerate);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> rho_d(0.3, 3.0), th_d(0.3, 3.0), u_d(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const PrimitiveState a{rho_d(rng), th_d(rng), u_d(rng)};
        const PrimitiveState b{rho_d(rng), th_d(rng), u_d(rng)};
        const double prim = relative_energy_primitive(gas, a, b).value.require_finite();
        const double cons = relative_energy_conservative(gas, conservative_from_primitive(gas, a),
                                                         conservative_from_primitive(gas, b))
                                .value.require_finite();
        CHECK(num::rel_diff(prim, cons) < 1e-6);
    }
}

TEST_CASE("closed-form entropy gradient matches the finite-difference audit") {
    for (auto variant : {GasVariant::ideal, GasVariant::monatomic_degenerate}) {
        const auto& gas = make_gas(variant);
        const auto c = conservative_from_primitive(gas, {1.4, 1.1, 0.6});
        const auto g_cf = total_entropy_gradient(gas, c, GradientMode::closed_form);
        const auto g_fd = total_entropy_gradient(gas, c, GradientMode::finite_difference);
        CHECK(num::rel_diff(g_cf.d_rho, g_fd.d_rho) < 1e-7);
        CHECK(num::rel_diff(g_cf.d_m, g_fd.d_m) < 1e-7);
        CHECK(num::rel_diff(g_cf.d_E, g_fd.d_E) < 1e-7);

        const auto b = conservative_from_primitive(gas, {0.9, 0.7, -0.4});
        const double cons_cf = relative_energy_conservative(gas, b, c, GradientMode::closed_form)
                                   .value.require_finite();
        const double cons_fd = relative_energy_conservative(gas, b, c, GradientMode::finite_difference)
                                   .value.require_finite();
        CHECK(num::rel_diff(cons_cf, cons_fd) < 1e-6);
    }
}

TEST_CASE("nonnegativity of the conservative form on random pairs") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> rho_d(0.2, 4.0), th_d(0.2, 4.0), u_d(-2.0, 2.0);
    for (auto variant : {GasVariant::ideal, GasVariant::monatomic_degenerate}) {
        const auto& gas = make_gas(variant);
        for (int i = 0; i < 10000; ++i) {
            const auto a = conservative_from_primitive(gas, {rho_d(rng), th_d(rng), u_d(rng)});
            const auto b = conservative_from_primitive(gas, {rho_d(rng), th_d(rng), u_d(rng)});
            CHECK(relative_energy_conservative(gas, a, b).value.require_finite() >= -1e-12);
        }
    }
}

TEST_CASE("extended states map to +inf relative energy") {
    const auto& gas = make_gas(GasVariant::monatomic_degenerate);
    const auto ref = conservative_from_primitive(gas, {1.0, 1.0, 0.0});
    // internal energy below the cold floor: -inf entropy, +inf distance
    const ConservativeState below{1.0, 0.0, 1.0};
    CHECK(relative_energy_conservative(gas, below, ref).value.tag == Tag::pos_inf);
}

TEST_CASE("local quadratic behavior near the reference") {
    const auto& gas = make_gas(GasVariant::ideal);
    const PrimitiveState ref{1.0, 1.0, 0.0};
    const PrimitiveState dir{0.3, -0.2, 0.5}; // direction in (rho, theta, u)
    auto value_at = [&](double t) {
        const PrimitiveState s{ref.rho + t * dir.rho, ref.theta + t * dir.theta, ref.u + t * dir.u};
        return relative_energy_primitive(gas, s, ref).value.require_finite();
    };
    const double r3 = value_at(1e-3) / 1e-6;
    const double r4 = value_at(1e-4) / 1e-8;
    CHECK(num::rel_diff(r3, r4) < 0.05);
}
