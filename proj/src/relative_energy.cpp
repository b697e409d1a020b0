#include "dmv/relative_energy.hpp"

#include <cmath>

namespace dmv {

ConservativeState conservative_from_primitive(const GasModel& model, const PrimitiveState& s) {
    if (!s.valid()) throw std::domain_error("conservative_from_primitive: invalid primitive state");
    const double m = s.rho * s.u;
    const double E = 0.5 * s.rho * s.u * s.u + s.rho * model.internal_energy(s.rho, s.theta);
    return {s.rho, m, E};
}

PrimitiveState primitive_from_conservative(const GasModel& model, const ConservativeState& c) {
    if (!(c.rho > 0.0)) throw std::domain_error("primitive_from_conservative: requires rho > 0");
    return {c.rho, model.temperature_from_conservative(c, 0.0), c.m / c.rho};
}

namespace {

double H_at(const GasModel& model, double rho, double theta, double theta_ref) {
    return rho * (model.internal_energy(rho, theta) -
                  theta_ref * model.specific_entropy(rho, theta).require_finite("entropy"));
}

} // namespace

RelativeEnergyValue relative_energy_primitive(const GasModel& model,
                                              const PrimitiveState& state,
                                              const PrimitiveState& reference) {
    if (!(reference.rho > 0.0) || !(reference.theta > 0.0))
        throw std::domain_error("relative_energy_primitive: vacuum reference");
    if (!(state.rho > 0.0) || !(state.theta > 0.0))
        throw std::domain_error("relative_energy_primitive: requires interior state");

    const double tt = reference.theta;
    const double kinetic = 0.5 * state.rho * (state.u - reference.u) * (state.u - reference.u);

    // d_rho H = e + rho de/drho - theta~ (s + rho ds/drho), all at the reference
    const double e_ref = model.internal_energy(reference.rho, reference.theta);
    const double s_ref = model.specific_entropy(reference.rho, reference.theta).require_finite("entropy");
    const double dH = e_ref + reference.rho * model.drho_internal_energy(reference.rho, reference.theta) -
                      tt * (s_ref + reference.rho * model.drho_entropy(reference.rho, reference.theta));

    const double value = kinetic + H_at(model, state.rho, state.theta, tt) -
                         dH * (state.rho - reference.rho) -
                         H_at(model, reference.rho, reference.theta, tt);
    return {ExtendedReal::finite(value), RelEnergyForm::primitive};
}

TotalEntropyGradient total_entropy_gradient(const GasModel& model, const ConservativeState& c,
                                            GradientMode mode) {
    if (!(c.rho > 0.0)) throw std::domain_error("total_entropy_gradient: requires rho > 0");

    if (mode == GradientMode::finite_difference) {
        auto S = [&](const ConservativeState& x) {
            return model.total_entropy(x).require_finite("total_entropy");
        };
        const double hr = 1e-6 * std::max(std::abs(c.rho), 1.0);
        const double hm = 1e-6 * std::max(std::abs(c.m), 1.0);
        const double hE = 1e-6 * std::max(std::abs(c.E), 1.0);
        return {(S({c.rho + hr, c.m, c.E}) - S({c.rho - hr, c.m, c.E})) / (2.0 * hr),
                (S({c.rho, c.m + hm, c.E}) - S({c.rho, c.m - hm, c.E})) / (2.0 * hm),
                (S({c.rho, c.m, c.E + hE}) - S({c.rho, c.m, c.E - hE})) / (2.0 * hE)};
    }

    // Gibbs identities: dS/dE = 1/theta, dS/dm = -u/theta,
    // dS/drho = s - (e + p/rho)/theta + u^2/(2 theta)
    const double theta = model.temperature_from_conservative(c, 0.0);
    const double u = c.m / c.rho;
    const double e = model.internal_energy(c.rho, theta);
    const double p = model.pressure(c.rho, theta);
    const double s = model.specific_entropy(c.rho, theta).require_finite("entropy");
    return {s - (e + p / c.rho) / theta + 0.5 * u * u / theta, -u / theta, 1.0 / theta};
}

RelativeEnergyValue relative_energy_conservative(const GasModel& model,
                                                 const ConservativeState& state,
                                                 const ConservativeState& reference,
                                                 GradientMode mode) {
    if (!(reference.rho > 0.0))
        throw std::domain_error("relative_energy_conservative: vacuum reference");

    const ExtendedReal S_ref = model.total_entropy(reference);
    if (!S_ref.is_finite())
        throw std::domain_error("relative_energy_conservative: reference outside the interior");

    const ExtendedReal S_state = model.total_entropy(state);
    if (!S_state.is_finite())
        return {ExtendedReal::pos_inf(), RelEnergyForm::conservative}; // distance role: -inf entropy is infinitely far

    const double theta_ref = model.temperature_from_conservative(reference, 0.0);
    const TotalEntropyGradient g = total_entropy_gradient(model, reference, mode);

    const double bracket = S_state.value - g.d_rho * (state.rho - reference.rho) -
                           g.d_m * (state.m - reference.m) - g.d_E * (state.E - reference.E) -
                           S_ref.value;
    return {ExtendedReal::finite(-theta_ref * bracket), RelEnergyForm::conservative};
}

} // namespace dmv
