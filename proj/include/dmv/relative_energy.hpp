#pragma once

#include "dmv/gas_model.hpp"
#include "dmv/states.hpp"

namespace dmv {

enum class RelEnergyForm { primitive, conservative };

/// How the total-entropy gradient entering the conservative (Bregman) form is
/// obtained: closed forms via the Gibbs identities, or a central-difference
/// audit path used to cross-check them.
enum class GradientMode { closed_form, finite_difference };

struct RelativeEnergyValue {
    ExtendedReal value; // >= 0 on the interior of the domain
    RelEnergyForm form = RelEnergyForm::primitive;
};

/// 1/2 rho |u - u~|^2 + H(rho, theta) - d_rho H(rho~, theta~)(rho - rho~) - H(rho~, theta~)
/// with H(rho, theta) = rho (e - theta~ s).
RelativeEnergyValue relative_energy_primitive(const GasModel& model,
                                              const PrimitiveState& state,
                                              const PrimitiveState& reference);

/// The Bregman form -theta~ [ S(U) - dS(U~) . (U - U~) - S(U~) ] built on the
/// concave total entropy; theta~ is recovered from the reference state.
/// States carrying a -inf entropy tag map to +inf relative energy.
RelativeEnergyValue relative_energy_conservative(const GasModel& model,
                                                 const ConservativeState& state,
                                                 const ConservativeState& reference,
                                                 GradientMode mode = GradientMode::closed_form);

/// Gradient of the total entropy at an interior state (exposed for tests).
struct TotalEntropyGradient {
    double d_rho, d_m, d_E;
};
TotalEntropyGradient total_entropy_gradient(const GasModel& model,
                                            const ConservativeState& c,
                                            GradientMode mode = GradientMode::closed_form);

ConservativeState conservative_from_primitive(const GasModel& model, const PrimitiveState& s);
PrimitiveState primitive_from_conservative(const GasModel& model, const ConservativeState& c);

} // namespace dmv
