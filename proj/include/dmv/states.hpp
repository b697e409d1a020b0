#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace dmv {

/// Thrown when a state violates a structural precondition (e.g. vacuum with
/// nonzero momentum) rather than merely hitting an extended value.
struct RejectedState : std::domain_error {
    using std::domain_error::domain_error;
};

//=============================================================================
// Tagged extended reals
//=============================================================================

// Entropy and kinetic energy take values in [-inf, inf) / [0, inf]. Extended
// values travel as explicit tags so they never enter arithmetic as IEEE
// infinities by accident.
enum class Tag { finite, pos_inf, neg_inf };

struct ExtendedReal {
    double value = 0.0;
    Tag tag = Tag::finite;

    static ExtendedReal finite(double v) { return {v, Tag::finite}; }
    static ExtendedReal pos_inf() { return {0.0, Tag::pos_inf}; }
    static ExtendedReal neg_inf() { return {0.0, Tag::neg_inf}; }

    bool is_finite() const { return tag == Tag::finite; }

    /// Finite payload; throws if the value is an infinity tag.
    double require_finite(const char* what = "extended value") const {
        if (!is_finite()) throw std::domain_error(std::string(what) + ": not finite");
        return value;
    }
};

//=============================================================================
// Fluid states
//=============================================================================

struct PrimitiveState {
    double rho = 0.0;   // mass density, >= 0
    double theta = 0.0; // absolute temperature, > 0
    double u = 0.0;     // velocity

    bool valid() const {
        return std::isfinite(rho) && std::isfinite(theta) && std::isfinite(u) &&
               rho >= 0.0 && theta > 0.0;
    }
};

struct ConservativeState {
    double rho = 0.0; // density, >= 0
    double m = 0.0;   // momentum density
    double E = 0.0;   // total energy density, >= 0
};

/// Kinetic energy density 1/2 m^2 / rho with the lower semicontinuous
/// convention: 0 whenever m = 0 (any rho >= 0), +inf for rho = 0, m != 0.
inline ExtendedReal kinetic_energy_density(double rho, double m) {
    if (m == 0.0) return ExtendedReal::finite(0.0);
    if (rho <= 0.0) return ExtendedReal::pos_inf();
    return ExtendedReal::finite(0.5 * m * m / rho);
}

inline ExtendedReal kinetic_energy_density(const ConservativeState& c) {
    return kinetic_energy_density(c.rho, c.m);
}

} // namespace dmv
