#pragma once

#include "dmv/numerics.hpp"
#include "dmv/states.hpp"

#include <vector>

namespace dmv {

enum class GasVariant { ideal, monatomic_degenerate };

struct GasModelConfig {
    GasVariant variant = GasVariant::ideal;

    double c_v = 1.5;   // ideal gas: specific heat at constant volume, gamma = 1 + 1/c_v
    double p_bar = 1.0; // degenerate model: cold-pressure constant, > 0

    double quadrature_tol = 1e-10; // relative tolerance of internal quadratures

    // transport floors/caps: mu(theta) = mu_lower (1 + theta), eta = 0,
    // kappa(theta) = kappa_lower (1 + theta^3)
    double mu_lower = 0.1;
    double eta_bar = 0.0;
    double kappa_lower = 0.1;
};

struct TransportCoefficients {
    double mu, eta, kappa;
};

struct StabilityReport {
    double min_dp_drho = 0.0;
    double min_de_dtheta = 0.0; // over points where the difference is resolvable
    // grid points where e(rho, theta +- h) differ by less than one ulp: deep in
    // the degenerate regime the heat capacity ~ e^{-q} drops below double
    // resolution long before it reaches zero
    int theta_underflow_points = 0;
    bool pass = false;
};

struct ConcavityPoint {
    double Z = 0.0;
    double expression = 0.0; // (1-gamma) S'(Z) - gamma S''(Z) Z
    bool in_domain = true;
};

struct ConcavityReport {
    std::vector<ConcavityPoint> points;
    bool pass = false; // all in-domain points strictly positive
};

//=============================================================================
// GasModel
//=============================================================================

// Constitutive closure for both gas variants.
//
// Ideal gas:   p = rho theta,  e = c_v theta,  s = c_v log theta - log rho.
//
// Monatomic degenerate (gamma = 5/3):
//   p = theta^{5/2} P(q),  q = rho / theta^{3/2},
//   P(q) = q^{5/3} ( p_bar + I(q) ),   I(q) = \int_q^inf (2/3) r^{-5/3} e^{-r} dr,
//   e = (3/2) p / rho,     s = S(q) = E1(q).
// This P satisfies P(0) = 0, P' > 0, 0 < (5/3 P - P'q)/q = (2/3) e^{-q} <= 2/3
// and P(q)/q^{5/3} -> p_bar, and S obeys the third-law normalization S -> 0.
//
// Immutable after construction; the tail-integral interpolation cache is
// built eagerly, so a const GasModel is safe to share across threads.
class GasModel {
public:
    explicit GasModel(const GasModelConfig& config);

    const GasModelConfig& config() const { return cfg_; }
    GasVariant variant() const { return cfg_.variant; }
    double gamma() const { return gamma_; }
    double c_v() const { return 1.0 / (gamma_ - 1.0); }
    double p_bar() const; // 0 for the ideal gas

    // -- primitive-variable closure ------------------------------------------
    double pressure(double rho, double theta) const;
    double internal_energy(double rho, double theta) const;
    ExtendedReal specific_entropy(double rho, double theta) const; // rho = 0 -> +inf tag
    double de_dtheta(double rho, double theta) const;              // > 0 (stability)
    double drho_internal_energy(double rho, double theta) const;
    double drho_entropy(double rho, double theta) const;

    double pressure(const PrimitiveState& s) const { return pressure(s.rho, s.theta); }
    double internal_energy(const PrimitiveState& s) const { return internal_energy(s.rho, s.theta); }
    ExtendedReal specific_entropy(const PrimitiveState& s) const { return specific_entropy(s.rho, s.theta); }

    // -- structure function (degenerate model only) ---------------------------
    /// P(q) by adaptive quadrature of the defining integral (the cache-free
    /// reference path). P(0) = 0.
    double structure_P(double q) const;
    /// P'(q) = (5/3 P(q) - g(q)) / q with g(q) = (2/3) q e^{-q}.
    double structure_P_prime(double q) const;
    /// I(q) by adaptive quadrature.
    double tail_integral(double q) const;
    /// I(q) through the eagerly built Hermite cache (solver hot path).
    double tail_integral_cached(double q) const;

    // -- entropy in its two parametrizations ----------------------------------
    /// S as a function of q = rho / theta^{c_v}: -log q (ideal), E1(q) (degenerate).
    double entropy_q(double q) const;
    /// S as a function of Z = p / rho^gamma; -inf tag below the cold threshold.
    ExtendedReal entropy_Z(double Z) const;
    /// Inverse of the q <-> Z change of variables (Z = q^{1-gamma} along the
    /// ideal-gas isentrope structure; numeric inversion of p_bar + I(q) for
    /// the degenerate model). Requires Z > p_bar.
    double q_from_Z(double Z) const;

    // -- conservative variables ------------------------------------------------
    /// Total entropy S(rho, m, E) = rho S(Z), upper semicontinuous extension:
    /// 0 at the vacuum state (0, 0, E), -inf tag below the support threshold.
    ExtendedReal total_entropy(const ConservativeState& c) const;

    /// Unique theta with rho e(rho, theta) + a_rad theta^4 = E - m^2/(2 rho).
    double temperature_from_conservative(const ConservativeState& c, double a_rad) const;

    /// Remark-RM2 support condition E - m^2/(2 rho) >= p_bar/(gamma-1) rho^gamma.
    bool satisfies_support_condition(const ConservativeState& c, double rel_slack = 1e-9) const;
    /// Throws RejectedState on structural violations (vacuum with momentum,
    /// negative fields, non-finite input).
    void validate_state(const ConservativeState& c) const;

    // -- transport --------------------------------------------------------------
    TransportCoefficients transport(double theta) const;

    // -- hypothesis self-checks ---------------------------------------------------
    StabilityReport check_stability(const std::vector<double>& rho_samples,
                                    const std::vector<double>& theta_samples) const;
    ConcavityReport check_concavity_condition(const std::vector<double>& Z_grid) const;
    /// max_{direction in {rho, theta}} |theta Ds - De - p D(1/rho)| / e(rho, theta),
    /// central differences with relative step 1e-5.
    double gibbs_residual(double rho, double theta) const;

private:
    GasModelConfig cfg_;
    double gamma_ = 0.0;
    num::HermiteTable tail_table_; // x = log q  ->  log( I(q) e^q )

    void build_tail_cache();
    double tail_scaled_quadrature(double q) const; // J(q) = I(q) e^q
    double tail_series(double q) const;            // small-q expansion of I
};

} // namespace dmv
