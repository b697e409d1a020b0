#include "dmv/gas_model.hpp"

#include <cmath>
#include <limits>

namespace dmv {

namespace {

constexpr double tail_log_q_min = -12.0;
constexpr double tail_log_q_max = 8.0;
constexpr int tail_nodes = 4001;

void require_finite_pair(double rho, double theta, const char* who) {
    if (!std::isfinite(rho) || !std::isfinite(theta))
        throw std::domain_error(std::string(who) + ": non-finite input");
}

} // namespace

//=============================================================================
// construction
//=============================================================================

GasModel::GasModel(const GasModelConfig& config) : cfg_(config) {
    if (cfg_.variant == GasVariant::ideal) {
        if (!(cfg_.c_v > 0.0)) throw std::invalid_argument("GasModel: c_v must be > 0");
        gamma_ = 1.0 + 1.0 / cfg_.c_v;
    } else {
        if (!(cfg_.p_bar > 0.0)) throw std::invalid_argument("GasModel: p_bar must be > 0");
        gamma_ = 5.0 / 3.0;
    }
    if (!(cfg_.mu_lower > 0.0)) throw std::invalid_argument("GasModel: mu_lower must be > 0");
    if (!(cfg_.kappa_lower > 0.0)) throw std::invalid_argument("GasModel: kappa_lower must be > 0");
    if (cfg_.eta_bar < 0.0) throw std::invalid_argument("GasModel: eta_bar must be >= 0");
    if (!(cfg_.quadrature_tol > 0.0 && cfg_.quadrature_tol <= 1e-4))
        throw std::invalid_argument("GasModel: quadrature_tol out of range");

    if (cfg_.variant == GasVariant::monatomic_degenerate) build_tail_cache();
}

double GasModel::p_bar() const {
    return cfg_.variant == GasVariant::monatomic_degenerate ? cfg_.p_bar : 0.0;
}

//=============================================================================
// tail integral I(q) = \int_q^inf (2/3) r^{-5/3} e^{-r} dr
//=============================================================================

// Scaled variant J(q) = I(q) e^q = \int_0^inf (2/3)(q+s)^{-5/3} e^{-s} ds stays
// in range for all q, so log J is the tabulated quantity.
double GasModel::tail_scaled_quadrature(double q) const {
    if (!(q > 0.0)) throw std::domain_error("tail integral: requires q > 0");
    auto integrand = [q](double s) { return (2.0 / 3.0) * std::pow(q + s, -5.0 / 3.0) * std::exp(-s); };
    return num::integrate_gk15(integrand, 0.0, 60.0, 0.1 * cfg_.quadrature_tol);
}

double GasModel::tail_series(double q) const {
    // I(q) = q^{-2/3} - Gamma(1/3) + sum_{n>=1} (2/3)(-1)^{n+1} q^{n-2/3} / (n! (n-2/3))
    double sum = std::pow(q, -2.0 / 3.0) - num::gamma_onethird;
    double fact = 1.0, sign = 1.0;
    for (int n = 1; n <= 12; ++n) {
        fact *= static_cast<double>(n);
        const double term =
            sign * (2.0 / 3.0) * std::pow(q, static_cast<double>(n) - 2.0 / 3.0) /
            (fact * (static_cast<double>(n) - 2.0 / 3.0));
        sum += term;
        sign = -sign;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

void GasModel::build_tail_cache() {
    const double h = (tail_log_q_max - tail_log_q_min) / (tail_nodes - 1);
    std::vector<double> values(tail_nodes), slopes(tail_nodes);
    for (int i = 0; i < tail_nodes; ++i) {
        const double x = tail_log_q_min + h * i;
        const double q = std::exp(x);
        const double J = tail_scaled_quadrature(q);
        values[i] = std::log(J);
        // d(log J)/d(log q) = q - (2/3) q^{-2/3} / J
        slopes[i] = q - (2.0 / 3.0) * std::pow(q, -2.0 / 3.0) / J;
    }
    tail_table_ = num::HermiteTable(tail_log_q_min, h, std::move(values), std::move(slopes));
}

double GasModel::tail_integral(double q) const {
    return tail_scaled_quadrature(q) * std::exp(-q);
}

double GasModel::tail_integral_cached(double q) const {
    if (!(q > 0.0)) throw std::domain_error("tail integral: requires q > 0");
    const double x = std::log(q);
    if (x < tail_log_q_min) return tail_series(q);
    if (x > tail_log_q_max) return 0.0; // e^{-q} underflows far before this
    return std::exp(tail_table_(x) - q);
}

//=============================================================================
// structure function
//=============================================================================

double GasModel::structure_P(double q) const {
    if (cfg_.variant != GasVariant::monatomic_degenerate)
        throw std::domain_error("structure_P: ideal gas has no structure function");
    if (q < 0.0 || !std::isfinite(q)) throw std::domain_error("structure_P: requires q >= 0");
    if (q == 0.0) return 0.0;
    return std::pow(q, 5.0 / 3.0) * (cfg_.p_bar + tail_integral(q));
}

double GasModel::structure_P_prime(double q) const {
    if (cfg_.variant != GasVariant::monatomic_degenerate)
        throw std::domain_error("structure_P_prime: ideal gas has no structure function");
    if (!(q > 0.0)) throw std::domain_error("structure_P_prime: requires q > 0");
    // same evaluation path as structure_P so that 5/3 P - P'q = g holds to
    // round-off, not merely to cache accuracy
    const double P = structure_P(q);
    const double g = (2.0 / 3.0) * q * std::exp(-q);
    return ((5.0 / 3.0) * P - g) / q;
}

//=============================================================================
// primitive-variable closure
//=============================================================================

double GasModel::pressure(double rho, double theta) const {
    require_finite_pair(rho, theta, "pressure");
    if (rho < 0.0 || theta < 0.0) throw std::domain_error("pressure: negative state");
    if (cfg_.variant == GasVariant::ideal) return rho * theta;
    if (rho == 0.0) return 0.0;
    if (theta == 0.0) return cfg_.p_bar * std::pow(rho, 5.0 / 3.0);
    const double q = rho / std::pow(theta, 1.5);
    // theta^{5/2} P(q) collapses to rho^{5/3} (p_bar + I(q))
    return std::pow(rho, 5.0 / 3.0) * (cfg_.p_bar + tail_integral_cached(q));
}

double GasModel::internal_energy(double rho, double theta) const {
    require_finite_pair(rho, theta, "internal_energy");
    if (!(rho > 0.0) || theta < 0.0) throw std::domain_error("internal_energy: requires rho > 0");
    if (cfg_.variant == GasVariant::ideal) return cfg_.c_v * theta;
    return 1.5 * pressure(rho, theta) / rho;
}

ExtendedReal GasModel::specific_entropy(double rho, double theta) const {
    require_finite_pair(rho, theta, "specific_entropy");
    if (rho < 0.0 || !(theta > 0.0)) throw std::domain_error("specific_entropy: requires rho >= 0, theta > 0");
    if (rho == 0.0) return ExtendedReal::pos_inf();
    const double q = rho / std::pow(theta, c_v());
    return ExtendedReal::finite(entropy_q(q));
}

double GasModel::de_dtheta(double rho, double theta) const {
    require_finite_pair(rho, theta, "de_dtheta");
    if (!(rho > 0.0) || theta < 0.0) throw std::domain_error("de_dtheta: requires rho > 0, theta >= 0");
    if (cfg_.variant == GasVariant::ideal) return cfg_.c_v;
    if (theta == 0.0) return 0.0; // third law: heat capacity vanishes with theta
    const double q = rho / std::pow(theta, 1.5);
    return 1.5 * std::exp(-q);
}

double GasModel::drho_internal_energy(double rho, double theta) const {
    if (cfg_.variant == GasVariant::ideal) return 0.0;
    const double q = rho / std::pow(theta, 1.5);
    const double P = std::pow(q, 5.0 / 3.0) * (cfg_.p_bar + tail_integral_cached(q));
    const double g = (2.0 / 3.0) * q * std::exp(-q);
    // rho^2 de/drho = (3/2) theta^{5/2} (P'(q) q - P(q)) and P'q - P = 2/3 P - g
    return 1.5 * std::pow(theta, 2.5) * ((2.0 / 3.0) * P - g) / (rho * rho);
}

double GasModel::drho_entropy(double rho, double theta) const {
    if (cfg_.variant == GasVariant::ideal) return -1.0 / rho;
    const double q = rho / std::pow(theta, 1.5);
    return -std::exp(-q) / rho; // S'(q) dq/drho with S'(q) = -e^{-q}/q
}

//=============================================================================
// entropy parametrizations
//=============================================================================

double GasModel::entropy_q(double q) const {
    if (!(q > 0.0)) throw std::domain_error("entropy_q: requires q > 0");
    if (cfg_.variant == GasVariant::ideal) return -std::log(q);
    return num::expint_e1(q);
}

double GasModel::q_from_Z(double Z) const {
    if (cfg_.variant == GasVariant::ideal) {
        if (!(Z > 0.0)) throw std::domain_error("q_from_Z: requires Z > 0");
        return std::pow(Z, -c_v());
    }
    const double y = Z - cfg_.p_bar;
    if (!(y > 0.0)) throw std::domain_error("q_from_Z: requires Z > p_bar");

    const double q_min = std::exp(tail_log_q_min);
    if (y >= tail_series(q_min)) {
        // tiny-q branch: solve the series directly, Newton from q ~ y^{-3/2}
        double q = std::pow(y + num::gamma_onethird, -1.5);
        for (int it = 0; it < 60; ++it) {
            const double f = tail_series(q) - y;
            const double df = -(2.0 / 3.0) * std::pow(q, -5.0 / 3.0) * std::exp(-q);
            const double step = f / df;
            q -= step;
            if (std::abs(step) < 1e-14 * q) break;
        }
        return q;
    }

    // log I(q) = t(x) - e^x is strictly decreasing on the table range and the
    // representable range of y always lands inside it
    const double target = std::log(y);
    auto fdf = [&](double x) -> std::array<double, 2> {
        return {tail_table_(x) - std::exp(x) - target, tail_table_.derivative(x) - std::exp(x)};
    };
    const double x = num::newton_bracketed(fdf, tail_log_q_min, tail_log_q_max, 1e-14);
    return std::exp(x);
}

ExtendedReal GasModel::entropy_Z(double Z) const {
    if (!std::isfinite(Z)) throw std::domain_error("entropy_Z: non-finite input");
    if (cfg_.variant == GasVariant::ideal) {
        if (Z <= 0.0) return ExtendedReal::neg_inf();
        return ExtendedReal::finite(c_v() * std::log(Z));
    }
    const double y = Z - cfg_.p_bar;
    if (y < 0.0) return ExtendedReal::neg_inf();
    if (y == 0.0) return ExtendedReal::finite(0.0); // limit value: E1(q) -> 0 as q -> inf
    const double q = q_from_Z(Z);
    return ExtendedReal::finite(q > 700.0 ? 0.0 : num::expint_e1(q));
}

//=============================================================================
// conservative variables
//=============================================================================

void GasModel::validate_state(const ConservativeState& c) const {
    if (!std::isfinite(c.rho) || !std::isfinite(c.m) || !std::isfinite(c.E))
        throw RejectedState("conservative state: non-finite field");
    if (c.rho < 0.0) throw RejectedState("conservative state: rho < 0");
    if (c.E < 0.0) throw RejectedState("conservative state: E < 0");
    if (c.rho == 0.0 && c.m != 0.0)
        throw RejectedState("conservative state: vacuum with nonzero momentum");
}

bool GasModel::satisfies_support_condition(const ConservativeState& c, double rel_slack) const {
    if (c.rho < 0.0 || c.E < 0.0) return false;
    const auto kin = kinetic_energy_density(c);
    if (!kin.is_finite()) return false;
    const double internal = c.E - kin.value;
    const double threshold = p_bar() / (gamma_ - 1.0) * std::pow(c.rho, gamma_);
    return internal >= threshold - rel_slack * std::max(c.E, 1.0);
}

ExtendedReal GasModel::total_entropy(const ConservativeState& c) const {
    validate_state(c);
    if (c.rho == 0.0) return ExtendedReal::finite(0.0); // usc convention at vacuum

    const double kin = kinetic_energy_density(c).value;
    const double internal = c.E - kin;
    const double Z = (gamma_ - 1.0) * internal / std::pow(c.rho, gamma_);
    const ExtendedReal s = entropy_Z(Z);
    if (!s.is_finite()) return s;
    return ExtendedReal::finite(c.rho * s.value);
}

double GasModel::temperature_from_conservative(const ConservativeState& c, double a_rad) const {
    validate_state(c);
    if (!(c.rho > 0.0))
        throw std::domain_error("temperature_from_conservative: vacuum state has no temperature");
    if (a_rad < 0.0) throw std::domain_error("temperature_from_conservative: a_rad < 0");

    const double kin = kinetic_energy_density(c).value;
    const double internal = c.E - kin;
    const double cold = p_bar() / (gamma_ - 1.0) * std::pow(c.rho, gamma_);
    if (!(internal > cold))
        throw std::domain_error("temperature_from_conservative: internal energy at or below the cold floor");

    if (a_rad == 0.0) {
        if (cfg_.variant == GasVariant::ideal) return internal / (cfg_.c_v * c.rho);
        // invert through the Z parametrization: Z = (gamma-1) E_int / rho^gamma
        const double Z = (gamma_ - 1.0) * internal / std::pow(c.rho, gamma_);
        const double q = q_from_Z(Z);
        return std::pow(c.rho / q, 2.0 / 3.0);
    }

    auto fdf = [&](double theta) -> std::array<double, 2> {
        const double f = c.rho * internal_energy(c.rho, theta) + a_rad * std::pow(theta, 4.0) - internal;
        const double df = c.rho * de_dtheta(c.rho, theta) + 4.0 * a_rad * theta * theta * theta;
        return {f, df};
    };
    try {
        return num::bracket_and_solve(fdf, 0.0, 1e-6, 1e-12, 200);
    } catch (const std::runtime_error&) {
        throw std::domain_error("temperature_from_conservative: inversion failed to bracket");
    }
}

//=============================================================================
// transport
//=============================================================================

TransportCoefficients GasModel::transport(double theta) const {
    if (!std::isfinite(theta) || theta < 0.0) throw std::domain_error("transport: requires theta >= 0");
    return {cfg_.mu_lower * (1.0 + theta), 0.0, cfg_.kappa_lower * (1.0 + theta * theta * theta)};
}

//=============================================================================
// hypothesis self-checks
//=============================================================================

StabilityReport GasModel::check_stability(const std::vector<double>& rho_samples,
                                          const std::vector<double>& theta_samples) const {
    StabilityReport report;
    report.min_dp_drho = std::numeric_limits<double>::infinity();
    report.min_de_dtheta = std::numeric_limits<double>::infinity();
    int resolvable = 0;
    for (double rho : rho_samples) {
        for (double theta : theta_samples) {
            const double hr = 1e-5 * rho;
            const double ht = 1e-5 * theta;
            const double dp = (pressure(rho + hr, theta) - pressure(rho - hr, theta)) / (2.0 * hr);
            report.min_dp_drho = std::min(report.min_dp_drho, dp);
            // skip points where the true difference 2 ht de/dtheta sits at or
            // below the rounding floor of e itself (heat capacity ~ e^{-q})
            const double e0 = internal_energy(rho, theta);
            const double expected_diff = de_dtheta(rho, theta) * 2.0 * ht;
            if (expected_diff <= 8.0 * std::numeric_limits<double>::epsilon() * std::abs(e0)) {
                ++report.theta_underflow_points;
            } else {
                const double de = (internal_energy(rho, theta + ht) - internal_energy(rho, theta - ht)) / (2.0 * ht);
                report.min_de_dtheta = std::min(report.min_de_dtheta, de);
                ++resolvable;
            }
        }
    }
    report.pass = report.min_dp_drho > 0.0 && resolvable > 0 && report.min_de_dtheta > 0.0;
    return report;
}

ConcavityReport GasModel::check_concavity_condition(const std::vector<double>& Z_grid) const {
    ConcavityReport report;
    report.pass = true;
    const double lower = p_bar();
    for (double Z : Z_grid) {
        ConcavityPoint pt;
        pt.Z = Z;
        // second differences need a larger step than the first-difference checks
        const double h = 1e-3 * Z;
        if (!(Z - h > lower)) {
            pt.in_domain = false;
            report.points.push_back(pt);
            continue;
        }
        const double sm = entropy_Z(Z - h).require_finite("entropy_Z");
        const double s0 = entropy_Z(Z).require_finite("entropy_Z");
        const double sp = entropy_Z(Z + h).require_finite("entropy_Z");
        const double d1 = (sp - sm) / (2.0 * h);
        const double d2 = (sp - 2.0 * s0 + sm) / (h * h);
        pt.expression = (1.0 - gamma_) * d1 - gamma_ * d2 * Z;
        if (!(pt.expression > 0.0)) report.pass = false;
        report.points.push_back(pt);
    }
    return report;
}

double GasModel::gibbs_residual(double rho, double theta) const {
    const double p = pressure(rho, theta);
    const double e = internal_energy(rho, theta);
    const double hr = 1e-5 * rho;
    const double ht = 1e-5 * theta;

    auto s_at = [&](double r, double t) { return specific_entropy(r, t).require_finite("entropy"); };

    const double ds_dr = (s_at(rho + hr, theta) - s_at(rho - hr, theta)) / (2.0 * hr);
    const double de_dr = (internal_energy(rho + hr, theta) - internal_energy(rho - hr, theta)) / (2.0 * hr);
    const double dinv_dr = (1.0 / (rho + hr) - 1.0 / (rho - hr)) / (2.0 * hr);
    const double res_rho = theta * ds_dr - de_dr - p * dinv_dr;

    const double ds_dt = (s_at(rho, theta + ht) - s_at(rho, theta - ht)) / (2.0 * ht);
    const double de_dt = (internal_energy(rho, theta + ht) - internal_energy(rho, theta - ht)) / (2.0 * ht);
    const double res_theta = theta * ds_dt - de_dt;

    return std::max(std::abs(res_rho), std::abs(res_theta)) / std::abs(e);
}

} // namespace dmv
