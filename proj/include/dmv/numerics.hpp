#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmv::num {

inline constexpr double euler_gamma   = 0.57721566490153286060651209;
inline constexpr double gamma_onethird = 2.67893853470774763365569294;

//=============================================================================
// Adaptive Gauss--Kronrod quadrature (7-15 pair, global error strategy).
//=============================================================================

/// Integrates f over [a, b] to the requested relative tolerance.
/// Refines the segment with the largest error estimate until the summed
/// estimate drops below tol * |result| (with an absolute floor).
double integrate_gk15(const std::function<double(double)>& f, double a, double b,
                      double rel_tol, double abs_floor = 1e-300,
                      std::size_t max_segments = 4000);

//=============================================================================
// Special functions
//=============================================================================

/// Exponential integral E1(x) = \int_x^inf e^{-r}/r dr for x > 0.
/// Power series for x <= 1, modified-Lentz continued fraction above.
double expint_e1(double x);

//=============================================================================
// Cubic Hermite interpolation on a uniform grid
//=============================================================================

// Tabulates (value, derivative) pairs on x0 + i*h and evaluates the piecewise
// cubic Hermite interpolant. Slopes of monotone data are Fritsch-Carlson
// limited so the interpolant cannot overshoot.
class HermiteTable {
public:
    HermiteTable() = default;
    HermiteTable(double x0, double h, std::vector<double> values,
                 std::vector<double> derivatives);

    double x_min() const { return x0_; }
    double x_max() const { return x0_ + h_ * static_cast<double>(values_.size() - 1); }
    bool contains(double x) const { return x >= x_min() && x <= x_max(); }

    double operator()(double x) const;
    double derivative(double x) const;

private:
    double x0_ = 0.0;
    double h_ = 1.0;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

//=============================================================================
// Root finding
//=============================================================================

/// Newton iteration safeguarded by a maintained bracket [lo, hi]; falls back
/// to bisection whenever the Newton step leaves the bracket. fdf returns
/// (f(x), f'(x)). Requires f(lo) and f(hi) of opposite sign.
double newton_bracketed(const std::function<std::array<double, 2>(double)>& fdf,
                        double lo, double hi, double rel_tol,
                        int max_iterations = 200);

/// Expands [lo, hi] upward (hi *= 2) until f changes sign, then bisects +
/// Newton-polishes. Throws std::runtime_error after max_doublings expansions.
double bracket_and_solve(const std::function<std::array<double, 2>(double)>& fdf,
                         double lo, double hi, double rel_tol,
                         int max_doublings = 200);

//=============================================================================
// Small dense linear algebra
//=============================================================================

/// Eigenvalues of a symmetric 3x3 matrix (row-major, only the upper triangle
/// is read), by cyclic Jacobi rotations. Returned in ascending order.
std::array<double, 3> symmetric_eigenvalues_3x3(const std::array<double, 9>& m);

//=============================================================================
// Misc
//=============================================================================

/// Least-squares slope of y against x (used for fitted decay orders).
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Shortest round-trip decimal representation of a double (std::to_chars).
std::string format_double(double v);

/// Relative difference |a-b| / max(|a|, |b|, floor).
inline double rel_diff(double a, double b, double floor_scale = 1e-300) {
    double s = std::max(std::abs(a), std::abs(b));
    if (s < floor_scale) s = floor_scale;
    return std::abs(a - b) / s;
}

} // namespace dmv::num
