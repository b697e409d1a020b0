#pragma once

// Test-only oracles, independent of the library's numerical paths: adaptive
// Simpson quadrature (vs. the Gauss-Kronrod production path) and a fixed-step
// RK4 integrator for uniform-state comparison ODEs.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double whole, double tol, int depth) {
    const double c = 0.5 * (a + b);
    const double left = simpson(f, a, c);
    const double right = simpson(f, c, b);
    if (depth <= 0) return left + right;
    if (std::abs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson_rec(f, a, c, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, c, b, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson to absolute tolerance tol.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 48) {
    return adaptive_simpson_rec(f, a, b, simpson(f, a, b), tol, max_depth);
}

/// Fixed-step classic RK4 for scalar ODEs y' = f(t, y).
inline double rk4(const std::function<double(double, double)>& f, double y0, double t0,
                  double t1, int steps) {
    double y = y0;
    double t = t0;
    const double h = (t1 - t0) / steps;
    for (int i = 0; i < steps; ++i) {
        const double k1 = f(t, y);
        const double k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
        const double k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
        const double k4 = f(t + h, y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
    }
    return y;
}

} // namespace oracle
