#include "dmv/numerics.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace dmv::num {

//=============================================================================
// Gauss--Kronrod 7-15
//=============================================================================

namespace {

// nodes/weights on [-1, 1]; nodes at odd indices carry the embedded Gauss-7 rule
constexpr std::array<double, 8> gk_nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double integral;
    double error;
};

Segment gk15_segment(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(c);
    double kronrod = kronrod_weights[7] * fc;
    double gauss = gauss_weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * gk_nodes[i];
        const double fsum = f(c - dx) + f(c + dx);
        kronrod += kronrod_weights[i] * fsum;
        if (i % 2 == 1) gauss += gauss_weights[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;

    // QUADPACK-style rescaled error estimate
    double err = std::abs(kronrod - gauss);
    if (err > 0.0) err = std::pow(200.0 * err, 1.5);
    return {a, b, kronrod, err};
}

} // namespace

double integrate_gk15(const std::function<double(double)>& f, double a, double b,
                      double rel_tol, double abs_floor, std::size_t max_segments) {
    if (!(b > a)) return 0.0;
    std::vector<Segment> segments;
    segments.push_back(gk15_segment(f, a, b));

    while (segments.size() < max_segments) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segments.size(); ++i) {
            total += segments[i].integral;
            err += segments[i].error;
            if (segments[i].error > segments[worst].error) worst = i;
        }
        if (err <= std::max(rel_tol * std::abs(total), abs_floor)) return total;

        const Segment s = segments[worst];
        const double mid = 0.5 * (s.a + s.b);
        segments[worst] = gk15_segment(f, s.a, mid);
        segments.push_back(gk15_segment(f, mid, s.b));
    }
    throw std::runtime_error("integrate_gk15: segment budget exhausted");
}

//=============================================================================
// Exponential integral
//=============================================================================

double expint_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("expint_e1: requires x > 0");

    if (x <= 1.0) {
        // E1(x) = -gamma - log x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
        double sum = 0.0, term = 1.0;
        for (int k = 1; k < 80; ++k) {
            term *= -x / static_cast<double>(k);
            const double add = -term / static_cast<double>(k);
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum)) break;
        }
        return -euler_gamma - std::log(x) + sum;
    }

    // continued fraction e^{-x}/(x+1- 1/(x+3- 4/(x+5- ...))), modified Lentz
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double an = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

//=============================================================================
// HermiteTable
//=============================================================================

HermiteTable::HermiteTable(double x0, double h, std::vector<double> values,
                           std::vector<double> derivatives)
    : x0_(x0), h_(h), values_(std::move(values)), slopes_(std::move(derivatives)) {
    if (values_.size() < 2 || values_.size() != slopes_.size() || !(h_ > 0.0))
        throw std::invalid_argument("HermiteTable: bad node data");

    // Fritsch-Carlson limiting on monotone intervals
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        const double delta = (values_[i + 1] - values_[i]) / h_;
        if (delta == 0.0) continue;
        const double alpha = slopes_[i] / delta;
        const double beta = slopes_[i + 1] / delta;
        if (alpha < 0.0 || beta < 0.0) continue; // data not monotone here
        const double r = alpha * alpha + beta * beta;
        if (r > 9.0) {
            const double scale = 3.0 / std::sqrt(r);
            slopes_[i] *= scale;
            slopes_[i + 1] *= scale;
        }
    }
}

double HermiteTable::operator()(double x) const {
    if (!contains(x)) throw std::domain_error("HermiteTable: x outside table");
    const double s = (x - x0_) / h_;
    std::size_t i = static_cast<std::size_t>(s);
    if (i >= values_.size() - 1) i = values_.size() - 2;
    const double t = s - static_cast<double>(i);
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * values_[i] + h10 * h_ * slopes_[i] + h01 * values_[i + 1] +
           h11 * h_ * slopes_[i + 1];
}

double HermiteTable::derivative(double x) const {
    if (!contains(x)) throw std::domain_error("HermiteTable: x outside table");
    const double s = (x - x0_) / h_;
    std::size_t i = static_cast<std::size_t>(s);
    if (i >= values_.size() - 1) i = values_.size() - 2;
    const double t = s - static_cast<double>(i);
    const double t2 = t * t;
    const double g00 = (6.0 * t2 - 6.0 * t) / h_;
    const double g10 = 3.0 * t2 - 4.0 * t + 1.0;
    const double g01 = (-6.0 * t2 + 6.0 * t) / h_;
    const double g11 = 3.0 * t2 - 2.0 * t;
    return g00 * values_[i] + g10 * slopes_[i] + g01 * values_[i + 1] +
           g11 * slopes_[i + 1];
}

//=============================================================================
// Root finding
//=============================================================================

double newton_bracketed(const std::function<std::array<double, 2>(double)>& fdf,
                        double lo, double hi, double rel_tol, int max_iterations) {
    auto [flo, dflo] = fdf(lo);
    auto [fhi, dfhi] = fdf(hi);
    (void)dflo;
    (void)dfhi;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw std::runtime_error("newton_bracketed: endpoints do not bracket a root");

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < max_iterations; ++it) {
        auto [fx, dfx] = fdf(x);
        if (fx == 0.0) return x;
        if ((fx < 0.0) == (flo < 0.0)) {
            lo = x;
        } else {
            hi = x;
        }
        double next;
        if (dfx != 0.0) {
            next = x - fx / dfx;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        } else {
            next = 0.5 * (lo + hi);
        }
        const double scale = std::max({std::abs(next), std::abs(x), 1e-300});
        if (std::abs(next - x) <= rel_tol * scale) return next;
        x = next;
    }
    return x;
}

double bracket_and_solve(const std::function<std::array<double, 2>(double)>& fdf,
                         double lo, double hi, double rel_tol, int max_doublings) {
    auto flo = fdf(lo)[0];
    if (flo == 0.0) return lo;
    double fhi = fdf(hi)[0];
    int doublings = 0;
    while (flo * fhi > 0.0) {
        if (++doublings > max_doublings)
            throw std::runtime_error("bracket_and_solve: no sign change found");
        lo = hi;
        flo = fhi;
        hi *= 2.0;
        fhi = fdf(hi)[0];
    }
    return newton_bracketed(fdf, lo, hi, rel_tol);
}

//=============================================================================
// 3x3 symmetric eigenvalues (cyclic Jacobi)
//=============================================================================

std::array<double, 3> symmetric_eigenvalues_3x3(const std::array<double, 9>& m) {
    double a[3][3] = {{m[0], m[1], m[2]}, {m[1], m[4], m[5]}, {m[2], m[5], m[8]}};

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        double scale = std::abs(a[0][0]) + std::abs(a[1][1]) + std::abs(a[2][2]);
        if (off <= 1e-15 * std::max(scale, 1e-300)) break;

        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = a[p][p], aqq = a[q][q], apq = a[p][q];
                a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a[p][q] = a[q][p] = 0.0;
                for (int k = 0; k < 3; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = a[p][k] = c * akp - s * akq;
                    a[k][q] = a[q][k] = s * akp + c * akq;
                }
            }
        }
    }
    std::array<double, 3> ev = {a[0][0], a[1][1], a[2][2]};
    std::sort(ev.begin(), ev.end());
    return ev;
}

//=============================================================================
// Misc
//=============================================================================

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope: need >= 2 points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace dmv::num
