#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace fpide {

namespace detail {

template <typename F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance.
template <typename F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-9, int max_depth = 48) {
    if (!(a < b)) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

/// Integrates over [a, b] split at the interior breakpoints in `breaks`
/// (the integrand may kink there; each smooth piece is handled separately).
template <typename F>
double integrate_piecewise(const F& f, double a, double b, const std::vector<double>& breaks,
                           double abs_tol = 1e-9, int max_depth = 48) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double p : breaks)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    double piece_tol = abs_tol / static_cast<double>(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate(f, pts[i], pts[i + 1], piece_tol, max_depth);
    return total;
}

} // namespace fpide
