#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace primeap {

struct quadrature_spec {
    double abs_tol = 1e-10;
    int max_refinements = 60;
};

namespace detail {

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double fa, double fm, double fb,
                               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace detail

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        const quadrature_spec& spec = {}) {
    if (!(spec.abs_tol > 0.0)) throw std::domain_error("integrate: abs_tol must be > 0");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, spec.abs_tol,
                                    spec.max_refinements);
}

/// Slow reference evaluation of li(x) straight from its principal-value
/// definition: integrate 1/log t over (0, 1-eps) and (1+eps, x) with a
/// symmetric excision around the pole. The excised sliver contributes
/// eps + O(eps^3), which is added back. Kept as an independent cross-check
/// for the fast exponential-integral path.
inline double li_principal_value(double x, const quadrature_spec& spec = {}) {
    if (!(x > 0.0)) throw std::domain_error("li_principal_value: domain is x > 0");
    if (x == 1.0) throw std::domain_error("li_principal_value: pole at x = 1");
    const auto integrand = [](double t) {
        return t == 0.0 ? 0.0 : 1.0 / std::log(t);
    };
    quadrature_spec half = spec;
    half.abs_tol = spec.abs_tol / 2.0;
    if (x < 1.0) return integrate(integrand, 0.0, x, half);
    const double eps = 1e-6;
    const double lower = integrate(integrand, 0.0, 1.0 - eps, half);
    const double upper = integrate(integrand, 1.0 + eps, x, half);
    return lower + upper + eps;
}

}  // namespace primeap
