#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "primeap/kahan.hpp"
#include "primeap/sieve.hpp"

namespace primeap {

/// Euler-Mascheroni constant, 16 significant digits.
inline constexpr double euler_gamma = 0.5772156649015329;

namespace detail {

// E1(w) for w > 0: alternating series below 1, modified-Lentz continued
// fraction above.
inline double expint_e1(double w) {
    if (w <= 1.0) {
        double term = -1.0;
        kahan_sum s;
        for (int k = 1; k <= 60; ++k) {
            term *= -w / k;
            s.add(term / k);
            if (std::abs(term) < 1e-18 * (1.0 + std::abs(s.value()))) break;
        }
        return -euler_gamma - std::log(w) + s.value();
    }
    const double tiny = 1e-300;
    double b = w + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-w);
}

// Ei(z) for z != 0. Power series on (0, 40], asymptotic beyond, and
// Ei(z) = -E1(-z) for negative arguments.
inline double expint_ei(double z) {
    if (z < 0.0) return -expint_e1(-z);
    if (z <= 40.0) {
        double term = 1.0;
        kahan_sum s;
        for (int k = 1; k <= 200; ++k) {
            term *= z / k;
            s.add(term / k);
            if (term / k < 1e-18 * (1.0 + s.value())) break;
        }
        return euler_gamma + std::log(z) + s.value();
    }
    // Divergent asymptotic series; truncate at the smallest term.
    double term = 1.0;
    double acc = 1.0;
    for (int k = 1; k < z; ++k) {
        term *= k / z;
        if (term < 1e-17 * acc) break;
        acc += term;
    }
    return std::exp(z) / z * acc;
}

}  // namespace detail

/// Principal-value logarithmic integral li(x), computed as Ei(log x).
/// For x in (0, 1) this is the first branch of the defining integral.
inline double li(double x) {
    if (!(x > 0.0)) throw std::domain_error("li: domain is x > 0");
    if (x == 1.0) throw std::domain_error("li: pole at x = 1");
    return detail::expint_ei(std::log(x));
}

/// Offset logarithmic integral Li(x) = li(x) - li(2) for x >= 2.
inline double Li(double x) {
    if (!(x >= 2.0)) throw std::domain_error("Li: domain is x >= 2");
    static const double li2 = li(2.0);
    return li(x) - li2;
}

/// Principal branch W0 of the Lambert W function, by Halley iteration.
/// Initial guess: branch-point series near -1/e, log1p(x) on [0, e),
/// log x - log log x + log log x / log x beyond.
inline double lambert_w0(double x) {
    constexpr double inv_e = 0.36787944117144232160;
    if (x < -inv_e) {
        if (x > -inv_e * (1.0 + 4e-16)) x = -inv_e;
        else throw std::domain_error("lambert_w0: domain is x >= -1/e");
    }
    if (x == 0.0) return 0.0;
    if (x == -inv_e) return -1.0;

    double w;
    if (x < -0.25) {
        const double p = std::sqrt(std::max(0.0, 2.0 * (std::exp(1.0) * x + 1.0)));
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    } else if (x < std::exp(1.0)) {
        w = std::log1p(x);
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    for (int it = 0; it < 60; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        const double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= dw;
        if (w < -1.0) w = -1.0 + 1e-13;  // stay on the principal branch
        if (std::abs(dw) <= 4e-16 * (1.0 + std::abs(w))) break;
    }
    return w;
}

namespace detail {

inline constexpr double bernoulli_2j[] = {
    1.0 / 6,      -1.0 / 30,       1.0 / 42,        -1.0 / 30,       5.0 / 66,
    -691.0 / 2730, 7.0 / 6,        -3617.0 / 510,   43867.0 / 798,   -174611.0 / 330,
};

// Euler-Maclaurin zeta(s) and zeta'(s) on the real axis, s > 1.
// Cutoff N = 128 with 10 correction terms leaves a remainder far below
// double precision for every s of interest here.
inline void zeta_and_deriv(double s, double& z, double& dz) {
    constexpr int cut = 128;
    constexpr int terms = 10;
    kahan_sum zs, dzs;
    for (int n = 1; n <= cut; ++n) {
        const double ns = std::pow(static_cast<double>(n), -s);
        zs.add(ns);
        dzs.add(-std::log(static_cast<double>(n)) * ns);
    }
    const double logN = std::log(static_cast<double>(cut));
    const double n1s = std::pow(static_cast<double>(cut), 1.0 - s);
    const double ns = std::pow(static_cast<double>(cut), -s);
    zs.add(n1s / (s - 1.0));
    dzs.add(-n1s * logN / (s - 1.0) - n1s / ((s - 1.0) * (s - 1.0)));
    zs.add(-ns / 2.0);
    dzs.add(ns * logN / 2.0);
    double npow = n1s;
    for (int j = 1; j <= terms; ++j) {
        npow /= static_cast<double>(cut) * cut;  // N^{-s-2j+1}
        double prod = 1.0, dlog = 0.0;
        for (int i = 0; i <= 2 * j - 2; ++i) {
            prod *= s + i;
            dlog += 1.0 / (s + i);
        }
        double fact = 1.0;
        for (int i = 2; i <= 2 * j; ++i) fact *= i;
        const double coeff = bernoulli_2j[j - 1] / fact;
        zs.add(coeff * prod * npow);
        dzs.add(coeff * npow * (prod * dlog - prod * logN));
    }
    z = zs.value();
    dz = dzs.value();
}

}  // namespace detail

/// |zeta'(sigma)/zeta(sigma)| for real sigma > 1, i.e. the value of
/// sum Lambda(n)/n^sigma. Evaluated through Euler-Maclaurin expansions of
/// zeta and zeta' (direct summation of the Lambda series cannot reach the
/// accuracy target once sigma is close to 1).
inline double zeta_logderiv(double sigma) {
    if (!(sigma > 1.0)) throw std::domain_error("zeta_logderiv: domain is sigma > 1");
    double z, dz;
    detail::zeta_and_deriv(sigma, z, dz);
    return -dz / z;
}

struct series_estimate {
    double value;
    double tail_bound;
};

/// Direct partial sum of Lambda(n)/n^sigma with the integral tail bound
/// int_N^inf log(t) t^-sigma dt = N^{1-sigma} (log N/(sigma-1) + 1/(sigma-1)^2).
/// Usable as an independent cross-check whenever the tail bound is small
/// enough at a reachable N.
inline series_estimate zeta_logderiv_series(double sigma, u64 nterms) {
    if (!(sigma > 1.0)) throw std::domain_error("zeta_logderiv_series: domain is sigma > 1");
    if (nterms < 2) throw std::domain_error("zeta_logderiv_series: need nterms >= 2");
    const auto table = prime_power_table::build(nterms);
    kahan_sum s;
    for (const auto& e : table.entries())
        s.add(e.log_p * std::pow(static_cast<double>(e.n), -sigma));
    const double N = static_cast<double>(nterms);
    const double tail = std::pow(N, 1.0 - sigma) *
                        (std::log(N) / (sigma - 1.0) + 1.0 / ((sigma - 1.0) * (sigma - 1.0)));
    return {s.value(), tail};
}

}  // namespace primeap
