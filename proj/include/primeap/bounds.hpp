#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "primeap/arith.hpp"
#include "primeap/constants.hpp"
#include "primeap/kahan.hpp"
#include "primeap/specialfn.hpp"

namespace primeap {

struct bound_term {
    std::string label;
    double coefficient;  // the evaluated prefactor
    double value;        // coefficient times its x/q-dependent factor
};

struct bound_breakdown {
    std::vector<bound_term> terms;
    double total = 0.0;
};

namespace detail {

inline double finish(bound_breakdown& b) {
    kahan_sum s;
    for (const auto& t : b.terms) s.add(t.value);
    b.total = s.value();
    return b.total;
}

}  // namespace detail

/// Height at which the explicit zero sums are truncated.
inline double truncation_height(double x) {
    return std::pow(x, cat::t_exponent) + cat::t_offset;
}

/// Shared inputs of the bound evaluators. q is carried as a real so the
/// formula-only branches beyond 2^63 stay representable; phi_q is the
/// exact totient and is only populated on the integer path.
struct bound_input {
    double x = 2.0;
    double q = 3.0;
    u64 phi_q = 2;
    double c = 0.0;  // 1 + 1/log x
    double T = 0.0;  // x^0.577 + 8.509
};

inline bound_input make_bound_input(double x, u64 q) {
    if (!(x >= 2.0)) throw std::domain_error("bound input: x < 2");
    if (q < 3) throw std::domain_error("bound input: q < 3");
    bound_input in;
    in.x = x;
    in.q = static_cast<double>(q);
    in.phi_q = euler_phi(q);
    in.c = 1.0 + 1.0 / std::log(x);
    in.T = truncation_height(x);
    return in;
}

/// R1(q): the q-only block of the psi bound, in three branches.
inline double r1(double q) {
    namespace k = cat::r1;
    if (!(q >= 3.0)) throw std::domain_error("r1: q < 3");
    const double lq = std::log(q);
    if (q < k::q_small_hi)
        return k::small_sqrtq_logq * std::sqrt(q) * lq + k::small_sqrtq * std::sqrt(q) +
               k::logq * lq + k::small_const;
    if (q < k::q_mid_hi)
        return k::mid_log2q * lq * lq + k::logq * lq + k::mid_const;
    return (k::large_loglogq * std::log(lq) + k::large_log2q) * lq * lq + k::logq * lq +
           k::mid_const;
}

/// |psi(x;q,a) - x/phi(q)| bound, as labeled terms in formula order.
inline bound_breakdown bound_psi(const bound_input& in) {
    namespace k = cat::psi_bound;
    if (!(in.x >= 2.0)) throw std::domain_error("bound_psi: x < 2");
    if (!(in.q >= 3.0)) throw std::domain_error("bound_psi: q < 3");
    const double x = in.x, lx = std::log(x), lq = std::log(in.q), sx = std::sqrt(x);
    const double pi_ = std::numbers::pi;
    bound_breakdown b;
    const double lead = 1.0 / (8.0 * pi_ * static_cast<double>(in.phi_q)) + 1.0 / (6.0 * pi_);
    b.terms.push_back({"sqrt_log2", lead, lead * sx * lx * lx});
    const double c2 = k::sqrt_log_logq * lq + k::sqrt_log_const;
    b.terms.push_back({"sqrt_log", c2, c2 * sx * lx});
    const double c3 = k::sqrt_logq * lq + k::sqrt_const;
    b.terms.push_back({"sqrt", c3, c3 * sx});
    const double c4 = k::over_log_log2q * lq * lq + k::over_log_logq * lq + k::over_log_const;
    b.terms.push_back({"sqrt_over_log", c4, c4 * sx / lx});
    const double c5 = k::logx_logq * lq + k::logx_const;
    b.terms.push_back({"log", c5, c5 * lx});
    const double c6 = r1(in.q);
    b.terms.push_back({"r1", c6, c6});
    detail::finish(b);
    return b;
}

/// |pi(x;q,a) - li(x)/phi(q)| bound, full form. Hypothesis x >= q.
inline bound_breakdown bound_pi_full(const bound_input& in) {
    namespace k = cat::pi_bound;
    if (!(in.x >= 2.0)) throw std::domain_error("bound_pi_full: x < 2");
    if (!(in.q >= 3.0)) throw std::domain_error("bound_pi_full: q < 3");
    if (in.x < in.q) throw std::domain_error("bound_pi_full: x < q");
    const double x = in.x, lx = std::log(x), lq = std::log(in.q), sx = std::sqrt(x);
    const double x14 = std::pow(x, 0.25);
    const double pi_ = std::numbers::pi;
    bound_breakdown b;
    const double lead = 1.0 / (8.0 * pi_ * static_cast<double>(in.phi_q)) + 1.0 / (6.0 * pi_);
    b.terms.push_back({"sqrt_log", lead, lead * sx * lx});
    const double c2 = k::sqrt_logq * lq + k::sqrt_const;
    b.terms.push_back({"sqrt", c2, c2 * sx});
    const double c3 = k::over_log_logq * lq + k::over_log_const;
    b.terms.push_back({"sqrt_over_log", c3, c3 * sx / lx});
    const double c4 = k::over_log2_log2q * lq * lq + k::over_log2_logq * lq + k::over_log2_const;
    b.terms.push_back({"sqrt_over_log2", c4, c4 * sx / (lx * lx)});
    const double c5 = k::x14_loglog_logq * lq + k::x14_loglog_const;
    b.terms.push_back({"x14_loglog", c5, c5 * x14 * std::log(lx)});
    const double c6 = k::x14_log2q * lq * lq + k::x14_logq * lq + k::x14_const;
    b.terms.push_back({"x14", c6, c6 * x14});
    const double c7 = k::over_log3_log2q * lq * lq + k::over_log3_logq * lq + k::over_log3_const;
    b.terms.push_back({"sqrt_over_log3", c7, c7 * sx / (lx * lx * lx)});
    b.terms.push_back({"const", -k::negative_const, -k::negative_const});
    detail::finish(b);
    return b;
}

/// |pi(x;q,a) - li(x)/phi(q)| bound, simplified form. Hypothesis x >= q.
inline bound_breakdown bound_pi_simple(const bound_input& in) {
    namespace k = cat::pi_simple;
    if (!(in.x >= 2.0)) throw std::domain_error("bound_pi_simple: x < 2");
    if (!(in.q >= 3.0)) throw std::domain_error("bound_pi_simple: q < 3");
    if (in.x < in.q) throw std::domain_error("bound_pi_simple: x < q");
    const double lx = std::log(in.x), lq = std::log(in.q), sx = std::sqrt(in.x);
    const double pi_ = std::numbers::pi;
    bound_breakdown b;
    const double lead = 1.0 / (8.0 * pi_ * static_cast<double>(in.phi_q)) + 1.0 / (6.0 * pi_);
    b.terms.push_back({"sqrt_log", lead, lead * sx * lx});
    const double c2 = k::sqrt_logq * lq + k::sqrt_const;
    b.terms.push_back({"sqrt", c2, c2 * sx});
    b.terms.push_back({"const", -cat::pi_bound::negative_const, -cat::pi_bound::negative_const});
    detail::finish(b);
    return b;
}

/// Bound on the zero-sum tail cut at height T(x)+1.
inline bound_breakdown bound_large_rho(const bound_input& in) {
    namespace k = cat::large_rho;
    if (!(in.x >= 2.0)) throw std::domain_error("bound_large_rho: x < 2");
    if (!(in.q >= 3.0)) throw std::domain_error("bound_large_rho: q < 3");
    const double x = in.x, lx = std::log(x), lq = std::log(in.q), sx = std::sqrt(x);
    const double x423 = std::pow(x, 0.423);
    const double x077 = std::pow(x, 0.077);
    const double ll = std::log(std::log(in.q * x));
    bound_breakdown b;
    b.terms.push_back({"x423_log2", k::x423_log2, k::x423_log2 * x423 * lx * lx});
    b.terms.push_back({"sqrt_log", k::sqrt_log, k::sqrt_log * sx * lx});
    b.terms.push_back({"x423_log", k::x423_log, k::x423_log * x423 * lx});
    b.terms.push_back({"x423_loglog", k::x423_loglog, k::x423_loglog * x423 * ll});
    const double c5 = k::x423_logq * lq + k::x423_const;
    b.terms.push_back({"x423", c5, c5 * x423});
    b.terms.push_back({"block_loglog2", k::block_loglog2, k::block_loglog2 * ll * ll * x423 / lx});
    const double c7 = k::block_loglog_logq * lq - k::block_loglog_const;
    b.terms.push_back({"block_loglog", c7, c7 * ll * x423 / lx});
    const double c8 = k::block_log2q * lq * lq + k::block_logq * lq + k::block_const;
    b.terms.push_back({"block_poly", c8, c8 * x423 / lx});
    b.terms.push_back({"decay_log", k::decay_log, k::decay_log * lx / x077});
    b.terms.push_back({"decay_loglog", k::decay_loglog, k::decay_loglog * ll / x077});
    const double c11 = k::decay_logq * lq + k::decay_const;
    b.terms.push_back({"decay_const", c11, c11 / x077});
    detail::finish(b);
    return b;
}

/// Bound on the zero sum below height T(x)+1.
inline bound_breakdown bound_small_rho(const bound_input& in) {
    namespace k = cat::small_rho;
    if (!(in.x >= 2.0)) throw std::domain_error("bound_small_rho: x < 2");
    if (!(in.q >= 3.0)) throw std::domain_error("bound_small_rho: q < 3");
    const double lx = std::log(in.x), lq = std::log(in.q), sx = std::sqrt(in.x);
    bound_breakdown b;
    const double lead = 1.0 / (6.0 * std::numbers::pi);
    b.terms.push_back({"sqrt_log2", lead, lead * sx * lx * lx});
    const double c2 = k::sqrt_log_logq * lq - k::sqrt_log_const;
    b.terms.push_back({"sqrt_log", c2, c2 * sx * lx});
    const double c3 = k::sqrt_logq * lq + k::sqrt_const;
    b.terms.push_back({"sqrt", c3, c3 * sx});
    detail::finish(b);
    return b;
}

struct n_zeros_estimate {
    double main;       // (T/pi) log(qT / 2 pi e)
    double err;        // simple error form
    double err_sharp;  // sharper error form
    bool vanishes;     // window is provably empty of zeros
};

/// Zero-counting window estimate for conductor q at height T.
inline n_zeros_estimate n_zeros_window(double T, double q) {
    namespace k = cat::nzeros;
    if (!(T >= k::t_min)) throw std::domain_error("n_zeros_window: T < 5/7");
    if (!(q >= 2.0)) throw std::domain_error("n_zeros_window: q < 2");
    const double pi_ = std::numbers::pi;
    n_zeros_estimate r;
    r.main = T / pi_ * std::log(q * T / (2.0 * pi_ * std::numbers::e));
    r.err = k::simple_log * std::log(q * T / (2.0 * pi_)) + k::simple_const;
    const double z = std::log(q * (T + 2.0) / (2.0 * pi_));
    r.err_sharp = k::sharp_log * z + k::sharp_loglog * std::log(1.0 + z) - k::sharp_const;
    r.vanishes = z <= k::vanish_threshold;
    return r;
}

/// Denominator of the guaranteed gap around a zero-free horizontal line.
inline double zero_gap_denominator(double T, double q) {
    namespace k = cat::zero_gap;
    if (!(T >= 10.0)) throw std::domain_error("zero_gap_denominator: T < 10");
    if (!(q >= 3.0)) throw std::domain_error("zero_gap_denominator: q < 3");
    const double lqt = std::log(q * T);
    return k::log_qt * lqt + k::loglog_qt * std::log(lqt) - k::constant;
}

/// Bound on the Laurent constant b(chi) for even primitive characters.
/// Stated for q >= 3; evaluated as-is for any positive q.
inline double bchi_bound(double q) {
    return cat::bchi::logq * std::log(q) + cat::bchi::constant;
}

enum class l0_variant {
    exact_q,  // simplified bound at the character's own modulus
    induced,  // bound usable when the character is induced from modulus <= q
    sharp,    // unsimplified branch constants
};

/// Piecewise bound for |L'(0,chi)/L(0,chi)|, odd primitive chi.
inline double l0_logderiv_bound(double q, l0_variant variant) {
    namespace k = cat::l0;
    if (!(q >= 3.0)) throw std::domain_error("l0_logderiv_bound: q < 3");
    const double pi_ = std::numbers::pi;
    const double lq = std::log(q);
    const double tail_sym = std::abs(std::log(q / pi_)) + euler_gamma + std::log(2.0);
    const double tail_pos = std::log(q / pi_) + euler_gamma + std::log(2.0);

    switch (variant) {
    case l0_variant::exact_q:
        if (q < k::q_small_hi)
            return k::small_sqrtq_logq * std::sqrt(q) * lq + k::small_sqrtq * std::sqrt(q) +
                   k::small_const + tail_sym;
        if (q < k::q_mid_hi_exact) return k::mid_log2q * lq * lq + tail_pos;
        return (k::large_loglogq * std::log(lq) + k::large_const) * lq * lq + tail_pos;
    case l0_variant::induced:
        if (q < k::q_small_hi)
            return k::small_sqrtq_logq * std::sqrt(q) * lq + k::small_sqrtq * std::sqrt(q) +
                   k::small_const + std::log(q * pi_) + euler_gamma + std::log(2.0);
        if (q < k::q_mid_hi_induced) return k::mid_log2q * lq * lq + tail_pos;
        return (k::large_loglogq * std::log(lq) + k::large_const) * lq * lq + tail_pos;
    case l0_variant::sharp:
        if (q < k::q_small_hi)
            return k::sharp_small_q_logq * std::pow(q, k::sharp_small_exp) * lq +
                   k::sharp_small_q * std::pow(q, k::sharp_small_exp) +
                   k::sharp_small_q0 * std::pow(q, k::sharp_small_exp0) + tail_sym;
        if (q < k::q_mid_hi_exact)
            return k::sharp_mid_log2q * std::pow(q, k::sharp_small_exp0) * lq * lq + tail_pos;
        return k::sharp_large_lead * std::exp(euler_gamma) / (pi_ * pi_) *
                   (std::log(lq) - std::log(2.0) + 0.5 + 1.0 / std::log(lq) +
                    k::sharp_large_inner * std::log(lq) / lq) *
                   lq * lq +
               tail_pos;
    }
    throw std::logic_error("l0_logderiv_bound: unknown variant");
}

/// Bound for |L'/L| at points 1 + 1/log y + it.
inline double l2t_bound(double y) {
    if (!(y > 1.0)) throw std::domain_error("l2t_bound: y <= 1");
    const double ly = std::log(y);
    return ly + euler_gamma + cat::l2t::over_log / ly;
}

/// Closed forms of the trivial-zero series: parity 1 gives
/// (1/2) log(1 + 2/(x-1)), parity 0 gives -(1/2) log(1 - 1/x^2).
inline double trivial_zero_sums(double x, int parity_a) {
    if (!(x >= 2.0)) throw std::domain_error("trivial_zero_sums: x < 2");
    if (parity_a != 0 && parity_a != 1)
        throw std::domain_error("trivial_zero_sums: parity must be 0 or 1");
    if (parity_a == 1) return 0.5 * std::log(1.0 + 2.0 / (x - 1.0));
    return -0.5 * std::log(1.0 - 1.0 / (x * x));
}

/// Partial sum of the same series, for convergence cross-checks.
inline double trivial_zero_partial(double x, int parity_a, int mterms) {
    if (!(x >= 2.0)) throw std::domain_error("trivial_zero_partial: x < 2");
    kahan_sum s;
    for (int m = 1; m <= mterms; ++m) {
        const double expo = parity_a - 2.0 * m;
        s.add(std::pow(x, expo) / (2.0 * m - parity_a));
    }
    return s.value();
}

/// The nine-term comparison bound between psi0(x, chi) and the truncated
/// contour integral at height T.
inline bound_breakdown jest_bound(double x, double T) {
    namespace k = cat::jest;
    if (!(x >= 2.0)) throw std::domain_error("jest_bound: x < 2");
    if (!(T > 0.0)) throw std::domain_error("jest_bound: T <= 0");
    const double lx = std::log(x), sx = std::sqrt(x);
    bound_breakdown b;
    b.terms.push_back({"x_log2_over_t", k::x_log2_over_t, k::x_log2_over_t * x * lx * lx / T});
    b.terms.push_back({"sqrt_log", k::sqrt_log, k::sqrt_log * sx * lx});
    b.terms.push_back({"x_log_over_t", k::x_log_over_t, k::x_log_over_t * x * lx / T});
    b.terms.push_back({"x_over_t", k::x_over_t, k::x_over_t * x / T});
    b.terms.push_back({"x_over_tlog", k::x_over_tlog, k::x_over_tlog * x / (T * lx)});
    b.terms.push_back({"sqrt_log_over_t", k::sqrt_log_over_t, k::sqrt_log_over_t * sx * lx / T});
    b.terms.push_back({"sqrt_over_t", k::sqrt_over_t, k::sqrt_over_t * sx / T});
    b.terms.push_back({"log_over_t", 1.0, lx / T});
    b.terms.push_back({"one_over_t", 1.0, 1.0 / T});
    detail::finish(b);
    return b;
}

/// Error of the truncated Perron integral for y^s/s: y^c min(1, 1/(T|log y|)),
/// and c/T exactly at y = 1.
inline double iest_bound(double y, double c, double T) {
    if (!(y > 0.0)) throw std::domain_error("iest_bound: y <= 0");
    if (!(c > 0.0)) throw std::domain_error("iest_bound: c <= 0");
    if (!(T > 0.0)) throw std::domain_error("iest_bound: T <= 0");
    if (y == 1.0) return c / T;
    return std::pow(y, c) * std::min(1.0, 1.0 / (T * std::abs(std::log(y))));
}

/// Bound on the zero sum within unit distance of the horizontal line.
inline double sum_small_diff_bound(double q, double T) {
    namespace k = cat::small_diff;
    if (!(q >= 3.0)) throw std::domain_error("sum_small_diff_bound: q < 3");
    if (!(T >= 10.0)) throw std::domain_error("sum_small_diff_bound: T < 10");
    const double lg = std::log(q * (T + 1.0));
    const double ll = std::log(lg);
    return k::log2 * lg * lg + k::log_loglog * lg * ll - k::log * lg + k::loglog2 * ll * ll -
           k::loglog * ll + k::constant;
}

/// Bound on the zero sum at distance >= 1 from the horizontal line.
inline double sum_large_diff_bound(double q, double T) {
    namespace k = cat::large_diff;
    if (!(q >= 3.0)) throw std::domain_error("sum_large_diff_bound: q < 3");
    if (!(T >= 10.0)) throw std::domain_error("sum_large_diff_bound: T < 10");
    return k::log_quad * std::log(T * T / 4.0 + T / 2.0 + 2.5) + k::logq * std::log(q) +
           k::constant;
}

}  // namespace primeap
