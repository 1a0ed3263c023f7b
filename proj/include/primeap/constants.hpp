#pragma once

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace primeap {

// Every transcribed numeric constant in the bound formulas lives here,
// exactly once, together with a catalogue row naming where it is used.
// The evaluators in bounds.hpp refer to these by name; the shipped
// data/constants.csv is checked against this table at startup.
namespace cat {

// ---- truncation height T(x) = x^0.577 + 8.509 and companions ----
inline constexpr double t_exponent = 0.577;
inline constexpr double t_offset = 8.509;

// ---- psi(x;q,a) error bound ----
namespace psi_bound {
inline constexpr double sqrt_log_logq = 0.184;
inline constexpr double sqrt_log_const = 8.250;
inline constexpr double sqrt_logq = 5.314;
inline constexpr double sqrt_const = 124.318;
inline constexpr double over_log_log2q = 5.048;
inline constexpr double over_log_logq = 109.573;
inline constexpr double over_log_const = 725.316;
inline constexpr double logx_logq = 2.015;
inline constexpr double logx_const = 0.5;
}  // namespace psi_bound

// ---- R1(q), the O(1)-in-x block of the psi bound ----
namespace r1 {
inline constexpr double q_small_hi = 4e5;
inline constexpr double q_mid_hi = 1e29;
inline constexpr double small_sqrtq_logq = 0.014;
inline constexpr double small_sqrtq = 0.034;
inline constexpr double logq = 3.679;
inline constexpr double small_const = 263.886;
inline constexpr double mid_log2q = 1.858;
inline constexpr double mid_const = 104.626;
inline constexpr double large_loglogq = 0.297;
inline constexpr double large_log2q = 0.603;
}  // namespace r1

// ---- pi(x;q,a) error bound, full form ----
namespace pi_bound {
inline constexpr double sqrt_logq = 0.184;
inline constexpr double sqrt_const = 8.396;
inline constexpr double over_log_logq = 6.05;
inline constexpr double over_log_const = 158.745;
inline constexpr double over_log2_log2q = 5.048;
inline constexpr double over_log2_logq = 152.085;
inline constexpr double over_log2_const = 1731.270;
inline constexpr double x14_loglog_logq = 0.184;
inline constexpr double x14_loglog_const = 8.250;
inline constexpr double x14_log2q = 5.254;
inline constexpr double x14_logq = 121.765;
inline constexpr double x14_const = 939.260;
inline constexpr double over_log3_log2q = 80.768;
inline constexpr double over_log3_logq = 1753.168;
inline constexpr double over_log3_const = 11605.056;
inline constexpr double negative_const = 237.934;
}  // namespace pi_bound

// ---- pi(x;q,a) error bound, simplified form ----
namespace pi_simple {
inline constexpr double sqrt_logq = 0.184;
inline constexpr double sqrt_const = 12969.946;
}  // namespace pi_simple

// ---- tail of the zero sum beyond height T ----
namespace large_rho {
inline constexpr double x423_log2 = 1.363;
inline constexpr double sqrt_log = 2.074;
inline constexpr double x423_log = 14.712;
inline constexpr double x423_loglog = 18.610;
inline constexpr double x423_logq = 2.382;
inline constexpr double x423_const = 8.018;
inline constexpr double block_loglog2 = 127.562;
inline constexpr double block_loglog_logq = 32.449;
inline constexpr double block_loglog_const = 1.720;  // enters with a minus sign
inline constexpr double block_log2q = 2.064;
inline constexpr double block_logq = 6.570;
inline constexpr double block_const = 79.146;
inline constexpr double decay_log = 13.962;
inline constexpr double decay_loglog = 8.4;
inline constexpr double decay_logq = 1.255;
inline constexpr double decay_const = 8.510;
}  // namespace large_rho

// ---- zero sum up to height T ----
namespace small_rho {
inline constexpr double sqrt_log_logq = 0.184;
inline constexpr double sqrt_log_const = 0.337;  // enters with a minus sign
inline constexpr double sqrt_logq = 1.693;
inline constexpr double sqrt_const = 11.946;
}  // namespace small_rho

// ---- zero-counting estimates N(T, chi) ----
namespace nzeros {
inline constexpr double vanish_threshold = 1.567;
inline constexpr double sharp_log = 0.22737;
inline constexpr double sharp_loglog = 2.0;
inline constexpr double sharp_const = 0.5;  // enters with a minus sign
inline constexpr double simple_log = 0.247;
inline constexpr double simple_const = 6.894;
inline constexpr double t_min = 5.0 / 7.0;
}  // namespace nzeros

// ---- spacing of zero ordinates ----
namespace zero_gap {
inline constexpr double log_qt = 1.092;
inline constexpr double loglog_qt = 4.0;
inline constexpr double constant = 0.250;  // enters with a minus sign
}  // namespace zero_gap

// ---- sums over zeros near / far from the horizontal line ----
namespace small_diff {
inline constexpr double log2 = 2.385;
inline constexpr double log_loglog = 17.472;
inline constexpr double log = 3.276;  // minus sign
inline constexpr double loglog2 = 32.0;
inline constexpr double loglog = 12.0;  // minus sign
inline constexpr double constant = 0.625;
}  // namespace small_diff

namespace large_diff {
inline constexpr double log_quad = 13.0 / 8.0;
inline constexpr double logq = 10.868;
inline constexpr double constant = 78.232;
}  // namespace large_diff

// ---- Laurent constant b(chi) ----
namespace bchi {
inline constexpr double logq = 2.751;
inline constexpr double constant = 23.878;
}  // namespace bchi

// ---- |L'(0)/L(0)| bounds ----
namespace l0 {
inline constexpr double q_small_hi = 4e5;
inline constexpr double q_mid_hi_exact = 1e10;
inline constexpr double q_mid_hi_induced = 1e29;
// simplified constants (exact-modulus and induced variants)
inline constexpr double small_sqrtq_logq = 0.027;
inline constexpr double small_sqrtq = 0.067;
inline constexpr double small_const = 316.229;
inline constexpr double mid_log2q = 3.715;
inline constexpr double large_loglogq = 0.593;
inline constexpr double large_const = 1.205;
// sharp variant
inline constexpr double sharp_small_q_logq = 0.020;
inline constexpr double sharp_small_q = 0.005;
inline constexpr double sharp_small_q0 = 239.330;
inline constexpr double sharp_small_exp = 0.5216;
inline constexpr double sharp_small_exp0 = 0.0216;
inline constexpr double sharp_mid_log2q = 2.259;
inline constexpr double sharp_large_lead = 3.28272;
inline constexpr double sharp_large_inner = 14.0;
}  // namespace l0

// ---- zeta'/zeta near the 1-line ----
namespace l2t {
inline constexpr double over_log = 0.478;
inline constexpr double sigma2_bound = 0.570;
}  // namespace l2t

// ---- truncated-integral comparison ----
namespace jest {
inline constexpr double x_log2_over_t = 1.363;
inline constexpr double sqrt_log = 2.074;
inline constexpr double x_log_over_t = 12.294;
inline constexpr double x_over_t = 7.032;
inline constexpr double x_over_tlog = 5.823;
inline constexpr double sqrt_log_over_t = 12.624;
inline constexpr double sqrt_over_t = 0.893;
}  // namespace jest

// ---- elementary inequality lemmas ----
namespace ineq {
inline constexpr double x423_log_bound = 14.712;
inline constexpr double x423_loglog_bound = 18.610;
inline constexpr double x423_logq = 2.382;
inline constexpr double x423_const = 8.018;
inline constexpr double x423_over_log = 4.35825;
inline constexpr double e0423_logq_factor = 4.77;
inline constexpr double e0423_log_factor = 3.276;  // minus sign
inline constexpr double asympt_lhs_log_t = 1.092;
inline constexpr double asympt_lhs_loglog = 4.0;
inline constexpr double asympt_lhs_sqrt = 0.893;
inline constexpr double asympt_lhs_neg = 1.250;
inline constexpr double asympt_lhs_tail_const = 3.570;
inline constexpr double asympt_rhs_log = 13.962;
inline constexpr double asympt_rhs_loglog = 8.4;
inline constexpr double asympt_rhs_logq = 1.255;
inline constexpr double asympt_rhs_const = 8.510;
inline constexpr double logx_pow_bound = 4.778;
inline constexpr double pow_exp = 0.077;
inline constexpr double logx_pow_double = 9.556;
inline constexpr double x14_over_log = 0.416;
inline constexpr double x14_loglog = 0.524;
inline constexpr double x14_over_log2 = 949.261;
inline constexpr double q_large_lo = 1e29;
}  // namespace ineq

// ---- negative-term lower bounds for the pi proof ----
namespace pi_lower {
inline constexpr double sub_log_logq = 11.364;
inline constexpr double sub_log_const = 284.488;
inline constexpr double sub_log2_log2q = 10.096;
inline constexpr double sub_log2_logq = 261.658;
inline constexpr double sub_log2_const = 2456.585;
inline constexpr double rhs_loglog_logq = 2.015;
inline constexpr double rhs_loglog_const = 0.5;
inline constexpr double rhs_log2q = 2.104;
inline constexpr double rhs_logq = 55.018;
inline constexpr double rhs_const = 611.027;
inline constexpr double large_loglog_log2q = 0.297;  // divided by log 2
inline constexpr double large_log2q = 45086.567;
inline constexpr double large_logq = 2.8e6;
inline constexpr double large_const = 8.5e7;
inline constexpr double whole_logq = 2.754;
inline constexpr double whole_const = 1.455;
}  // namespace pi_lower

// ---- unconditional comparisons ----
namespace chebyshev {
inline constexpr double psi_theta_sqrt = 1.4262;
inline constexpr double small_x_integer_slack = 1.6;
inline constexpr double small_x_real_slack = 2.6;
inline constexpr double small_x_hi = 74.0;
}  // namespace chebyshev

// ---- reference values reproduced by the verifier ----
namespace reference {
inline constexpr double series_log_weighted = 1.30397;
inline constexpr double series_log_weighted_cap = 1.304;
inline constexpr double series_linear_weighted = 3.44556;
inline constexpr double series_linear_weighted_cap = 3.446;
inline constexpr double series_cutoff = 150.0;
inline constexpr double w_ratio_lo = 3.080;
inline constexpr double w_ratio_hi = 3.082;
inline constexpr double double_exp_lo = 27.863;
inline constexpr double double_exp_hi = 27.864;
}  // namespace reference

}  // namespace cat

struct constant_record {
    const char* label;
    double value;
    const char* anchor;
};

inline constexpr std::array constants_catalogue{
    constant_record{"truncation.t_exponent", cat::t_exponent, "height T(x) = x^0.577 + 8.509"},
    constant_record{"truncation.t_offset", cat::t_offset, "height T(x) = x^0.577 + 8.509"},

    constant_record{"psi.sqrt_log.logq", cat::psi_bound::sqrt_log_logq, "psi bound - sqrt(x) log x term"},
    constant_record{"psi.sqrt_log.const", cat::psi_bound::sqrt_log_const, "psi bound - sqrt(x) log x term"},
    constant_record{"psi.sqrt.logq", cat::psi_bound::sqrt_logq, "psi bound - sqrt(x) term"},
    constant_record{"psi.sqrt.const", cat::psi_bound::sqrt_const, "psi bound - sqrt(x) term"},
    constant_record{"psi.over_log.log2q", cat::psi_bound::over_log_log2q, "psi bound - sqrt(x)/log x term"},
    constant_record{"psi.over_log.logq", cat::psi_bound::over_log_logq, "psi bound - sqrt(x)/log x term"},
    constant_record{"psi.over_log.const", cat::psi_bound::over_log_const, "psi bound - sqrt(x)/log x term"},
    constant_record{"psi.logx.logq", cat::psi_bound::logx_logq, "psi bound - log x term"},
    constant_record{"psi.logx.const", cat::psi_bound::logx_const, "psi bound - log x term"},

    constant_record{"r1.q_small_hi", cat::r1::q_small_hi, "R1(q) branch split"},
    constant_record{"r1.q_mid_hi", cat::r1::q_mid_hi, "R1(q) branch split"},
    constant_record{"r1.small.sqrtq_logq", cat::r1::small_sqrtq_logq, "R1(q) - small-q branch"},
    constant_record{"r1.small.sqrtq", cat::r1::small_sqrtq, "R1(q) - small-q branch"},
    constant_record{"r1.logq", cat::r1::logq, "R1(q) - all branches"},
    constant_record{"r1.small.const", cat::r1::small_const, "R1(q) - small-q branch"},
    constant_record{"r1.mid.log2q", cat::r1::mid_log2q, "R1(q) - mid-q branch"},
    constant_record{"r1.mid.const", cat::r1::mid_const, "R1(q) - mid and large branches"},
    constant_record{"r1.large.loglogq", cat::r1::large_loglogq, "R1(q) - large-q branch"},
    constant_record{"r1.large.log2q", cat::r1::large_log2q, "R1(q) - large-q branch"},

    constant_record{"pi.sqrt.logq", cat::pi_bound::sqrt_logq, "pi bound - sqrt(x) term"},
    constant_record{"pi.sqrt.const", cat::pi_bound::sqrt_const, "pi bound - sqrt(x) term"},
    constant_record{"pi.over_log.logq", cat::pi_bound::over_log_logq, "pi bound - sqrt(x)/log x term"},
    constant_record{"pi.over_log.const", cat::pi_bound::over_log_const, "pi bound - sqrt(x)/log x term"},
    constant_record{"pi.over_log2.log2q", cat::pi_bound::over_log2_log2q, "pi bound - sqrt(x)/log^2 x term"},
    constant_record{"pi.over_log2.logq", cat::pi_bound::over_log2_logq, "pi bound - sqrt(x)/log^2 x term"},
    constant_record{"pi.over_log2.const", cat::pi_bound::over_log2_const, "pi bound - sqrt(x)/log^2 x term"},
    constant_record{"pi.x14_loglog.logq", cat::pi_bound::x14_loglog_logq, "pi bound - x^1/4 loglog x term"},
    constant_record{"pi.x14_loglog.const", cat::pi_bound::x14_loglog_const, "pi bound - x^1/4 loglog x term"},
    constant_record{"pi.x14.log2q", cat::pi_bound::x14_log2q, "pi bound - x^1/4 term"},
    constant_record{"pi.x14.logq", cat::pi_bound::x14_logq, "pi bound - x^1/4 term"},
    constant_record{"pi.x14.const", cat::pi_bound::x14_const, "pi bound - x^1/4 term"},
    constant_record{"pi.over_log3.log2q", cat::pi_bound::over_log3_log2q, "pi bound - sqrt(x)/log^3 x term"},
    constant_record{"pi.over_log3.logq", cat::pi_bound::over_log3_logq, "pi bound - sqrt(x)/log^3 x term"},
    constant_record{"pi.over_log3.const", cat::pi_bound::over_log3_const, "pi bound - sqrt(x)/log^3 x term"},
    constant_record{"pi.negative_const", cat::pi_bound::negative_const, "pi bound - trailing constant (negative)"},

    constant_record{"pi_simple.sqrt.logq", cat::pi_simple::sqrt_logq, "simplified pi bound - sqrt(x) term"},
    constant_record{"pi_simple.sqrt.const", cat::pi_simple::sqrt_const, "simplified pi bound - sqrt(x) term"},

    constant_record{"large_rho.x423_log2", cat::large_rho::x423_log2, "zero-sum tail bound"},
    constant_record{"large_rho.sqrt_log", cat::large_rho::sqrt_log, "zero-sum tail bound"},
    constant_record{"large_rho.x423_log", cat::large_rho::x423_log, "zero-sum tail bound"},
    constant_record{"large_rho.x423_loglog", cat::large_rho::x423_loglog, "zero-sum tail bound"},
    constant_record{"large_rho.x423.logq", cat::large_rho::x423_logq, "zero-sum tail bound"},
    constant_record{"large_rho.x423.const", cat::large_rho::x423_const, "zero-sum tail bound"},
    constant_record{"large_rho.block.loglog2", cat::large_rho::block_loglog2, "zero-sum tail bound - /log x block"},
    constant_record{"large_rho.block.loglog_logq", cat::large_rho::block_loglog_logq, "zero-sum tail bound - /log x block"},
    constant_record{"large_rho.block.loglog_const", cat::large_rho::block_loglog_const, "zero-sum tail bound - /log x block (negative)"},
    constant_record{"large_rho.block.log2q", cat::large_rho::block_log2q, "zero-sum tail bound - /log x block"},
    constant_record{"large_rho.block.logq", cat::large_rho::block_logq, "zero-sum tail bound - /log x block"},
    constant_record{"large_rho.block.const", cat::large_rho::block_const, "zero-sum tail bound - /log x block"},
    constant_record{"large_rho.decay.log", cat::large_rho::decay_log, "zero-sum tail bound - x^-0.077 terms"},
    constant_record{"large_rho.decay.loglog", cat::large_rho::decay_loglog, "zero-sum tail bound - x^-0.077 terms"},
    constant_record{"large_rho.decay.logq", cat::large_rho::decay_logq, "zero-sum tail bound - x^-0.077 terms"},
    constant_record{"large_rho.decay.const", cat::large_rho::decay_const, "zero-sum tail bound - x^-0.077 terms"},

    constant_record{"small_rho.sqrt_log.logq", cat::small_rho::sqrt_log_logq, "truncated zero-sum bound"},
    constant_record{"small_rho.sqrt_log.const", cat::small_rho::sqrt_log_const, "truncated zero-sum bound (negative)"},
    constant_record{"small_rho.sqrt.logq", cat::small_rho::sqrt_logq, "truncated zero-sum bound"},
    constant_record{"small_rho.sqrt.const", cat::small_rho::sqrt_const, "truncated zero-sum bound"},

    constant_record{"nzeros.vanish_threshold", cat::nzeros::vanish_threshold, "zero count vanishing condition"},
    constant_record{"nzeros.sharp.log", cat::nzeros::sharp_log, "zero count - sharp error form"},
    constant_record{"nzeros.sharp.loglog", cat::nzeros::sharp_loglog, "zero count - sharp error form"},
    constant_record{"nzeros.sharp.const", cat::nzeros::sharp_const, "zero count - sharp error form (negative)"},
    constant_record{"nzeros.simple.log", cat::nzeros::simple_log, "zero count - simple error form"},
    constant_record{"nzeros.simple.const", cat::nzeros::simple_const, "zero count - simple error form"},

    constant_record{"zero_gap.log_qt", cat::zero_gap::log_qt, "zero-spacing denominator"},
    constant_record{"zero_gap.loglog_qt", cat::zero_gap::loglog_qt, "zero-spacing denominator"},
    constant_record{"zero_gap.const", cat::zero_gap::constant, "zero-spacing denominator (negative)"},

    constant_record{"small_diff.log2", cat::small_diff::log2, "near-line zero sum bound"},
    constant_record{"small_diff.log_loglog", cat::small_diff::log_loglog, "near-line zero sum bound"},
    constant_record{"small_diff.log", cat::small_diff::log, "near-line zero sum bound (negative)"},
    constant_record{"small_diff.loglog2", cat::small_diff::loglog2, "near-line zero sum bound"},
    constant_record{"small_diff.loglog", cat::small_diff::loglog, "near-line zero sum bound (negative)"},
    constant_record{"small_diff.const", cat::small_diff::constant, "near-line zero sum bound"},

    constant_record{"large_diff.log_quad", cat::large_diff::log_quad, "far-line zero sum bound"},
    constant_record{"large_diff.logq", cat::large_diff::logq, "far-line zero sum bound"},
    constant_record{"large_diff.const", cat::large_diff::constant, "far-line zero sum bound"},

    constant_record{"bchi.logq", cat::bchi::logq, "Laurent constant bound"},
    constant_record{"bchi.const", cat::bchi::constant, "Laurent constant bound"},

    constant_record{"l0.q_small_hi", cat::l0::q_small_hi, "L'(0)/L(0) branch split"},
    constant_record{"l0.q_mid_hi_exact", cat::l0::q_mid_hi_exact, "L'(0)/L(0) branch split - exact modulus"},
    constant_record{"l0.q_mid_hi_induced", cat::l0::q_mid_hi_induced, "L'(0)/L(0) branch split - induced"},
    constant_record{"l0.small.sqrtq_logq", cat::l0::small_sqrtq_logq, "L'(0)/L(0) bound - small q"},
    constant_record{"l0.small.sqrtq", cat::l0::small_sqrtq, "L'(0)/L(0) bound - small q"},
    constant_record{"l0.small.const", cat::l0::small_const, "L'(0)/L(0) bound - small q"},
    constant_record{"l0.mid.log2q", cat::l0::mid_log2q, "L'(0)/L(0) bound - mid q"},
    constant_record{"l0.large.loglogq", cat::l0::large_loglogq, "L'(0)/L(0) bound - large q"},
    constant_record{"l0.large.const", cat::l0::large_const, "L'(0)/L(0) bound - large q"},
    constant_record{"l0.sharp.small.q_logq", cat::l0::sharp_small_q_logq, "L'(0)/L(0) sharp bound - small q"},
    constant_record{"l0.sharp.small.q", cat::l0::sharp_small_q, "L'(0)/L(0) sharp bound - small q"},
    constant_record{"l0.sharp.small.q0", cat::l0::sharp_small_q0, "L'(0)/L(0) sharp bound - small q"},
    constant_record{"l0.sharp.small.exp", cat::l0::sharp_small_exp, "L'(0)/L(0) sharp bound - small q exponent"},
    constant_record{"l0.sharp.small.exp0", cat::l0::sharp_small_exp0, "L'(0)/L(0) sharp bound - small q exponent"},
    constant_record{"l0.sharp.mid.log2q", cat::l0::sharp_mid_log2q, "L'(0)/L(0) sharp bound - mid q"},
    constant_record{"l0.sharp.large.lead", cat::l0::sharp_large_lead, "L'(0)/L(0) sharp bound - large q"},
    constant_record{"l0.sharp.large.inner", cat::l0::sharp_large_inner, "L'(0)/L(0) sharp bound - large q"},

    constant_record{"l2t.over_log", cat::l2t::over_log, "zeta'/zeta bound near the 1-line"},
    constant_record{"l2t.sigma2_bound", cat::l2t::sigma2_bound, "zeta'/zeta bound for sigma >= 2"},

    constant_record{"jest.x_log2_over_t", cat::jest::x_log2_over_t, "truncated-integral comparison"},
    constant_record{"jest.sqrt_log", cat::jest::sqrt_log, "truncated-integral comparison"},
    constant_record{"jest.x_log_over_t", cat::jest::x_log_over_t, "truncated-integral comparison"},
    constant_record{"jest.x_over_t", cat::jest::x_over_t, "truncated-integral comparison"},
    constant_record{"jest.x_over_tlog", cat::jest::x_over_tlog, "truncated-integral comparison"},
    constant_record{"jest.sqrt_log_over_t", cat::jest::sqrt_log_over_t, "truncated-integral comparison"},
    constant_record{"jest.sqrt_over_t", cat::jest::sqrt_over_t, "truncated-integral comparison"},

    constant_record{"ineq.x423_log_bound", cat::ineq::x423_log_bound, "x^0.423 log x inequality"},
    constant_record{"ineq.x423_loglog_bound", cat::ineq::x423_loglog_bound, "x^0.423 loglog inequality"},
    constant_record{"ineq.x423.logq", cat::ineq::x423_logq, "x^0.423 inequality"},
    constant_record{"ineq.x423.const", cat::ineq::x423_const, "x^0.423 inequality"},
    constant_record{"ineq.x423.over_log", cat::ineq::x423_over_log, "x^0.423 inequality - /log x term"},
    constant_record{"ineq.e0423.logq_factor", cat::ineq::e0423_logq_factor, "x^0.423 inequality - left side"},
    constant_record{"ineq.e0423.log_factor", cat::ineq::e0423_log_factor, "x^0.423 inequality - left side (negative)"},
    constant_record{"ineq.asympt.lhs_log_t", cat::ineq::asympt_lhs_log_t, "vanishing-terms inequality - left side"},
    constant_record{"ineq.asympt.lhs_loglog", cat::ineq::asympt_lhs_loglog, "vanishing-terms inequality - left side"},
    constant_record{"ineq.asympt.lhs_sqrt", cat::ineq::asympt_lhs_sqrt, "vanishing-terms inequality - left side"},
    constant_record{"ineq.asympt.lhs_neg", cat::ineq::asympt_lhs_neg, "vanishing-terms inequality - left side (negative)"},
    constant_record{"ineq.asympt.lhs_tail_const", cat::ineq::asympt_lhs_tail_const, "vanishing-terms inequality - left side"},
    constant_record{"ineq.asympt.rhs_log", cat::ineq::asympt_rhs_log, "vanishing-terms inequality - right side"},
    constant_record{"ineq.asympt.rhs_loglog", cat::ineq::asympt_rhs_loglog, "vanishing-terms inequality - right side"},
    constant_record{"ineq.asympt.rhs_logq", cat::ineq::asympt_rhs_logq, "vanishing-terms inequality - right side"},
    constant_record{"ineq.asympt.rhs_const", cat::ineq::asympt_rhs_const, "vanishing-terms inequality - right side"},
    constant_record{"ineq.logx_pow_bound", cat::ineq::logx_pow_bound, "log x < 4.778 x^0.077"},
    constant_record{"ineq.pow_exp", cat::ineq::pow_exp, "x^0.077 exponent"},
    constant_record{"ineq.logx_pow_double", cat::ineq::logx_pow_double, "log x < 9.556 x^0.0385"},
    constant_record{"ineq.x14_over_log", cat::ineq::x14_over_log, "x^1/4 / log x vs loglog x"},
    constant_record{"ineq.x14_loglog", cat::ineq::x14_loglog, "x^1/4 loglog x vs sqrt x"},
    constant_record{"ineq.x14_over_log2", cat::ineq::x14_over_log2, "x^1/4 / log^2 x vs loglog x - large x"},
    constant_record{"ineq.q_large_lo", cat::ineq::q_large_lo, "large-q threshold"},

    constant_record{"pi_lower.sub.log_logq", cat::pi_lower::sub_log_logq, "negative-term lower bound"},
    constant_record{"pi_lower.sub.log_const", cat::pi_lower::sub_log_const, "negative-term lower bound"},
    constant_record{"pi_lower.sub.log2_log2q", cat::pi_lower::sub_log2_log2q, "negative-term lower bound"},
    constant_record{"pi_lower.sub.log2_logq", cat::pi_lower::sub_log2_logq, "negative-term lower bound"},
    constant_record{"pi_lower.sub.log2_const", cat::pi_lower::sub_log2_const, "negative-term lower bound"},
    constant_record{"pi_lower.rhs.loglog_logq", cat::pi_lower::rhs_loglog_logq, "negative-term lower bound - right side"},
    constant_record{"pi_lower.rhs.loglog_const", cat::pi_lower::rhs_loglog_const, "negative-term lower bound - right side"},
    constant_record{"pi_lower.rhs.log2q", cat::pi_lower::rhs_log2q, "negative-term lower bound - right side"},
    constant_record{"pi_lower.rhs.logq", cat::pi_lower::rhs_logq, "negative-term lower bound - right side"},
    constant_record{"pi_lower.rhs.const", cat::pi_lower::rhs_const, "negative-term lower bound - right side"},
    constant_record{"pi_lower.large.loglog_log2q", cat::pi_lower::large_loglog_log2q, "negative-term lower bound - large q"},
    constant_record{"pi_lower.large.log2q", cat::pi_lower::large_log2q, "negative-term lower bound - large q"},
    constant_record{"pi_lower.large.logq", cat::pi_lower::large_logq, "negative-term lower bound - large q"},
    constant_record{"pi_lower.large.const", cat::pi_lower::large_const, "negative-term lower bound - large q"},
    constant_record{"pi_lower.whole.logq", cat::pi_lower::whole_logq, "combined negative-term bound"},
    constant_record{"pi_lower.whole.const", cat::pi_lower::whole_const, "combined negative-term bound"},

    constant_record{"chebyshev.psi_theta_sqrt", cat::chebyshev::psi_theta_sqrt, "psi - theta comparison"},
    constant_record{"chebyshev.small_x_integer_slack", cat::chebyshev::small_x_integer_slack, "small-x psi check - integer grid"},
    constant_record{"chebyshev.small_x_real_slack", cat::chebyshev::small_x_real_slack, "small-x psi check - real grid"},
    constant_record{"chebyshev.small_x_hi", cat::chebyshev::small_x_hi, "small-x psi check - range end"},

    constant_record{"reference.series_log_weighted", cat::reference::series_log_weighted, "verified series value"},
    constant_record{"reference.series_log_weighted_cap", cat::reference::series_log_weighted_cap, "verified series one-sided cap"},
    constant_record{"reference.series_linear_weighted", cat::reference::series_linear_weighted, "verified series value"},
    constant_record{"reference.series_linear_weighted_cap", cat::reference::series_linear_weighted_cap, "verified series one-sided cap"},
    constant_record{"reference.series_cutoff", cat::reference::series_cutoff, "verified series cutoff"},
    constant_record{"reference.w_ratio_lo", cat::reference::w_ratio_lo, "verified Lambert-W value - window"},
    constant_record{"reference.w_ratio_hi", cat::reference::w_ratio_hi, "verified Lambert-W value - window"},
    constant_record{"reference.double_exp_lo", cat::reference::double_exp_lo, "verified double-exponential value - window"},
    constant_record{"reference.double_exp_hi", cat::reference::double_exp_hi, "verified double-exponential value - window"},
};

inline double constant_by_label(std::string_view label) {
    for (const auto& r : constants_catalogue)
        if (label == r.label) return r.value;
    throw std::out_of_range("unknown constant label: " + std::string(label));
}

/// Writes the catalogue as CSV (label,value,anchor), one record per line.
inline void write_catalogue(std::ostream& os) {
    char buf[64];
    for (const auto& r : constants_catalogue) {
        std::snprintf(buf, sizeof buf, "%.17g", r.value);
        os << r.label << ',' << buf << ',' << r.anchor << '\n';
    }
}

struct catalogue_row {
    std::string label;
    double value;
    std::string anchor;
};

inline std::vector<catalogue_row> load_catalogue(std::istream& is) {
    std::vector<catalogue_row> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::runtime_error("constants catalogue: malformed line: " + line);
        rows.push_back({line.substr(0, c1),
                        std::stod(line.substr(c1 + 1, c2 - c1 - 1)),
                        line.substr(c2 + 1)});
    }
    return rows;
}

/// Loads a catalogue file and checks it against the compiled table.
/// Returns the labels that are missing or disagree (empty = consistent).
inline std::vector<std::string> check_catalogue_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("constants catalogue: cannot open " + path);
    const auto rows = load_catalogue(f);
    std::vector<std::string> bad;
    for (const auto& r : constants_catalogue) {
        bool found = false;
        for (const auto& row : rows) {
            if (row.label != r.label) continue;
            found = true;
            if (row.value != r.value) bad.push_back(row.label);
            break;
        }
        if (!found) bad.push_back(r.label);
    }
    return bad;
}

}  // namespace primeap
