#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primeap/bounds.hpp"
#include "primeap/characters.hpp"
#include "primeap/constants.hpp"
#include "primeap/quadrature.hpp"
#include "primeap/sieve.hpp"
#include "primeap/specialfn.hpp"

namespace primeap {

enum class axis_scale { linear, log_scale };

struct search_dim {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    axis_scale scale = axis_scale::log_scale;
};

struct search_domain {
    std::vector<search_dim> dims;
    int coarse_points_per_dim = 512;
    int refine_iters = 64;
    int worst_k = 8;
};

struct verification_report {
    std::string lemma_id;
    search_domain domain;
    double min_margin = std::numeric_limits<double>::infinity();
    std::vector<double> argmin;
    u64 evaluations = 0;
    bool pass = false;
    std::string note;
};

/// One registered inequality: a margin function (positive = holds) over a
/// default hypothesis domain. `clip` snaps grid points onto the hypothesis
/// set (x >= q, integrality) before evaluation. Entries that cannot be
/// expressed as a plain grid sweep provide a custom runner instead.
struct inequality_def {
    std::string id;
    std::string description;
    search_domain domain;
    std::function<double(std::span<const double>)> margin;
    std::function<void(std::span<double>)> clip;
    std::function<verification_report(const inequality_def&, const search_domain&)> custom;
};

namespace detail {

inline double grid_coord(const search_dim& d, int i, int n) {
    if (n <= 1) return d.lo;
    const double t = static_cast<double>(i) / (n - 1);
    if (d.scale == axis_scale::log_scale) return d.lo * std::pow(d.hi / d.lo, t);
    return d.lo + (d.hi - d.lo) * t;
}

struct golden_result {
    double x;
    double fx;
};

template <typename F>
golden_result golden_min(F&& f, double a, double b, int iters, u64& evals) {
    constexpr double invphi = 0.6180339887498949;
    double c = b - (b - a) * invphi;
    double d = a + (b - a) * invphi;
    double fc = f(c), fd = f(d);
    evals += 2;
    for (int i = 0; i < iters && std::abs(b - a) > 1e-15 * (1.0 + std::abs(a)); ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * invphi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * invphi;
            fd = f(d);
        }
        ++evals;
    }
    return fc < fd ? golden_result{c, fc} : golden_result{d, fd};
}

}  // namespace detail

/// Coarse product-grid scan followed by coordinate-wise golden-section
/// refinement around the worst points. The scan runs in parallel over
/// first-axis slices; slice results are merged in slice order, so the
/// report is bitwise identical for any thread count.
inline verification_report run_grid_search(const inequality_def& def,
                                           const search_domain& dom,
                                           unsigned threads = 0) {
    if (dom.dims.empty()) throw std::domain_error("search domain has no dimensions");
    if (dom.coarse_points_per_dim < 16)
        throw std::domain_error("coarse_points_per_dim must be >= 16");
    for (const auto& d : dom.dims)
        if (!(d.lo < d.hi)) throw std::domain_error("search dim must have lo < hi");

    const int n = dom.coarse_points_per_dim;
    const std::size_t dims = dom.dims.size();
    const int keep = std::max(1, dom.worst_k);

    struct candidate {
        double margin;
        std::vector<int> idx;
    };
    auto insert_candidate = [keep](std::vector<candidate>& worst, candidate c) {
        if (static_cast<int>(worst.size()) >= keep && c.margin >= worst.back().margin)
            return;
        auto pos = std::lower_bound(worst.begin(), worst.end(), c,
                                    [](const candidate& a, const candidate& b) {
                                        return a.margin < b.margin;
                                    });
        worst.insert(pos, std::move(c));
        if (static_cast<int>(worst.size()) > keep) worst.pop_back();
    };

    auto eval_idx = [&](const std::vector<int>& idx, std::vector<double>& pt) {
        for (std::size_t d = 0; d < dims; ++d)
            pt[d] = detail::grid_coord(dom.dims[d], idx[d], n);
        if (def.clip) def.clip(pt);
        return def.margin(pt);
    };

    std::vector<std::vector<candidate>> slice_worst(n);
    std::vector<u64> slice_evals(n, 0);
    parallel_for_chunks(static_cast<std::size_t>(n),
                        threads ? threads : default_thread_count(),
                        [&](std::size_t slice) {
        std::vector<int> idx(dims, 0);
        idx[0] = static_cast<int>(slice);
        std::vector<double> pt(dims);
        for (;;) {
            insert_candidate(slice_worst[slice], {eval_idx(idx, pt), idx});
            ++slice_evals[slice];
            std::size_t d = 1;
            for (; d < dims; ++d) {
                if (++idx[d] < n) break;
                idx[d] = 0;
            }
            if (d == dims) break;
        }
    });

    u64 evals = 0;
    std::vector<candidate> worst;
    for (int s = 0; s < n; ++s) {
        evals += slice_evals[s];
        for (auto& c : slice_worst[s]) insert_candidate(worst, std::move(c));
    }

    auto eval_pt = [&](std::vector<double> pt) {
        if (def.clip) def.clip(pt);
        ++evals;
        return def.margin(pt);
    };
    auto clipped = [&](std::vector<double> pt) {
        if (def.clip) def.clip(pt);
        return pt;
    };

    std::vector<double> pt(dims);
    double best_margin = worst.front().margin;
    for (std::size_t d = 0; d < dims; ++d)
        pt[d] = detail::grid_coord(dom.dims[d], worst.front().idx[d], n);
    std::vector<double> best_pt = clipped(pt);

    // Coordinate-wise refinement in scaled coordinates; two sweeps over the
    // dimensions per worst point.
    for (const auto& cand : worst) {
        std::vector<double> cur(dims);
        for (std::size_t d = 0; d < dims; ++d)
            cur[d] = detail::grid_coord(dom.dims[d], cand.idx[d], n);
        for (int sweep = 0; sweep < 2; ++sweep) {
            for (std::size_t d = 0; d < dims; ++d) {
                const auto& dim = dom.dims[d];
                const int i = cand.idx[d];
                const double lo = detail::grid_coord(dim, std::max(0, i - 1), n);
                const double hi = detail::grid_coord(dim, std::min(n - 1, i + 1), n);
                const bool logs = dim.scale == axis_scale::log_scale;
                const double a = logs ? std::log(lo) : lo;
                const double b = logs ? std::log(hi) : hi;
                auto f1 = [&](double s) {
                    std::vector<double> p = cur;
                    p[d] = logs ? std::exp(s) : s;
                    return eval_pt(std::move(p));
                };
                const auto r = detail::golden_min(f1, a, b, dom.refine_iters, evals);
                if (r.fx < best_margin) {
                    best_margin = r.fx;
                    std::vector<double> p = cur;
                    p[d] = logs ? std::exp(r.x) : r.x;
                    best_pt = clipped(p);
                }
                if (r.fx < eval_pt(cur)) cur[d] = logs ? std::exp(r.x) : r.x;
            }
        }
    }

    verification_report rep;
    rep.lemma_id = def.id;
    rep.domain = dom;
    rep.min_margin = best_margin;
    rep.argmin = best_pt;
    rep.evaluations = evals;
    rep.pass = best_margin > 0.0;
    return rep;
}

namespace lemmas {

// Left/right sides of the registered elementary inequalities, written out
// exactly as evaluated. T always denotes truncation_height(x).

inline double x423log_lhs(double x) {
    const double T = truncation_height(x);
    const double lx = std::log(x);
    const double e = std::numbers::e;
    const double pi = std::numbers::pi;
    return cat::jest::x_log_over_t * x * lx / (T + 1.0) +
           2.0 * x * e * lx / (pi * (T - 1.0)) +
           cat::small_diff::log2 * x * e * std::pow(std::log(T + 1.0), 2) /
               (pi * (T - 1.0) * lx);
}

inline double x423loglog_lhs(double x, double q) {
    const double T = truncation_height(x);
    const double e = std::numbers::e;
    const double pi = std::numbers::pi;
    return cat::small_diff::log_loglog * x * e * std::log(T + 1.0) *
           std::log(std::log(q * (T + 1.0))) / (pi * (T - 1.0) * std::log(x));
}

inline double x423_lhs(double x, double q) {
    const double T = truncation_height(x);
    const double e = std::numbers::e;
    const double pi = std::numbers::pi;
    const double lx = std::log(x);
    return (cat::jest::x_over_t / (T + 1.0) + 2.0 * e * euler_gamma / (pi * (T - 1.0))) * x +
           x * e / (pi * (T - 1.0) * lx) *
               (cat::ineq::e0423_logq_factor * std::log(q) * std::log(T + 1.0) -
                cat::ineq::e0423_log_factor * std::log(T + 1.0) +
                cat::large_diff::log_quad * std::log(T * T / 4.0 + T / 2.0 + 2.5));
}

inline double x423_rhs(double x, double q) {
    const double x423 = std::pow(x, 0.423);
    return (cat::ineq::x423_logq * std::log(q) + cat::ineq::x423_const) * x423 +
           cat::ineq::x423_over_log * std::numbers::e * x423 /
               (std::numbers::pi * std::log(x));
}

inline double loglog_div_log_lhs(double x, double q) {
    const double T = truncation_height(x);
    const double e = std::numbers::e;
    const double pi = std::numbers::pi;
    const double ll = std::log(std::log(q * (T + 1.0)));
    return x * e / (pi * (T - 1.0) * std::log(x)) *
           (cat::small_diff::loglog2 * ll * ll +
            (cat::small_diff::log_loglog * std::log(q) - cat::small_diff::loglog) * ll);
}

inline double loglog_div_log_rhs(double x, double q) {
    const double x423 = std::pow(x, 0.423);
    const double lx = std::log(x);
    const double m = std::log(std::log(q * x));
    return cat::large_rho::block_loglog2 * x423 * m * m / lx +
           (cat::large_rho::block_loglog_logq * std::log(q) -
            cat::large_rho::block_loglog_const) *
               x423 * m / lx;
}

inline double asympt0_lhs(double x, double q) {
    const double T = truncation_height(x);
    const double e = std::numbers::e;
    const double pi = std::numbers::pi;
    const double lx = std::log(x);
    const double sx = std::sqrt(x);
    namespace k = cat::ineq;
    return cat::jest::sqrt_log_over_t * sx * lx / (T + 1.0) +
           k::asympt_lhs_log_t * sx * std::log(T) / (T - 1.0) +
           k::asympt_lhs_loglog * sx * std::log(std::log(q * T)) / (T - 1.0) +
           lx / (T + 1.0) + k::asympt_lhs_log_t * sx * std::log(q) / (T - 1.0) +
           k::asympt_lhs_sqrt * sx / (T + 1.0) - k::asympt_lhs_neg * sx / (T - 1.0) +
           1.0 / (T + 1.0) +
           x * e / (pi * (T - 1.0) * lx) *
               (3.0 * pi / (4.0 * (T - 1.0)) + 3.0 / ((T - 1.0) * (T - 1.0))) +
           (3.0 * std::log((T + 1.0) / 2.0) + std::log(q * pi) + k::asympt_lhs_tail_const +
            euler_gamma + 8.0 / (T - 1.0)) /
               (pi * (T - 1.0) * x * lx);
}

inline double asympt0_rhs(double x, double q) {
    namespace k = cat::ineq;
    const double x077 = std::pow(x, k::pow_exp);
    return k::asympt_rhs_log * std::log(x) / x077 +
           k::asympt_rhs_loglog * std::log(std::log(q * x)) / x077 +
           (k::asympt_rhs_logq * std::log(q) + k::asympt_rhs_const) / x077;
}

inline double psi_ineq3_rhs(double x, double q) {
    namespace k = cat::ineq;
    const double lq = std::log(q);
    const double l4778 = std::log(k::logx_pow_bound);
    const double x0385 = std::pow(x, k::pow_exp / 2.0);
    const double a = k::pow_exp * k::logx_pow_double;
    return a * a * std::pow(x, k::pow_exp) + (k::pow_exp * lq) * (k::pow_exp * lq) +
           l4778 * l4778 +
           2.0 * (k::pow_exp * k::pow_exp * k::logx_pow_double * x0385 * lq +
                  k::pow_exp * k::logx_pow_double * x0385 * l4778 +
                  k::pow_exp * l4778 * lq);
}

// The three-term x^(1/4) block shared by the two negative-term lemmas.
inline double pi_lower_terms(double x, double q) {
    namespace k = cat::pi_lower;
    const double lq = std::log(q);
    const double lx = std::log(x);
    const double x14 = std::pow(x, 0.25);
    return (k::sub_log_logq * lq + k::sub_log_const) * x14 / lx +
           (k::sub_log2_log2q * lq * lq + k::sub_log2_logq * lq + k::sub_log2_const) * x14 /
               (lx * lx) +
           (cat::pi_bound::over_log3_log2q * lq * lq + cat::pi_bound::over_log3_logq * lq +
            cat::pi_bound::over_log3_const) *
               x14 / (lx * lx * lx);
}

inline double pi_lower_sub_rhs_all(double x, double q) {
    namespace k = cat::pi_lower;
    const double lq = std::log(q);
    return (k::rhs_loglog_logq * lq + k::rhs_loglog_const) * std::log(std::log(x)) +
           k::rhs_log2q * lq * lq + k::rhs_logq * lq + k::rhs_const;
}

inline double pi_lower_sub_rhs_large(double x, double q) {
    namespace k = cat::pi_lower;
    const double lq = std::log(q);
    return (k::large_loglog_log2q / std::log(2.0) * lq * lq + k::rhs_loglog_logq * lq +
            k::rhs_loglog_const) *
               std::log(std::log(x)) +
           k::large_log2q * lq * lq + k::large_logq * lq + k::large_const;
}

// q-only upper bound for the combined negative-term expression once x has
// been eliminated through the lower-bound lemma (x >= q).
inline double pi_lower_whole_reduced(double q) {
    namespace k = cat::pi_lower;
    const double lq = std::log(q);
    const double l2 = std::log(2.0);
    if (q < cat::ineq::q_large_lo) {
        return -(k::rhs_log2q * lq * lq + k::rhs_logq * lq + k::rhs_const) +
               k::whole_logq * lq + k::whole_const + r1(q) / l2;
    }
    // Large branch: the loglog x pieces cancel against the R1 block using
    // loglog x >= loglog q.
    return -(k::large_log2q * lq * lq + k::large_logq * lq + k::large_const) +
           k::whole_logq * lq + k::whole_const +
           (cat::r1::large_log2q * lq * lq + cat::r1::logq * lq + cat::r1::mid_const) / l2;
}

}  // namespace lemmas

namespace detail {

inline void clip_x_geq_q(std::span<double> pt) {
    // pt = [x, q]
    if (pt[0] < pt[1]) pt[0] = pt[1];
}

inline void clip_integer_xq(std::span<double> pt) {
    pt[0] = std::max(2.0, std::floor(pt[0]));
    pt[1] = std::max(3.0, std::round(pt[1]));
}

inline search_domain domain_x(double lo, double hi) {
    return {{{"x", lo, hi, axis_scale::log_scale}}, 512, 64, 8};
}

inline search_domain domain_xq(double xlo, double xhi, double qlo, double qhi) {
    return {{{"x", xlo, xhi, axis_scale::log_scale},
             {"q", qlo, qhi, axis_scale::log_scale}},
            512, 64, 8};
}

inline search_domain domain_q(double lo, double hi) {
    return {{{"q", lo, hi, axis_scale::log_scale}}, 512, 64, 8};
}

inline verification_report run_psi_nonprimitive(const inequality_def& def,
                                                const search_domain& dom);

}  // namespace detail

/// The registry of certified inequalities. Margins are RHS - LHS (or
/// tolerance minus deviation for identity checks); a lemma passes when the
/// smallest margin found on its hypothesis domain is positive.
inline const std::vector<inequality_def>& lemma_registry() {
    static const std::vector<inequality_def> reg = [] {
        using std::span;
        std::vector<inequality_def> v;

        v.push_back({"lemma423log.1", "x^0.423 log x bound on the 1/T terms",
                     detail::domain_x(2.0, 1e12),
                     [](span<const double> p) {
                         const double x = p[0];
                         return cat::ineq::x423_log_bound * std::pow(x, 0.423) * std::log(x) -
                                lemmas::x423log_lhs(x);
                     },
                     nullptr, nullptr});

        v.push_back({"lemma0423loglog.1", "x^0.423 loglog(qx) bound",
                     detail::domain_xq(2.0, 1e12, 3.0, 1e6),
                     [](span<const double> p) {
                         const double x = p[0], q = p[1];
                         return cat::ineq::x423_loglog_bound * std::pow(x, 0.423) *
                                    std::log(std::log(q * x)) -
                                lemmas::x423loglog_lhs(x, q);
                     },
                     nullptr, nullptr});

        v.push_back({"lemma0423.1", "x^0.423 bound on the gamma-factor terms",
                     detail::domain_xq(2.0, 1e12, 3.0, 1e6),
                     [](span<const double> p) {
                         return lemmas::x423_rhs(p[0], p[1]) - lemmas::x423_lhs(p[0], p[1]);
                     },
                     nullptr, nullptr});

        v.push_back({"lemma0432loglogDivlog.1", "loglog^2(qx)/log x block bound",
                     detail::domain_xq(2.0, 1e12, 3.0, 1e6),
                     [](span<const double> p) {
                         return lemmas::loglog_div_log_rhs(p[0], p[1]) -
                                lemmas::loglog_div_log_lhs(p[0], p[1]);
                     },
                     nullptr, nullptr});

        v.push_back({"lemmaasympt0.1", "combined bound on the vanishing terms",
                     detail::domain_xq(2.0, 1e12, 3.0, 1e6),
                     [](span<const double> p) {
                         return lemmas::asympt0_rhs(p[0], p[1]) -
                                lemmas::asympt0_lhs(p[0], p[1]);
                     },
                     nullptr, nullptr});

        v.push_back({"psiInequalities.1", "log x < 4.778 x^0.077",
                     detail::domain_x(2.0, 1e12),
                     [](span<const double> p) {
                         return cat::ineq::logx_pow_bound *
                                    std::pow(p[0], cat::ineq::pow_exp) -
                                std::log(p[0]);
                     },
                     nullptr, nullptr});

        v.push_back({"psiInequalities.2", "x^0.423 loglog(qx) split",
                     detail::domain_xq(2.0, 1e12, 3.0, 1e6),
                     [](span<const double> p) {
                         const double x = p[0], q = p[1];
                         namespace k = cat::ineq;
                         const double rhs =
                             k::logx_pow_bound * k::pow_exp * std::sqrt(x) +
                             (k::pow_exp * std::log(q) + std::log(k::logx_pow_bound)) *
                                 std::pow(x, 0.423);
                         return rhs - std::pow(x, 0.423) * std::log(std::log(q * x));
                     },
                     nullptr, nullptr});

        v.push_back({"psiInequalities.3", "loglog^2(qx) split",
                     detail::domain_xq(2.0, 1e12, 3.0, 1e6),
                     [](span<const double> p) {
                         const double ll = std::log(std::log(p[1] * p[0]));
                         return lemmas::psi_ineq3_rhs(p[0], p[1]) - ll * ll;
                     },
                     nullptr, nullptr});

        v.push_back({"estForNegative.1", "x^(1/4)/log x > 0.416 loglog x",
                     detail::domain_x(3.0, 1e12),
                     [](span<const double> p) {
                         const double x = p[0];
                         return std::pow(x, 0.25) / std::log(x) -
                                cat::ineq::x14_over_log * std::log(std::log(x));
                     },
                     nullptr, nullptr});

        v.push_back({"estForNegative.2", "x^(1/4) loglog x < 0.524 sqrt x",
                     detail::domain_x(3.0, 1e12),
                     [](span<const double> p) {
                         const double x = p[0];
                         return cat::ineq::x14_loglog * std::sqrt(x) -
                                std::pow(x, 0.25) * std::log(std::log(x));
                     },
                     nullptr, nullptr});

        v.push_back({"estForNegative.3", "x^(1/4)/log^2 x > 949.261 loglog x, x >= 1e29",
                     detail::domain_x(1e29, 1e40),
                     [](span<const double> p) {
                         const double x = p[0];
                         const double lx = std::log(x);
                         return std::pow(x, 0.25) / (lx * lx) -
                                cat::ineq::x14_over_log2 * std::log(lx);
                     },
                     nullptr, nullptr});

        v.push_back({"lemmaPiLowerSub.1", "negative-terms lower bound, all q",
                     detail::domain_xq(3.0, 1e12, 3.0, 1e6),
                     [](span<const double> p) {
                         return lemmas::pi_lower_terms(p[0], p[1]) -
                                lemmas::pi_lower_sub_rhs_all(p[0], p[1]);
                     },
                     detail::clip_x_geq_q, nullptr});

        v.push_back({"lemmaPiLowerSub.2", "negative-terms lower bound, q >= 1e29",
                     detail::domain_xq(1e29, 1e41, 1e29, 1e40),
                     [](span<const double> p) {
                         return lemmas::pi_lower_terms(p[0], p[1]) -
                                lemmas::pi_lower_sub_rhs_large(p[0], p[1]);
                     },
                     detail::clip_x_geq_q, nullptr});

        auto whole_margin = [](span<const double> p) {
            return -cat::pi_bound::negative_const - lemmas::pi_lower_whole_reduced(p[0]);
        };
        v.push_back({"lemmaPiLowerWhole.1", "combined negative terms < -237.934, small q",
                     detail::domain_q(3.0, 4e5), whole_margin, nullptr, nullptr});
        v.push_back({"lemmaPiLowerWhole.2", "combined negative terms < -237.934, mid q",
                     detail::domain_q(4e5, 1e29), whole_margin, nullptr, nullptr});
        v.push_back({"lemmaPiLowerWhole.3", "combined negative terms < -237.934, large q",
                     detail::domain_q(1e29, 1e40), whole_margin, nullptr, nullptr});

        v.push_back({"sumx.identity", "trivial-zero series match their closed forms",
                     detail::domain_x(2.0, 1e6),
                     [](span<const double> p) {
                         const double x = p[0];
                         const double d1 = std::abs(trivial_zero_sums(x, 1) -
                                                    trivial_zero_partial(x, 1, 200));
                         const double d0 = std::abs(trivial_zero_sums(x, 0) -
                                                    trivial_zero_partial(x, 0, 200));
                         return 1e-10 - std::max(d0, d1);
                     },
                     nullptr, nullptr});

        v.push_back({"sumx.cap.odd", "odd trivial-zero sum <= 1",
                     detail::domain_x(2.0, 1e12),
                     [](span<const double> p) { return 1.0 - trivial_zero_sums(p[0], 1); },
                     nullptr, nullptr});

        v.push_back({"sumx.cap.even", "even trivial-zero sum <= 1/6",
                     detail::domain_x(2.0, 1e12),
                     [](span<const double> p) {
                         return 1.0 / 6.0 - trivial_zero_sums(p[0], 0);
                     },
                     nullptr, nullptr});

        v.push_back({"lemmaLambdaSyt.1", "Lambda sum over gcd(n,q)>1 vs log q log x",
                     detail::domain_xq(2.0, 1e6, 3.0, 1e6),
                     [](span<const double> p) {
                         const double x = p[0];
                         const u64 q = static_cast<u64>(p[1]);
                         const double bound = (q == 6 ? 2.0 : std::log(static_cast<double>(q))) *
                                              std::log(x);
                         return bound - lambda_gcd_sum(x, q);
                     },
                     detail::clip_integer_xq, nullptr});

        v.push_back({"psiNonPrimitive.1", "imprimitive vs induced twisted sums",
                     search_domain{{{"x", 2.0, 1e4, axis_scale::log_scale},
                                    {"q", 3.0, 50.0, axis_scale::linear}},
                                   512, 64, 8},
                     nullptr, nullptr, detail::run_psi_nonprimitive});

        v.push_back({"L2tEst.1", "zeta'/zeta(1 + 1/log y) below its explicit bound",
                     search_domain{{{"y", 2.0, 1e12, axis_scale::log_scale}}, 512, 64, 8},
                     [](span<const double> p) {
                         const double y = p[0];
                         return l2t_bound(y) - zeta_logderiv(1.0 + 1.0 / std::log(y));
                     },
                     nullptr, nullptr});

        v.push_back({"L2tEst.2", "zeta'/zeta(sigma) < 0.570 for sigma >= 2",
                     search_domain{{{"sigma", 2.0, 100.0, axis_scale::log_scale}}, 512, 64, 8},
                     [](span<const double> p) {
                         return cat::l2t::sigma2_bound - zeta_logderiv(p[0]);
                     },
                     nullptr, nullptr});

        return v;
    }();
    return reg;
}

/// Engine self-test: the same expression as lemma423log.1 with its bound
/// constant deliberately lowered to 10, which must fail on the sweep.
inline inequality_def falsified_fixture() {
    inequality_def def;
    def.id = "lemma423log.falsified";
    def.description = "self-test fixture with a constant lowered to 10";
    def.domain = detail::domain_x(2.0, 1e12);
    def.margin = [](std::span<const double> p) {
        const double x = p[0];
        return 10.0 * std::pow(x, 0.423) * std::log(x) - lemmas::x423log_lhs(x);
    };
    return def;
}

inline const inequality_def& find_lemma(std::string_view id) {
    for (const auto& def : lemma_registry())
        if (def.id == id) return def;
    throw std::out_of_range("unknown lemma id: " + std::string(id));
}

inline verification_report verify_inequality(const inequality_def& def,
                                             const std::optional<search_domain>& dom = {}) {
    const search_domain& d = dom ? *dom : def.domain;
    if (def.custom) return def.custom(def, d);
    return run_grid_search(def, d);
}

inline verification_report verify_inequality(std::string_view lemma_id,
                                             const std::optional<search_domain>& dom = {}) {
    return verify_inequality(find_lemma(lemma_id), dom);
}

/// Runs every registered lemma on its default domain; `only` restricts to
/// ids having the given prefix.
inline std::vector<verification_report> verify_all_lemmas(std::string_view only = {}) {
    std::vector<verification_report> out;
    for (const auto& def : lemma_registry()) {
        if (!only.empty() && def.id.rfind(only, 0) != 0) continue;
        out.push_back(verify_inequality(def));
    }
    if (!only.empty() && out.empty())
        throw std::out_of_range("no registered lemma matches: " + std::string(only));
    return out;
}

namespace detail {

// Checkpointed twisted sums: psi0(x, chi) at each x in xs (ascending).
inline std::vector<character_value> psi0_checkpoints(const dirichlet_character& chi,
                                                     const prime_power_table& table,
                                                     std::span<const double> xs) {
    const u64 q = chi.modulus;
    std::vector<character_value> residue(q);
    for (u64 r = 0; r < q; ++r) residue[r] = chi(r);
    std::vector<character_value> out;
    out.reserve(xs.size());
    kahan_sum re, im;
    auto entries = table.entries();
    std::size_t i = 0;
    for (double x : xs) {
        const u64 fx = static_cast<u64>(std::floor(x));
        while (i < entries.size() && entries[i].n <= fx) {
            const auto& v = residue[entries[i].n % q];
            if (v.re != 0.0 || v.im != 0.0) {
                re.add(v.re * entries[i].log_p);
                im.add(v.im * entries[i].log_p);
            }
            ++i;
        }
        character_value cv{re.value(), im.value()};
        if (x == std::floor(x) && fx >= 2) {
            const double lam = table.lambda(fx);
            if (lam > 0.0) {
                const auto& v = residue[fx % q];
                cv.re -= v.re * lam / 2.0;
                cv.im -= v.im * lam / 2.0;
            }
        }
        out.push_back(cv);
    }
    return out;
}

inline verification_report run_psi_nonprimitive(const inequality_def& def,
                                                const search_domain& dom) {
    const u64 q_max = static_cast<u64>(dom.dims.at(1).hi);
    const double x_max = dom.dims.at(0).hi;
    const auto table = prime_power_table::build(static_cast<u64>(x_max));

    std::vector<double> xs;
    for (u64 n = 2; n <= 64 && static_cast<double>(n) <= x_max; ++n) {
        xs.push_back(static_cast<double>(n));
        xs.push_back(static_cast<double>(n) + 0.5);
    }
    for (int j = 0; j <= 24; ++j)
        xs.push_back(2.0 * std::pow(x_max / 2.0, j / 24.0));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    verification_report rep;
    rep.lemma_id = def.id;
    rep.domain = dom;
    rep.note = "imprimitive characters with q <= " + std::to_string(q_max);
    for (u64 q = 3; q <= q_max; ++q) {
        const auto chars = enumerate_characters(q);
        for (const auto& chi : chars) {
            if (chi.is_principal || chi.is_primitive) continue;
            const auto [f, star] = conductor_and_primitive(chi);
            const auto a = psi0_checkpoints(chi, table, xs);
            const auto b = psi0_checkpoints(star, table, xs);
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double gap = std::hypot(a[i].re - b[i].re, a[i].im - b[i].im);
                const double bound =
                    (q == 6 ? 2.0 : std::log(static_cast<double>(q))) * std::log(xs[i]);
                const double margin = bound - gap;
                ++rep.evaluations;
                if (margin < rep.min_margin) {
                    rep.min_margin = margin;
                    rep.argmin = {xs[i], static_cast<double>(q)};
                }
            }
        }
    }
    rep.pass = rep.min_margin > 0.0;
    return rep;
}

}  // namespace detail

}  // namespace primeap
