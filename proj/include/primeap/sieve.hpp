#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "primeap/arith.hpp"
#include "primeap/kahan.hpp"
#include "primeap/parallel.hpp"

namespace primeap {

struct sieve_options {
    u64 segment_size = u64{1} << 22;
    unsigned threads = 0;  // 0 = default_thread_count()
};

struct lambda_entry {
    u64 n;
    double lambda;  // natural-log units
    bool is_prime;
};

/// Exact von Mangoldt values over one window [lo, hi].
struct lambda_table {
    u64 lo = 1;
    u64 hi = 1;
    std::vector<lambda_entry> entries;  // one record per n in [lo, hi]
};

inline std::vector<u32> primes_up_to(u64 limit) {
    std::vector<u32> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(static_cast<u32>(p));
        for (u64 m = p * p; m <= limit; m += p) composite[m] = true;
    }
    return primes;
}

namespace detail {

// Marks composites in [lo, hi] given base primes up to sqrt(hi).
inline void mark_composites(u64 lo, u64 hi, std::span<const u32> base,
                            std::vector<bool>& composite) {
    composite.assign(hi - lo + 1, false);
    for (u32 p : base) {
        const u64 pp = u64{p} * p;
        if (pp > hi) break;
        u64 start = std::max(pp, ((lo + p - 1) / p) * p);
        for (u64 m = start; m <= hi; m += p) composite[m - lo] = true;
    }
}

}  // namespace detail

/// Builds the complete Lambda(n) table for one window. Prime powers p^k
/// (k >= 2) are enumerated bottom-up from the base primes, so the
/// classification never touches floating point.
inline lambda_table build_lambda_table(u64 lo, u64 hi,
                                       u64 max_segment = sieve_options{}.segment_size) {
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("build_lambda_table: window bounds inverted or below 1");
    if (hi - lo + 1 > max_segment)
        throw std::length_error("build_lambda_table: window exceeds segment size budget");

    lambda_table t;
    t.lo = lo;
    t.hi = hi;
    t.entries.resize(hi - lo + 1);

    const auto base = primes_up_to(integer_kth_root(hi, 2));
    std::vector<bool> composite;
    detail::mark_composites(lo, hi, base, composite);

    for (u64 n = lo; n <= hi; ++n) {
        auto& e = t.entries[n - lo];
        e.n = n;
        if (n >= 2 && !composite[n - lo]) {
            e.lambda = std::log(static_cast<double>(n));
            e.is_prime = true;
        } else {
            e.lambda = 0.0;
            e.is_prime = false;
        }
    }
    for (u32 p : base) {
        u64 pk = u64{p} * p;
        while (pk <= hi) {
            if (pk >= lo) {
                auto& e = t.entries[pk - lo];
                e.lambda = std::log(static_cast<double>(p));
                e.is_prime = false;
            }
            if (pk > hi / p) break;
            pk *= p;
        }
    }
    return t;
}

struct ap_query {
    double x = 0.0;
    u64 q = 1;
    u64 a = 0;
};

struct counts_result {
    u64 pi = 0;
    double theta = 0.0;
    double psi = 0.0;
    double psi0 = 0.0;  // midpoint-adjusted at prime-power jumps
};

struct prime_power {
    u64 n;
    double log_p;  // Lambda(n)
    bool is_prime;
};

/// All n <= limit with Lambda(n) > 0, ascending, with compensated prefix
/// sums. Construction sieves independent segments (optionally in parallel)
/// and merges them in segment order; queries afterwards are read-only and
/// safe for concurrent callers.
class prime_power_table {
public:
    static prime_power_table build(u64 limit, const sieve_options& opt = {}) {
        prime_power_table t;
        t.limit_ = limit;
        if (limit < 2) {
            t.finalize();
            return t;
        }
        const u64 seg = std::max<u64>(opt.segment_size, 64);
        const std::size_t nseg = static_cast<std::size_t>((limit - 2) / seg + 1);
        const auto base = primes_up_to(integer_kth_root(limit, 2));

        std::vector<std::vector<prime_power>> parts(nseg);
        const unsigned threads = opt.threads ? opt.threads : default_thread_count();
        parallel_for_chunks(nseg, threads, [&](std::size_t i) {
            const u64 lo = 2 + seg * i;
            const u64 hi = std::min(limit, lo + seg - 1);
            parts[i] = sieve_segment(lo, hi, base);
        });

        std::size_t total = 0;
        for (const auto& p : parts) total += p.size();
        t.pp_.reserve(total);
        for (const auto& p : parts) t.pp_.insert(t.pp_.end(), p.begin(), p.end());
        t.finalize();
        return t;
    }

    u64 limit() const { return limit_; }
    std::span<const prime_power> entries() const { return pp_; }

    /// psi(x) = sum of Lambda(n) for n <= x.
    double psi(double x) const {
        const std::size_t k = index_of(x);
        return k ? psi_prefix_[k - 1] : 0.0;
    }

    /// theta(x) = sum of log p over primes p <= x.
    double theta(double x) const {
        const std::size_t k = index_of(x);
        return k ? theta_prefix_[k - 1] : 0.0;
    }

    u64 pi_count(double x) const {
        const std::size_t k = index_of(x);
        return k ? pi_prefix_[k - 1] : 0;
    }

    /// Chebyshev/prime counts restricted to n = a (mod q).
    counts_result counts_ap(const ap_query& query) const {
        if (query.q < 1) throw std::domain_error("counts_ap: q must be >= 1");
        if (query.a >= query.q) throw std::domain_error("counts_ap: need 0 <= a < q");
        check_range(query.x);
        counts_result r;
        if (query.x < 2.0) return r;
        const u64 fx = static_cast<u64>(std::floor(query.x));
        kahan_sum psi, theta;
        for (const auto& e : pp_) {
            if (e.n > fx) break;
            if (e.n % query.q != query.a) continue;
            psi.add(e.log_p);
            if (e.is_prime) {
                theta.add(e.log_p);
                ++r.pi;
            }
        }
        r.psi = psi.value();
        r.theta = theta.value();
        r.psi0 = r.psi;
        // The jump-midpoint convention applies only when x sits exactly on a
        // prime power inside the progression.
        if (query.x == static_cast<double>(fx) && fx % query.q == query.a) {
            const double lam = lambda(fx);
            if (lam > 0.0) r.psi0 = r.psi - lam / 2.0;
        }
        return r;
    }

    /// Lambda(n) for n <= limit (0 if n is not a prime power).
    double lambda(u64 n) const {
        auto it = std::lower_bound(pp_.begin(), pp_.end(), n,
                                   [](const prime_power& e, u64 v) { return e.n < v; });
        if (it != pp_.end() && it->n == n) return it->log_p;
        return 0.0;
    }

    /// Sum of theta(x^(1/k)) over k >= 2, with the roots taken as exact
    /// integer floors so boundary prime powers land on the correct side.
    double theta_root_sum(double x) const {
        check_range(x);
        if (x < 4.0) return 0.0;
        const u64 fx = static_cast<u64>(std::floor(x));
        kahan_sum s;
        for (int k = 2; k < 64; ++k) {
            const u64 r = integer_kth_root(fx, k);
            if (r < 2) break;
            s.add(theta(static_cast<double>(r)));
        }
        return s.value();
    }

private:
    static std::vector<prime_power> sieve_segment(u64 lo, u64 hi,
                                                  std::span<const u32> base) {
        std::vector<bool> composite;
        detail::mark_composites(lo, hi, base, composite);
        std::vector<prime_power> out;
        for (u64 n = lo; n <= hi; ++n)
            if (!composite[n - lo])
                out.push_back({n, std::log(static_cast<double>(n)), true});
        for (u32 p : base) {
            u64 pk = u64{p} * p;
            while (pk <= hi) {
                if (pk >= lo)
                    out.push_back({pk, std::log(static_cast<double>(p)), false});
                if (pk > hi / p) break;
                pk *= p;
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const prime_power& a, const prime_power& b) { return a.n < b.n; });
        return out;
    }

    void finalize() {
        psi_prefix_.resize(pp_.size());
        theta_prefix_.resize(pp_.size());
        pi_prefix_.resize(pp_.size());
        kahan_sum psi, theta;
        u64 pi = 0;
        for (std::size_t i = 0; i < pp_.size(); ++i) {
            psi.add(pp_[i].log_p);
            if (pp_[i].is_prime) {
                theta.add(pp_[i].log_p);
                ++pi;
            }
            psi_prefix_[i] = psi.value();
            theta_prefix_[i] = theta.value();
            pi_prefix_[i] = pi;
        }
    }

    void check_range(double x) const {
        if (!(x >= 0.0)) throw std::domain_error("x must be >= 0");
        if (std::floor(x) > static_cast<double>(limit_))
            throw std::domain_error("x exceeds the sieved limit of this table");
    }

    // Number of entries with n <= x.
    std::size_t index_of(double x) const {
        check_range(x);
        if (x < 2.0) return 0;
        const u64 fx = static_cast<u64>(std::floor(x));
        auto it = std::upper_bound(pp_.begin(), pp_.end(), fx,
                                   [](u64 v, const prime_power& e) { return v < e.n; });
        return static_cast<std::size_t>(it - pp_.begin());
    }

    u64 limit_ = 0;
    std::vector<prime_power> pp_;
    std::vector<double> psi_prefix_;
    std::vector<double> theta_prefix_;
    std::vector<u64> pi_prefix_;
};

/// One-shot conveniences; each call sieves up to x. Reuse a
/// prime_power_table when querying repeatedly.
inline double psi(double x) {
    if (!(x >= 0.0)) throw std::domain_error("psi: x must be >= 0");
    if (x < 2.0) return 0.0;
    return prime_power_table::build(static_cast<u64>(std::floor(x))).psi(x);
}

inline double theta(double x) {
    if (!(x >= 0.0)) throw std::domain_error("theta: x must be >= 0");
    if (x < 2.0) return 0.0;
    return prime_power_table::build(static_cast<u64>(std::floor(x))).theta(x);
}

inline u64 pi_count(double x) {
    if (!(x >= 0.0)) throw std::domain_error("pi_count: x must be >= 0");
    if (x < 2.0) return 0;
    return prime_power_table::build(static_cast<u64>(std::floor(x))).pi_count(x);
}

/// Sum of Lambda(n) over n <= x with gcd(n, q) > 1: only prime powers of
/// the primes dividing q contribute, so the sum collapses to a loop over
/// p | q with p^k <= x.
inline double lambda_gcd_sum(double x, u64 q) {
    if (q < 1) throw std::domain_error("lambda_gcd_sum: q must be >= 1");
    if (!(x >= 0.0)) throw std::domain_error("lambda_gcd_sum: x must be >= 0");
    if (x < 2.0) return 0.0;
    const u64 fx = static_cast<u64>(std::floor(x));
    kahan_sum s;
    for (const auto& f : factorize(q)) {
        const u64 p = f.p;
        if (p > fx) continue;
        const double logp = std::log(static_cast<double>(p));
        for (u64 pk = p;; pk *= p) {
            s.add(logp);
            if (pk > fx / p) break;
        }
    }
    return s.value();
}

}  // namespace primeap
