#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace primeap {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct prime_factor {
    u64 p;
    int exponent;
};

/// Trial-division factorization. Intended for moduli and bound inputs,
/// q <= 10^12 or so; not a general-purpose factoring routine.
inline std::vector<prime_factor> factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    std::vector<prime_factor> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline u64 euler_phi(u64 n) {
    u64 phi = 1;
    for (const auto& f : factorize(n)) {
        u64 pk = f.p;
        for (int i = 1; i < f.exponent; ++i) pk *= f.p;
        phi *= pk - pk / f.p;
    }
    return phi;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Floor of n^(1/k), exact in integer arithmetic. Rounds a floating
/// estimate and then fixes it up, so no result ever depends on float
/// rounding alone.
inline u64 integer_kth_root(u64 n, int k) {
    if (k <= 0) throw std::domain_error("integer_kth_root: k must be positive");
    if (k == 1 || n <= 1) return n;
    auto pow_leq = [](u64 base, int e, u64 limit) {
        // base^e <= limit, without overflow
        u64 acc = 1;
        for (int i = 0; i < e; ++i) {
            if (acc > limit / base) return false;
            acc *= base;
        }
        return acc <= limit;
    };
    u64 r = static_cast<u64>(std::pow(static_cast<double>(n), 1.0 / k));
    while (r > 1 && !pow_leq(r, k, n)) --r;
    while (pow_leq(r + 1, k, n)) ++r;
    return r;
}

/// Returns the prime p if n = p^k (k >= 1), else 0.
inline u64 prime_power_base(u64 n) {
    if (n < 2) return 0;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? p : 0;
    }
    return n;  // n itself is prime
}

}  // namespace primeap
