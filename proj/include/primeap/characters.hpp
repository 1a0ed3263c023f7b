#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "primeap/arith.hpp"
#include "primeap/kahan.hpp"
#include "primeap/sieve.hpp"

namespace primeap {

/// exp(2*pi*i * num/den) with 0 <= num < den, reduced. Character values are
/// carried as exact root-of-unity angles and only turned into floats at
/// evaluation time.
struct rational_angle {
    u64 num = 0;
    u64 den = 1;

    void reduce() {
        num %= den;
        const u64 g = std::gcd(num == 0 ? den : num, den);
        num /= g;
        den /= g;
    }
    bool operator==(const rational_angle&) const = default;
};

struct character_value {
    double re = 0.0;
    double im = 0.0;
};

struct dirichlet_character;

/// Unit group (Z/qZ)^* decomposed into cyclic components via CRT:
/// one generator per odd prime power, the {-1, 5} pair for 2^k (k >= 3).
/// Immutable once built; shared by all characters of the same modulus.
class character_group : public std::enable_shared_from_this<character_group> {
public:
    struct component {
        u64 prime_power;          // p^k slice of q
        u64 order;                // order of the cyclic piece
        std::vector<u32> dlog;    // residue mod p^k -> discrete log (units only)
    };

    static std::shared_ptr<const character_group> make(u64 q) {
        if (q == 0) throw std::domain_error("character_group: modulus must be >= 1");
        return std::shared_ptr<const character_group>(new character_group(q));
    }

    u64 modulus() const { return q_; }
    u64 phi() const { return phi_; }
    u64 exponent() const { return exponent_; }
    const std::vector<component>& components() const { return comps_; }

    /// Exponent vector of n on the component generators; nullopt when
    /// gcd(n, q) > 1.
    std::optional<std::vector<u64>> discrete_log(u64 n) const {
        n %= q_;
        if (std::gcd(n == 0 ? q_ : n, q_) != 1) return std::nullopt;
        std::vector<u64> logs(comps_.size());
        for (std::size_t j = 0; j < comps_.size(); ++j) {
            const u32 d = comps_[j].dlog[n % comps_[j].prime_power];
            logs[j] = d;
        }
        return logs;
    }

    std::vector<dirichlet_character> characters() const;

private:
    explicit character_group(u64 q) : q_(q), phi_(euler_phi(q)) {
        for (const auto& f : factorize(q)) {
            u64 pk = 1;
            for (int i = 0; i < f.exponent; ++i) pk *= f.p;
            if (f.p == 2) {
                if (f.exponent == 1) continue;  // (Z/2)^* is trivial
                if (f.exponent == 2) {
                    comps_.push_back(cyclic_component(pk, 3, 2));
                } else {
                    comps_.push_back(sign_component(pk));
                    comps_.push_back(five_component(pk));
                }
            } else {
                comps_.push_back(cyclic_component(pk, primitive_root(f.p, pk), euler_phi(pk)));
            }
        }
        exponent_ = 1;
        for (const auto& c : comps_) exponent_ = std::lcm(exponent_, c.order);
    }

    static component cyclic_component(u64 pk, u64 gen, u64 order) {
        component c{pk, order, std::vector<u32>(pk, 0)};
        u64 v = 1;
        for (u64 i = 0; i < order; ++i) {
            c.dlog[v] = static_cast<u32>(i);
            v = mul_mod(v, gen, pk);
        }
        return c;
    }

    // The {+1, -1} factor of (Z/2^k)^*: units = 1 mod 4 map to 0, units
    // = 3 mod 4 map to 1.
    static component sign_component(u64 pk) {
        component c{pk, 2, std::vector<u32>(pk, 0)};
        for (u64 n = 1; n < pk; n += 2) c.dlog[n] = (n % 4 == 3) ? 1 : 0;
        return c;
    }

    // The 5-generated factor of (Z/2^k)^*, k >= 3. Every odd unit is
    // (+-1) * 5^b, so the table is filled at both signs of each power.
    static component five_component(u64 pk) {
        component c{pk, pk / 4, std::vector<u32>(pk, 0)};
        u64 v = 1;
        for (u64 i = 0; i < c.order; ++i) {
            c.dlog[v] = static_cast<u32>(i);
            c.dlog[pk - v] = static_cast<u32>(i);
            v = mul_mod(v, 5, pk);
        }
        return c;
    }

    static u64 primitive_root(u64 p, u64 pk) {
        const u64 phi_p = p - 1;
        const auto factors = factorize(phi_p);
        u64 g = 0;
        for (u64 cand = 2; cand < p; ++cand) {
            bool ok = true;
            for (const auto& f : factors)
                if (pow_mod(cand, phi_p / f.p, p) == 1) { ok = false; break; }
            if (ok) { g = cand; break; }
        }
        if (pk == p) return g;
        // Lift to p^k: g works unless g^(p-1) = 1 mod p^2, in which case g+p does.
        if (pow_mod(g, p - 1, p * p) == 1) g += p;
        return g;
    }

    u64 q_;
    u64 phi_;
    u64 exponent_ = 1;
    std::vector<component> comps_;
};

/// A Dirichlet character mod q, represented by its exponents on the group
/// generators. Pure value type apart from the shared immutable group.
struct dirichlet_character {
    u64 modulus = 1;
    std::vector<u64> exponents;  // one per group component, in [0, order_j)
    int parity_a = 0;            // 1 iff chi(-1) = -1
    u64 conductor = 1;
    bool is_principal = true;
    bool is_primitive = false;
    std::shared_ptr<const character_group> group;

    /// Angle of chi(n) as an exact fraction of a turn; nullopt when
    /// gcd(n, q) > 1 (value 0).
    std::optional<rational_angle> angle(u64 n) const {
        const auto logs = group->discrete_log(n);
        if (!logs) return std::nullopt;
        const u64 L = group->exponent();
        u64 num = 0;
        const auto& comps = group->components();
        for (std::size_t j = 0; j < comps.size(); ++j) {
            const u64 term = (exponents[j] * (*logs)[j]) % comps[j].order;
            num = (num + term * (L / comps[j].order)) % L;
        }
        rational_angle a{num, L};
        a.reduce();
        return a;
    }

    character_value operator()(u64 n) const {
        const auto a = angle(n);
        if (!a) return {0.0, 0.0};
        if (a->num == 0) return {1.0, 0.0};
        if (2 * a->num == a->den) return {-1.0, 0.0};
        const double t = 2.0 * std::numbers::pi * static_cast<double>(a->num) /
                         static_cast<double>(a->den);
        return {std::cos(t), std::sin(t)};
    }
};

namespace detail {

inline int character_parity(const dirichlet_character& chi) {
    if (chi.modulus <= 2) return 0;
    const auto a = chi.angle(chi.modulus - 1);
    // chi(-1) is +-1, so the angle is 0 or 1/2.
    return (a && a->num != 0) ? 1 : 0;
}

inline std::vector<u64> divisors_of(u64 q) {
    std::vector<u64> d;
    for (u64 f = 1; f * f <= q; ++f) {
        if (q % f) continue;
        d.push_back(f);
        if (f != q / f) d.push_back(q / f);
    }
    std::sort(d.begin(), d.end());
    return d;
}

// Smallest f | q such that chi is trivial on {n = 1 (mod f), gcd(n,q)=1}.
inline u64 character_conductor(const dirichlet_character& chi) {
    const u64 q = chi.modulus;
    for (u64 f : divisors_of(q)) {
        bool trivial = true;
        for (u64 n = 1 + f; n <= q && trivial; n += f) {
            if (std::gcd(n, q) != 1) continue;
            const auto a = chi.angle(n);
            if (a && a->num != 0) trivial = false;
        }
        if (trivial) return f;
    }
    return q;
}

}  // namespace detail

inline std::vector<dirichlet_character> character_group::characters() const {
    std::vector<dirichlet_character> out;
    out.reserve(phi_);
    std::vector<u64> exps(comps_.size(), 0);
    const auto self = shared_from_this();
    for (;;) {
        dirichlet_character chi;
        chi.modulus = q_;
        chi.exponents = exps;
        chi.group = self;
        chi.is_principal = std::all_of(exps.begin(), exps.end(),
                                       [](u64 e) { return e == 0; });
        chi.parity_a = detail::character_parity(chi);
        chi.conductor = detail::character_conductor(chi);
        chi.is_primitive = (chi.conductor == q_);
        out.push_back(std::move(chi));
        // odometer over the exponent tuples
        std::size_t j = 0;
        for (; j < comps_.size(); ++j) {
            if (++exps[j] < comps_[j].order) break;
            exps[j] = 0;
        }
        if (j == comps_.size()) break;
    }
    return out;
}

/// All phi(q) characters mod q, principal first.
inline std::vector<dirichlet_character> enumerate_characters(u64 q) {
    return character_group::make(q)->characters();
}

/// The primitive character chi* (of modulus chi.conductor) inducing chi,
/// found by brute-force agreement on the units coprime to q.
inline std::pair<u64, dirichlet_character> conductor_and_primitive(
    const dirichlet_character& chi) {
    const u64 f = chi.conductor;
    for (auto& cand : enumerate_characters(f)) {
        bool agrees = true;
        for (u64 n = 1; n <= chi.modulus && agrees; ++n) {
            if (std::gcd(n, chi.modulus) != 1) continue;
            const auto a = chi.angle(n);
            const auto b = cand.angle(n);  // f | q, so n is a unit mod f too
            if (!a || !b || !(*a == *b)) agrees = false;
        }
        if (agrees) return {f, std::move(cand)};
    }
    throw std::logic_error("conductor_and_primitive: no inducing character found");
}

/// Character-twisted Chebyshev sum psi(x, chi) = sum chi(n) Lambda(n), n <= x.
inline character_value psi_chi(double x, const dirichlet_character& chi,
                               const prime_power_table& table) {
    if (!(x >= 0.0)) throw std::domain_error("psi_chi: x must be >= 0");
    character_value out;
    if (x < 2.0) return out;
    const u64 q = chi.modulus;
    std::vector<character_value> residue(q);
    for (u64 r = 0; r < q; ++r) residue[r] = chi(r);
    const u64 fx = static_cast<u64>(std::floor(x));
    kahan_sum re, im;
    for (const auto& e : table.entries()) {
        if (e.n > fx) break;
        const auto& v = residue[e.n % q];
        if (v.re == 0.0 && v.im == 0.0) continue;
        re.add(v.re * e.log_p);
        im.add(v.im * e.log_p);
    }
    out.re = re.value();
    out.im = im.value();
    return out;
}

/// Midpoint-regularized twisted sum: at an exact prime-power jump x the
/// value is the mean of the one-sided limits.
inline character_value psi0_chi(double x, const dirichlet_character& chi,
                                const prime_power_table& table) {
    character_value v = psi_chi(x, chi, table);
    const double fx = std::floor(x);
    if (x == fx && x >= 2.0) {
        const u64 n = static_cast<u64>(fx);
        const double lam = table.lambda(n);
        if (lam > 0.0) {
            const character_value c = chi(n);
            v.re -= c.re * lam / 2.0;
            v.im -= c.im * lam / 2.0;
        }
    }
    return v;
}

}  // namespace primeap
