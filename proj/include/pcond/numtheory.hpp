#pragma once

// Small-integer number theory used throughout: orders of roots of unity,
// class element orders and group orders all fit comfortably in 64 bits.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcond::nt {

inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Exponent of p in n (n > 0).
inline int valuation(std::int64_t n, std::int64_t p) {
    int a = 0;
    while (n % p == 0) {
        n /= p;
        ++a;
    }
    return a;
}

/// Largest power of p dividing n.
inline std::int64_t p_part(std::int64_t n, std::int64_t p) {
    std::int64_t q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d * d != n) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t n) {
    std::int64_t r = 1 % n;
    base = mod(base, n);
    while (e > 0) {
        if (e & 1) r = static_cast<std::int64_t>((__int128)r * base % n);
        base = static_cast<std::int64_t>((__int128)base * base % n);
        e >>= 1;
    }
    return r;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
    if (n == 1) return 0;
    std::int64_t t = 0, new_t = 1, r = n, new_r = mod(a, n);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("inverse_mod: argument not invertible");
    return mod(t, n);
}

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t n) {
    if (n == 1) return 1;
    std::int64_t k = 1, x = mod(a, n);
    while (x != 1) {
        x = x * mod(a, n) % n;
        ++k;
    }
    return k;
}

/// Integer power, no overflow checks.
inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace pcond::nt
