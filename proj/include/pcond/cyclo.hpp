#pragma once

// Exact arithmetic in cyclotomic fields.
//
// A CycloNum is an element of Q(zeta_n) stored in the Zumbroich basis of
// Q(zeta_n), where n is always the conductor of the element (the smallest
// field containing it).  With that normalization two numbers are equal iff
// their (order, terms) pairs are identical, rationals have order 1, and the
// order is never 2 mod 4.
//
// Zumbroich basis of Q(zeta_n), n = prod q_i with q_i = p_i^k_i: the roots
// zeta_n^e whose component e_i = e * (n/q_i)^-1 mod q_i satisfies
// floor(e_i / p_i^(k_i-1)) in {1..p_i-1} for odd p_i and = 0 for p_i = 2.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcond {

using Rational = mpq_class;
using Integer = mpz_class;

class CycloNum {
public:
    /// (exponent, nonzero coefficient) pairs sorted by exponent.
    using Term = std::pair<int, Rational>;

    CycloNum() = default;
    CycloNum(long value);  // NOLINT(google-explicit-constructor)
    explicit CycloNum(const Rational& value);

    /// zeta_n^e for n >= 1; e is reduced mod n.
    static CycloNum root_of_unity(std::int64_t n, std::int64_t e = 1);

    /// sum_e coeffs[e] * zeta_n^e for a dense coefficient vector of length n.
    static CycloNum from_dense(std::int64_t n, std::vector<Rational> coeffs);

    int order() const noexcept { return order_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_rational() const noexcept { return order_ == 1; }
    /// Value of a rational number; throws std::domain_error otherwise.
    Rational rational() const;
    bool is_integer() const;

    /// True iff every Zumbroich coefficient is an integer (Z[zeta_n] is the
    /// full ring of integers and the basis is integral).
    bool is_algebraic_integer() const;

    /// Image under zeta_n -> zeta_n^k; requires gcd(k, order()) = 1.
    CycloNum galois(std::int64_t k) const;
    /// Complex conjugate, i.e. galois(-1).
    CycloNum conj() const { return galois(-1); }

    /// Multiplicative inverse via the product of the nontrivial Galois
    /// conjugates divided by the norm.  Throws std::domain_error on zero.
    CycloNum inverse() const;

    /// Printed in the E(n) expression grammar accepted by parse_cyclo.
    std::string to_string() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& rhs);
    CycloNum& operator-=(const CycloNum& rhs);
    CycloNum& operator*=(const CycloNum& rhs);
    CycloNum& operator/=(const CycloNum& rhs) { return *this *= rhs.inverse(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Dense coefficients of this number written over zeta_n for a multiple n
    /// of order() (not reduced to any basis of Q(zeta_n)).
    std::vector<Rational> embed(std::int64_t n) const;

private:
    int order_ = 1;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

/// Parses the cyclotomic expression grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := [integer '*'] atom | integer | rational | rational '*' atom
///   atom   := 'E(' positive-integer ')' ['^' integer]
///   rational := integer '/' positive-integer
/// Whitespace is ignored.  Throws ParseError with the failing offset.
CycloNum parse_cyclo(std::string_view expr);

/// Least n with every element of values contained in Q(zeta_n).  Scans the
/// divisors d of N = lcm of the orders in increasing order (skipping
/// d = 2 mod 4) and returns the first d fixed by every galois(., k) with
/// k = 1 mod d, gcd(k, N) = 1.
std::int64_t conductor(std::span<const CycloNum> values);
inline std::int64_t conductor(const CycloNum& value) { return conductor(std::span(&value, 1)); }

/// p-part of conductor(values).
std::int64_t conductor_p(std::span<const CycloNum> values, std::int64_t p);

}  // namespace pcond
