#pragma once

// Reduction of cyclotomic integers modulo a fixed prime ideal above p.
//
// For N = p^a * n' with p not dividing n', the residue field of Z[zeta_N] at a
// prime above p is F_{p^f}, f = ord_{n'}(p).  The map sends zeta_{p^a} to 1
// and zeta_{n'} to a fixed element of order n'.  All choices are made by
// deterministic search so block labels are reproducible.

#include <cstdint>
#include <vector>

#include "pcond/cyclo.hpp"

namespace pcond {

/// Element of F_{p^f}: coefficients (c_0 .. c_{f-1}) of a polynomial in x
/// reduced modulo the defining polynomial, each in [0, p).
struct PrimeFieldElem {
    std::vector<int> coords;
    friend bool operator==(const PrimeFieldElem&, const PrimeFieldElem&) = default;
};

class ResidueMap {
public:
    /// Modulus: least monic irreducible polynomial of degree f, ordering
    /// candidates by sum c_i p^i over their lower coefficients.  root_image:
    /// g^((p^f - 1)/n') for the least primitive element g in the same order.
    static ResidueMap build(std::int64_t ambient_order, std::int64_t p);

    std::int64_t ambient_order() const { return ambient_order_; }
    std::int64_t p() const { return p_; }
    std::int64_t p_power() const { return p_power_; }
    std::int64_t prime_to_p_order() const { return n_prime_; }
    int field_degree() const { return f_; }
    /// Monic modulus, coefficients c_0 .. c_f.
    const std::vector<int>& modulus() const { return modulus_; }
    const PrimeFieldElem& root_image() const { return root_image_; }

    /// Ring homomorphism Z[zeta_N] -> F_{p^f}.  Requires an algebraic integer
    /// whose order divides the ambient order (std::domain_error otherwise).
    PrimeFieldElem reduce(const CycloNum& a) const;

    PrimeFieldElem zero() const;
    PrimeFieldElem one() const;
    PrimeFieldElem from_int(std::int64_t v) const;
    PrimeFieldElem add(const PrimeFieldElem& a, const PrimeFieldElem& b) const;
    PrimeFieldElem mul(const PrimeFieldElem& a, const PrimeFieldElem& b) const;
    PrimeFieldElem pow(PrimeFieldElem a, std::int64_t k) const;
    std::int64_t multiplicative_order(const PrimeFieldElem& a) const;

private:
    PrimeFieldElem element(std::int64_t code) const;

    std::int64_t ambient_order_ = 1;
    std::int64_t p_ = 2;
    std::int64_t p_power_ = 1;
    std::int64_t n_prime_ = 1;
    int f_ = 1;
    std::vector<int> modulus_;
    PrimeFieldElem root_image_;
    std::vector<PrimeFieldElem> root_powers_;  // root_image^k, k < n'
};

}  // namespace pcond
