#include "pcond/residue.hpp"

#include <stdexcept>
#include <string>

#include "pcond/numtheory.hpp"

namespace pcond {

namespace {

// Remainder of a modulo a monic polynomial m over F_p (coefficient vectors,
// lowest degree first).
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& m, int p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        int lead = a.back() % p;
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = static_cast<int>(nt::mod(a[shift + i] - lead * m[i], p));
        }
        a.pop_back();
    }
    return a;
}

std::vector<int> monic_from_code(std::int64_t code, int degree, int p) {
    std::vector<int> m(degree + 1);
    for (int i = 0; i < degree; ++i) {
        m[i] = static_cast<int>(code % p);
        code /= p;
    }
    m[degree] = 1;
    return m;
}

bool is_irreducible(const std::vector<int>& m, int p) {
    const int f = static_cast<int>(m.size()) - 1;
    if (f == 1) return true;
    for (int d = 1; d <= f / 2; ++d) {
        const std::int64_t count = nt::ipow(p, d);
        for (std::int64_t code = 0; code < count; ++code) {
            auto r = poly_rem(m, monic_from_code(code, d, p), p);
            bool zero = true;
            for (int c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

ResidueMap ResidueMap::build(std::int64_t ambient_order, std::int64_t p) {
    if (ambient_order < 1) throw std::invalid_argument("residue map: ambient order must be positive");
    if (!nt::is_prime(p)) throw std::invalid_argument("residue map: " + std::to_string(p) + " is not prime");
    ResidueMap m;
    m.ambient_order_ = ambient_order;
    m.p_ = p;
    m.p_power_ = nt::p_part(ambient_order, p);
    m.n_prime_ = ambient_order / m.p_power_;
    m.f_ = static_cast<int>(nt::multiplicative_order(p, m.n_prime_));
    const int pi = static_cast<int>(p);
    const std::int64_t q = nt::ipow(p, m.f_);
    for (std::int64_t code = 0; code < nt::ipow(p, m.f_); ++code) {
        auto cand = monic_from_code(code, m.f_, pi);
        if (is_irreducible(cand, pi)) {
            m.modulus_ = std::move(cand);
            break;
        }
    }
    const auto q1 = q - 1;
    const auto fac = q1 > 1 ? nt::prime_factors(q1) : std::vector<std::int64_t>{};
    PrimeFieldElem generator;
    for (std::int64_t code = 1; code < q; ++code) {
        PrimeFieldElem g = m.element(code);
        bool primitive = true;
        for (auto r : fac) primitive = primitive && m.pow(g, q1 / r) != m.one();
        if (primitive) {
            generator = g;
            break;
        }
    }
    m.root_image_ = m.pow(generator, q1 / m.n_prime_);
    m.root_powers_.reserve(m.n_prime_);
    PrimeFieldElem x = m.one();
    for (std::int64_t k = 0; k < m.n_prime_; ++k) {
        m.root_powers_.push_back(x);
        x = m.mul(x, m.root_image_);
    }
    return m;
}

PrimeFieldElem ResidueMap::element(std::int64_t code) const {
    PrimeFieldElem e;
    e.coords.resize(f_);
    for (int i = 0; i < f_; ++i) {
        e.coords[i] = static_cast<int>(code % p_);
        code /= p_;
    }
    return e;
}

PrimeFieldElem ResidueMap::zero() const { return element(0); }
PrimeFieldElem ResidueMap::one() const { return from_int(1); }

PrimeFieldElem ResidueMap::from_int(std::int64_t v) const {
    PrimeFieldElem e = zero();
    e.coords[0] = static_cast<int>(nt::mod(v, p_));
    return e;
}

PrimeFieldElem ResidueMap::add(const PrimeFieldElem& a, const PrimeFieldElem& b) const {
    PrimeFieldElem r = a;
    for (int i = 0; i < f_; ++i) r.coords[i] = static_cast<int>((a.coords[i] + b.coords[i]) % p_);
    return r;
}

PrimeFieldElem ResidueMap::mul(const PrimeFieldElem& a, const PrimeFieldElem& b) const {
    std::vector<int> prod(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + static_cast<std::int64_t>(a.coords[i]) * b.coords[j]) % p_);
    auto r = poly_rem(std::move(prod), modulus_, static_cast<int>(p_));
    r.resize(f_, 0);
    return PrimeFieldElem{std::move(r)};
}

PrimeFieldElem ResidueMap::pow(PrimeFieldElem a, std::int64_t k) const {
    PrimeFieldElem r = one();
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

std::int64_t ResidueMap::multiplicative_order(const PrimeFieldElem& a) const {
    if (a == zero()) throw std::domain_error("multiplicative order of zero");
    std::int64_t k = 1;
    PrimeFieldElem x = a;
    while (x != one()) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

PrimeFieldElem ResidueMap::reduce(const CycloNum& a) const {
    if (!a.is_algebraic_integer())
        throw std::domain_error("reduce: " + a.to_string() + " is not an algebraic integer");
    if (ambient_order_ % a.order() != 0)
        throw std::domain_error("reduce: order " + std::to_string(a.order()) + " does not divide " +
                                std::to_string(ambient_order_));
    const std::int64_t scale = ambient_order_ / a.order();
    const std::int64_t inv = nt::inverse_mod(p_power_ % n_prime_, n_prime_);
    PrimeFieldElem acc = zero();
    for (const auto& [e, c] : a.terms()) {
        // zeta_N^E = zeta_{p^a}^alpha * zeta_{n'}^beta with beta = E / p^a mod n'
        const std::int64_t beta = nt::mod(e * scale % n_prime_ * inv, n_prime_);
        Integer cm = c.get_num() % Integer(p_);
        if (cm < 0) cm += p_;
        const auto k = static_cast<std::int64_t>(cm.get_si());
        if (k == 0) continue;
        PrimeFieldElem term = root_powers_[beta];
        for (auto& x : term.coords) x = static_cast<int>(x * k % p_);
        acc = add(acc, term);
    }
    return acc;
}

}  // namespace pcond
