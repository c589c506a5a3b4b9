#include "pcond/cyclo.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pcond/errors.hpp"
#include "pcond/numtheory.hpp"

namespace pcond {

namespace {

struct PrimePower {
    std::int64_t p;
    int k;
    std::int64_t q;   // p^k
    std::int64_t hi;  // p^(k-1)
};

std::vector<PrimePower> factor(std::int64_t n) {
    std::vector<PrimePower> out;
    for (auto p : nt::prime_factors(n)) {
        int k = nt::valuation(n, p);
        std::int64_t q = nt::ipow(p, k);
        out.push_back({p, k, q, q / p});
    }
    return out;
}

// Component of exponent e (mod n) in Z/q for the prime power q || n.
std::int64_t component(std::int64_t e, std::int64_t n, const PrimePower& f) {
    std::int64_t r = n / f.q;
    return nt::mod(e * nt::inverse_mod(r % f.q, f.q), f.q);
}

// Rewrites dense coefficients over zeta_n (n != 2 mod 4) into the Zumbroich
// basis, prime by prime.
void reduce_to_basis(std::int64_t n, std::vector<Rational>& c) {
    for (const auto& f : factor(n)) {
        const std::int64_t r = n / f.q;
        const std::int64_t shift = f.hi * r;  // moves the p-component by p^(k-1)
        for (std::int64_t e = 0; e < n; ++e) {
            if (sgn(c[e]) == 0) continue;
            std::int64_t m = component(e, n, f) / f.hi;
            if (f.p == 2 && m == 1) {
                c[nt::mod(e - shift, n)] -= c[e];
                c[e] = 0;
            } else if (f.p != 2 && m == 0) {
                for (std::int64_t j = 1; j < f.p; ++j) c[nt::mod(e + j * shift, n)] -= c[e];
                c[e] = 0;
            }
        }
    }
}

// Tries to rewrite the basis coefficients c over a proper subfield
// Q(zeta_n/p) (or Q(zeta_n/4) when 4 || n).  Returns true and updates n, c on
// success.  Relies on the basis of the subfield being a subset of the basis
// of Q(zeta_n), up to the odd-prime rewriting below.
bool shrink_once(std::int64_t& n, std::vector<Rational>& c) {
    for (const auto& f : factor(n)) {
        const std::int64_t r = n / f.q;
        if (f.k >= 2) {
            bool ok = true;
            for (std::int64_t e = 0; e < n && ok; ++e)
                if (sgn(c[e]) != 0 && component(e, n, f) % f.p != 0) ok = false;
            if (!ok) continue;
            const std::int64_t step = (f.p == 2 && f.k == 2) ? 4 : f.p;
            std::vector<Rational> out(n / step);
            for (std::int64_t e = 0; e < n; ++e)
                if (sgn(c[e]) != 0) out[e / step] = c[e];
            n /= step;
            c = std::move(out);
            return true;
        }
        if (f.p == 2) continue;  // k == 1 never happens for p == 2
        // p || n: the element lies in Q(zeta_n/p) iff the coefficients along
        // each fibre {rest + j*r : j = 1..p-1} agree.
        const std::int64_t shift = r;  // component step of one for q = p
        bool ok = true;
        std::vector<Rational> out(n / f.p);
        for (std::int64_t e = 0; e < n && ok; ++e) {
            if (sgn(c[e]) == 0) continue;
            std::int64_t ep = component(e, n, f);
            std::int64_t rest = nt::mod(e - ep * shift, n);
            for (std::int64_t j = 1; j < f.p; ++j) {
                if (c[nt::mod(rest + j * shift, n)] != c[e]) {
                    ok = false;
                    break;
                }
            }
            if (ok) out[rest / f.p] = -c[e];
        }
        if (!ok) continue;
        n /= f.p;
        c = std::move(out);
        return true;
    }
    return false;
}

}  // namespace

CycloNum::CycloNum(long value) : CycloNum(Rational(value)) {}

CycloNum::CycloNum(const Rational& value) {
    if (sgn(value) != 0) terms_.emplace_back(0, value);
}

CycloNum CycloNum::root_of_unity(std::int64_t n, std::int64_t e) {
    if (n <= 0) throw std::domain_error("root_of_unity: order must be positive");
    std::vector<Rational> c(n);
    c[nt::mod(e, n)] = 1;
    return from_dense(n, std::move(c));
}

CycloNum CycloNum::from_dense(std::int64_t n, std::vector<Rational> c) {
    if (n <= 0 || static_cast<std::int64_t>(c.size()) != n)
        throw std::invalid_argument("from_dense: coefficient vector must have length n > 0");
    if (n > std::numeric_limits<int>::max() / 4) throw std::overflow_error("root of unity order too large");
    if (n % 4 == 2) {
        // zeta_2m = -zeta_m^((m+1)/2) for odd m
        const std::int64_t m = n / 2;
        std::vector<Rational> out(m);
        for (std::int64_t e = 0; e < n; ++e) {
            if (sgn(c[e]) == 0) continue;
            std::int64_t target = nt::mod(e * ((m + 1) / 2), m);
            if (e % 2 == 0)
                out[target] += c[e];
            else
                out[target] -= c[e];
        }
        n = m;
        c = std::move(out);
    }
    reduce_to_basis(n, c);
    while (n > 1 && shrink_once(n, c)) {
    }
    CycloNum x;
    x.order_ = static_cast<int>(n);
    for (std::int64_t e = 0; e < n; ++e)
        if (sgn(c[e]) != 0) x.terms_.emplace_back(static_cast<int>(e), std::move(c[e]));
    return x;
}

std::vector<Rational> CycloNum::embed(std::int64_t n) const {
    if (n % order_ != 0) throw std::invalid_argument("embed: order does not divide target");
    std::vector<Rational> c(n);
    const std::int64_t f = n / order_;
    for (const auto& [e, v] : terms_) c[e * f] += v;
    return c;
}

Rational CycloNum::rational() const {
    if (!is_rational()) throw std::domain_error("CycloNum is not rational: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.front().second;
}

bool CycloNum::is_integer() const {
    return is_rational() && is_algebraic_integer();
}

bool CycloNum::is_algebraic_integer() const {
    for (const auto& [e, v] : terms_)
        if (v.get_den() != 1) return false;
    return true;
}

CycloNum CycloNum::galois(std::int64_t k) const {
    if (std::gcd(nt::mod(k, order_), std::int64_t{order_}) != 1 && order_ > 1)
        throw std::domain_error("galois: exponent " + std::to_string(k) + " not coprime to order " +
                                std::to_string(order_));
    if (order_ == 1) return *this;
    std::vector<Rational> c(order_);
    for (const auto& [e, v] : terms_) c[nt::mod(e * k, order_)] += v;
    return from_dense(order_, std::move(c));
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return CycloNum(Rational(1) / rational());
    CycloNum others(1L);
    for (std::int64_t k = 2; k < order_; ++k)
        if (std::gcd(k, std::int64_t{order_}) == 1) others *= galois(k);
    const Rational norm = (*this * others).rational();
    return others * CycloNum(Rational(1) / norm);
}

CycloNum CycloNum::operator-() const {
    CycloNum x = *this;
    for (auto& [e, v] : x.terms_) v = -v;
    return x;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (order_ == 1 && rhs.order_ == 1) return *this = CycloNum(rational() + rhs.rational());
    const std::int64_t n = nt::lcm(order_, rhs.order_);
    std::vector<Rational> c = embed(n);
    const std::int64_t f = n / rhs.order_;
    for (const auto& [e, v] : rhs.terms_) c[e * f] += v;
    return *this = from_dense(n, std::move(c));
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) { return *this += -rhs; }

CycloNum& CycloNum::operator*=(const CycloNum& rhs) { return *this = *this * rhs; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.is_zero() || b.is_zero()) return CycloNum();
    if (a.order_ == 1 && b.order_ == 1) return CycloNum(a.rational() * b.rational());
    if (b.order_ == 1) {
        CycloNum x = a;
        const Rational s = b.rational();
        for (auto& [e, v] : x.terms_) v *= s;
        return x;
    }
    if (a.order_ == 1) return b * a;
    const std::int64_t n = nt::lcm(a.order_, b.order_);
    const std::int64_t fa = n / a.order_, fb = n / b.order_;
    std::vector<Rational> c(n);
    for (const auto& [ea, va] : a.terms_)
        for (const auto& [eb, vb] : b.terms_) c[(ea * fa + eb * fb) % n] += va * vb;
    return CycloNum::from_dense(n, std::move(c));
}

std::string CycloNum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : terms_) {
        const bool neg = sgn(v) < 0;
        const Rational mag = abs(v);
        if (!first)
            os << (neg ? "-" : "+");
        else if (neg)
            os << "-";
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "E(" << order_ << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    CycloNum parse() {
        std::vector<Term> raw;
        skip();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        while (true) {
            Term t = term();
            if (negate) t.c = -t.c;
            raw.push_back(std::move(t));
            skip();
            if (pos_ == s_.size()) break;
            char op = s_[pos_];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            negate = op == '-';
            ++pos_;
        }
        std::int64_t n = 1;
        for (const auto& t : raw) n = nt::lcm(n, t.n);
        if (n > std::numeric_limits<int>::max() / 4) fail("root of unity order too large");
        std::vector<Rational> c(n);
        for (const auto& t : raw) c[nt::mod(t.e, t.n) * (n / t.n)] += t.c;
        return CycloNum::from_dense(n, std::move(c));
    }

private:
    struct Term {
        std::int64_t n;
        std::int64_t e;
        Rational c;
    };

    Term term() {
        skip();
        if (peek() == 'E') return atom(Rational(1));
        Integer num = integer();
        Rational c(num);
        skip();
        if (peek() == '/') {
            ++pos_;
            skip();
            std::size_t at = pos_;
            Integer den = integer();
            if (sgn(den) <= 0) fail_at("denominator must be positive", at);
            c = Rational(num, den);
            c.canonicalize();
            skip();
        }
        if (peek() == '*') {
            ++pos_;
            skip();
            return atom(c);
        }
        return {1, 0, c};
    }

    Term atom(Rational c) {
        skip();
        expect('E');
        skip();
        expect('(');
        skip();
        std::size_t at = pos_;
        std::int64_t n = small_int(true);
        if (n <= 0) fail_at("E(n) requires a positive integer n", at);
        skip();
        expect(')');
        skip();
        std::int64_t e = 1;
        if (peek() == '^') {
            ++pos_;
            skip();
            e = small_int(true);
        }
        return {n, nt::mod(e, n), std::move(c)};
    }

    Integer integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::int64_t small_int(bool allow_sign) {
        bool neg = false;
        if (allow_sign && peek() == '-') {
            neg = true;
            ++pos_;
            skip();
        }
        std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > 100'000'000) fail_at("integer too large", start);
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        if (start == pos_) fail("expected integer");
        return neg ? -v : v;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char ch) {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        throw ParseError("cyclotomic expression \"" + std::string(s_) + "\": " + msg, at);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

CycloNum parse_cyclo(std::string_view expr) { return Parser(expr).parse(); }

// ---------------------------------------------------------------------------
// conductors

std::int64_t conductor(std::span<const CycloNum> values) {
    std::int64_t big_n = 1;
    for (const auto& x : values) big_n = nt::lcm(big_n, x.order());
    for (std::int64_t d : nt::divisors(big_n)) {
        if (d % 4 == 2) continue;
        bool fixed = true;
        for (std::int64_t k = 1 + d; k < big_n && fixed; k += d) {
            if (std::gcd(k, big_n) != 1) continue;
            for (const auto& x : values) {
                if (x.galois(k) != x) {
                    fixed = false;
                    break;
                }
            }
        }
        if (fixed) return d;
    }
    return big_n;
}

std::int64_t conductor_p(std::span<const CycloNum> values, std::int64_t p) {
    return nt::p_part(conductor(values), p);
}

}  // namespace pcond
