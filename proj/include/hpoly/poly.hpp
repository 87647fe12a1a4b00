#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hpoly {

// mpq_class leaves fraction constructors unreduced; route every ratio
// through this instead.
inline mpq_class frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Dense univariate polynomial in k over exact rationals. Coefficient i is
// the coefficient of k^i; trailing zeros are trimmed, so the zero polynomial
// has an empty coefficient vector. All rationals are kept in lowest terms
// with positive denominator (mpq_class canonical form).
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }

    static Poly constant(const mpq_class& v) { return Poly({v}); }

    // b*k + a
    static Poly linear(const mpq_class& a, const mpq_class& b) { return Poly({a, b}); }

    // k^e
    static Poly monomial(std::size_t e, const mpq_class& coeff = 1) {
        std::vector<mpq_class> c(e + 1, mpq_class(0));
        c[e] = coeff;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of k^i (zero beyond the stored range).
    const mpq_class& coeff(std::size_t i) const {
        static const mpq_class q0(0);
        return i < c_.size() ? c_[i] : q0;
    }

    const std::vector<mpq_class>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpq_class(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpq_class(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const mpq_class& s, Poly p) {
        for (auto& x : p.c_) x *= s;
        p.trim();
        return p;
    }

    friend Poly operator*(Poly p, const mpq_class& s) { return s * std::move(p); }

    Poly operator-() const { return mpq_class(-1) * *this; }

    Poly pow(unsigned e) const {
        Poly r = constant(1);
        Poly b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    // Exact Horner evaluation at a rational point.
    mpq_class evaluate(const mpq_class& x) const {
        mpq_class acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    // Formal derivative.
    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<mpq_class> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mpq_class(static_cast<long>(i)) * c_[i];
        return Poly(std::move(d));
    }

    // Canonical text: descending powers, reduced fractions, e.g.
    // "3k^7 - 23k^6 + 145/2k^5 - ... + 10k".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const mpq_class& q = c_[i];
            if (q == 0) continue;
            mpq_class a = q;
            if (out.empty()) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            const bool unit = (a == 1) && i > 0;
            if (!unit) out += a.get_str();
            if (i >= 2)
                out += "k^" + std::to_string(i);
            else if (i == 1)
                out += "k";
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpq_class> c_;
};

// Thrown by divide_exact when the divisor does not divide the dividend in
// the rational polynomial ring; carries the nonzero remainder.
class divisibility_error : public std::domain_error {
public:
    divisibility_error(const std::string& what, Poly remainder)
        : std::domain_error(what), remainder_(std::move(remainder)) {}
    const Poly& remainder() const noexcept { return remainder_; }

private:
    Poly remainder_;
};

// Exact polynomial quotient p/q. Throws divisibility_error if the long
// division leaves a nonzero remainder, and std::domain_error if q = 0.
inline Poly divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
    std::vector<mpq_class> rem(p.coeffs());
    const int dq = q.degree();
    const mpq_class& lead = q.coeff(static_cast<std::size_t>(dq));
    std::vector<mpq_class> quo;
    if (p.degree() >= dq) quo.assign(static_cast<std::size_t>(p.degree() - dq) + 1, mpq_class(0));
    for (int i = p.degree(); i >= dq; --i) {
        mpq_class f = rem[static_cast<std::size_t>(i)] / lead;
        if (f == 0) continue;
        quo[static_cast<std::size_t>(i - dq)] = f;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<std::size_t>(i - dq + j)] -= f * q.coeff(static_cast<std::size_t>(j));
    }
    Poly r{std::move(rem)};
    if (!r.is_zero()) throw divisibility_error("divide_exact: nonzero remainder", std::move(r));
    return Poly{std::move(quo)};
}

// The degree-kappa polynomial agreeing with the binomial coefficient
// C(x, kappa) at every integer x >= 0: k(k-1)...(k-kappa+1)/kappa!.
inline Poly binomial_poly(unsigned kappa) {
    Poly r = Poly::constant(1);
    for (unsigned i = 0; i < kappa; ++i) r *= Poly::linear(-static_cast<long>(i), 1);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), kappa);
    mpq_class inv(1, fact);
    inv.canonicalize();
    return inv * r;
}

// Falling factorial k(k-1)...(k-(terms-1)); the chromatic polynomial of
// a complete graph on `terms` vertices.
inline Poly falling_factorial(unsigned terms) {
    Poly r = Poly::constant(1);
    for (unsigned i = 0; i < terms; ++i) r *= Poly::linear(-static_cast<long>(i), 1);
    return r;
}

}  // namespace hpoly
