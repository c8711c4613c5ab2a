#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nilcomm {

using Rational = mpq_class;

// Dense univariate polynomials over Q, coefficients low degree first.
using QPoly = std::vector<Rational>;

// m-th cyclotomic polynomial Phi_m; cached, safe to call concurrently.
// Throws Error for m = 0.
const QPoly& cyclotomic_polynomial(unsigned m);

unsigned lcm_order(unsigned a, unsigned b);

// Element of Q(zeta_m), stored as a coefficient vector of length deg Phi_m
// reduced modulo Phi_m. Order m = 1 is plain Q.
class Cyclotomic {
public:
    Cyclotomic();
    explicit Cyclotomic(unsigned order);
    Cyclotomic(unsigned order, const Rational& value);
    Cyclotomic(unsigned order, long value) : Cyclotomic(order, Rational(value)) {}

    // zeta_m^k with k taken modulo m.
    static Cyclotomic zeta(unsigned order, long k = 1);
    // eta_k = zeta_{2k}, expressed in Q(zeta_order); requires 2k | order.
    static Cyclotomic eta(unsigned k, unsigned order);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Rational value; throws Error if the element is not rational.
    const Rational& rational() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& r);

    // Throws Error on zero.
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    // Image under Q(zeta_m) -> Q(zeta_M) for m | M.
    Cyclotomic embed(unsigned order) const;

    // Parseable form, e.g. "-3/4", "1 + 2*zeta(6)".
    std::string to_string() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    void reduce(std::vector<Rational>& v) const;
    void check_same(const Cyclotomic& o) const;

    unsigned order_;
    std::vector<Rational> c_;
};

inline Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
inline Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
inline Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
inline Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

// Q[x] helpers used by the cyclotomic reduction; exposed for tests.
void qpoly_trim(QPoly& p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
// Quotient and remainder of a by b (b nonzero).
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);

}  // namespace nilcomm
