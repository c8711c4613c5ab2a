#pragma once

#include "nilcomm/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nilcomm {

// Fixed ordered parameter list plus the cyclotomic order of the coefficients.
struct PolyRing {
    std::vector<std::string> params;
    unsigned order = 1;

    std::optional<std::size_t> index_of(const std::string& name) const;
    bool same_as(const PolyRing& o) const { return order == o.order && params == o.params; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> params = {}, unsigned order = 1);
// Same order, `extra` appended after the existing parameters.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);
RingPtr with_order(const RingPtr& base, unsigned order);
// Parameters of `a` followed by those of `b` not already present; order is the lcm.
RingPtr unite_rings(const RingPtr& a, const RingPtr& b);

using Monomial = std::vector<unsigned>;

// Sparse polynomial over Q(zeta_m); terms keyed by exponent vectors in
// lexicographic order. Zero coefficients are never stored.
class Poly {
public:
    explicit Poly(RingPtr ring);
    Poly(RingPtr ring, const Rational& c);
    Poly(RingPtr ring, const Cyclotomic& c);
    Poly(RingPtr ring, long c) : Poly(std::move(ring), Rational(c)) {}

    static Poly var(RingPtr ring, std::size_t index);
    static Poly var(RingPtr ring, const std::string& name);

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value; throws RequiresSpecialization if the polynomial is not constant.
    Cyclotomic constant() const;
    unsigned total_degree() const;
    // Names of parameters that occur with positive exponent.
    std::vector<std::string> used_params() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Cyclotomic& c);
    Poly pow(unsigned e) const;

    // Replace the listed parameters by scalars; the ring is unchanged.
    Poly substitute(const std::map<std::string, Cyclotomic>& assignment) const;
    // Replace parameters by polynomials over `target`; unlisted parameters
    // are carried over by name and must exist in `target`.
    Poly substitute(const std::map<std::string, Poly>& assignment, const RingPtr& target) const;
    // Re-express over another ring by parameter name; the source order must divide the target order.
    Poly recast(const RingPtr& target) const;

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void check_same(const Poly& o) const;
    void add_term(const Monomial& m, const Cyclotomic& c);

    RingPtr ring_;
    std::map<Monomial, Cyclotomic> terms_;
};

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
inline Poly operator*(Poly a, const Poly& b) { return a *= b; }

// Polynomial asserted nonzero on admissible parameter values.
struct Constraint {
    Poly poly;
    std::string label;

    // Throws Error if `poly` is the zero polynomial.
    Constraint(Poly p, std::string label);
};

}  // namespace nilcomm
