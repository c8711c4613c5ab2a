#include "nilcomm/scalar.hpp"

#include "nilcomm/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace nilcomm {

void qpoly_trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qpoly_trim(r);
    return r;
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    QPoly rem = a;
    QPoly den = b;
    qpoly_trim(rem);
    qpoly_trim(den);
    if (den.empty()) throw Error("polynomial division by zero");
    if (rem.size() < den.size()) return {{}, rem};
    QPoly quo(rem.size() - den.size() + 1);
    const Rational& lead = den.back();
    for (std::size_t i = rem.size(); i-- >= den.size();) {
        if (sgn(rem[i]) == 0) continue;
        Rational f = rem[i] / lead;
        std::size_t shift = i - (den.size() - 1);
        quo[shift] = f;
        for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= f * den[j];
    }
    qpoly_trim(quo);
    qpoly_trim(rem);
    return {quo, rem};
}

namespace {

std::mutex g_phi_mutex;
std::map<unsigned, QPoly> g_phi_cache;

QPoly compute_phi(unsigned m) {
    QPoly p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = qpoly_divmod(p, cyclotomic_polynomial(d));
        if (!r.empty()) throw Error("cyclotomic division left a remainder");
        p = std::move(q);
    }
    return p;
}

}  // namespace

const QPoly& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw Error("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(m);
        if (it != g_phi_cache.end()) return it->second;
    }
    QPoly p = compute_phi(m);
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return g_phi_cache.emplace(m, std::move(p)).first->second;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

Cyclotomic::Cyclotomic() : Cyclotomic(1u) {}

Cyclotomic::Cyclotomic(unsigned order) : order_(order) {
    c_.assign(cyclotomic_polynomial(order).size() - 1, Rational(0));
}

Cyclotomic::Cyclotomic(unsigned order, const Rational& value) : Cyclotomic(order) {
    c_[0] = value;
}

Cyclotomic Cyclotomic::zeta(unsigned order, long k) {
    Cyclotomic r(order);
    long m = static_cast<long>(order);
    long e = ((k % m) + m) % m;
    std::vector<Rational> v(static_cast<std::size_t>(e) + 1);
    v[static_cast<std::size_t>(e)] = 1;
    r.reduce(v);
    r.c_ = std::move(v);
    return r;
}

Cyclotomic Cyclotomic::eta(unsigned k, unsigned order) {
    if (k == 0 || order % (2 * k) != 0)
        throw RingMismatch("eta(" + std::to_string(k) + ") needs a cyclotomic order divisible by " +
                           std::to_string(2 * k));
    return zeta(order, static_cast<long>(order / (2 * k)));
}

void Cyclotomic::reduce(std::vector<Rational>& v) const {
    const QPoly& phi = cyclotomic_polynomial(order_);
    std::size_t d = phi.size() - 1;
    for (std::size_t i = v.size(); i-- > d;) {
        if (sgn(v[i]) == 0) continue;
        Rational f = v[i];
        for (std::size_t j = 0; j <= d; ++j) v[i - d + j] -= f * phi[j];
    }
    v.resize(d, Rational(0));
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
    if (order_ != o.order_)
        throw RingMismatch("cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                           std::to_string(o.order_));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

const Rational& Cyclotomic::rational() const {
    if (!is_rational()) throw Error("cyclotomic element " + to_string() + " is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same(o);
    if (c_.size() == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<Rational> v(2 * c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    reduce(v);
    c_ = std::move(v);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    if (c_.size() == 1) return Cyclotomic(order_, 1 / c_[0]);
    // Extended Euclid: s*a + t*phi = g, g a nonzero constant since phi is irreducible.
    QPoly a = c_;
    qpoly_trim(a);
    QPoly b = cyclotomic_polynomial(order_);
    QPoly s0{Rational(1)}, s1{};
    while (!b.empty()) {
        auto [q, r] = qpoly_divmod(a, b);
        QPoly qs = qpoly_mul(q, s1);
        QPoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size());
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qpoly_trim(s2);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (a.size() != 1) throw Error("cyclotomic inverse: gcd is not constant");
    Rational g = a[0];
    std::vector<Rational> v = s0;
    for (auto& x : v) x /= g;
    Cyclotomic r(order_);
    if (v.size() > r.c_.size()) reduce(v);
    v.resize(r.c_.size(), Rational(0));
    r.c_ = std::move(v);
    return r;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(order_, 1);
    Cyclotomic base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Cyclotomic Cyclotomic::embed(unsigned order) const {
    if (order == order_) return *this;
    if (order % order_ != 0)
        throw RingMismatch("cannot embed order " + std::to_string(order_) + " into order " +
                           std::to_string(order));
    std::size_t step = order / order_;
    Cyclotomic r(order);
    std::vector<Rational> v(step * (c_.size() - 1) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
    r.reduce(v);
    r.c_ = std::move(v);
    return r;
}

std::string Cyclotomic::to_string() const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int s = sgn(c_[i]);
        if (s == 0) continue;
        Rational mag = abs(c_[i]);
        if (first) {
            if (s < 0) out += "-";
        } else {
            out += s < 0 ? " - " : " + ";
        }
        first = false;
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "zeta(" + std::to_string(order_) + ")";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return first ? "0" : out;
}

}  // namespace nilcomm
