#include "nilcomm/poly.hpp"

#include "nilcomm/errors.hpp"

namespace nilcomm {

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < params.size(); ++i)
        if (params[i] == name) return i;
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> params, unsigned order) {
    if (order == 0) throw Error("cyclotomic order must be positive");
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j]) throw Error("duplicate parameter '" + params[i] + "'");
    auto r = std::make_shared<PolyRing>();
    r->params = std::move(params);
    r->order = order;
    cyclotomic_polynomial(order);
    return r;
}

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
    std::vector<std::string> p = base->params;
    p.insert(p.end(), extra.begin(), extra.end());
    return make_ring(std::move(p), base->order);
}

RingPtr with_order(const RingPtr& base, unsigned order) { return make_ring(base->params, order); }

RingPtr unite_rings(const RingPtr& a, const RingPtr& b) {
    if (a == b) return a;
    std::vector<std::string> p = a->params;
    for (const auto& name : b->params)
        if (!a->index_of(name)) p.push_back(name);
    unsigned order = lcm_order(a->order, b->order);
    if (p == a->params && order == a->order) return a;
    if (p == b->params && order == b->order) return b;
    return make_ring(std::move(p), order);
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw Error("polynomial without a ring");
}

Poly::Poly(RingPtr ring, const Rational& c) : Poly(std::move(ring)) {
    if (sgn(c) != 0) terms_.emplace(Monomial(ring_->params.size(), 0), Cyclotomic(ring_->order, c));
}

Poly::Poly(RingPtr ring, const Cyclotomic& c) : Poly(std::move(ring)) {
    if (c.order() != ring_->order) throw RingMismatch("scalar order differs from ring order");
    if (!c.is_zero()) terms_.emplace(Monomial(ring_->params.size(), 0), c);
}

Poly Poly::var(RingPtr ring, std::size_t index) {
    Poly p(ring);
    if (index >= ring->params.size()) throw Error("parameter index out of range");
    Monomial m(ring->params.size(), 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Cyclotomic(ring->order, 1));
    return p;
}

Poly Poly::var(RingPtr ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw Error("unknown parameter '" + name + "'");
    return var(std::move(ring), *idx);
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (unsigned e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Cyclotomic Poly::constant() const {
    if (!is_constant()) throw RequiresSpecialization("polynomial " + to_string());
    if (terms_.empty()) return Cyclotomic(ring_->order);
    return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned s = 0;
        for (unsigned e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

std::vector<std::string> Poly::used_params() const {
    std::vector<bool> used(ring_->params.size(), false);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) used[i] = true;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) out.push_back(ring_->params[i]);
    return out;
}

void Poly::check_same(const Poly& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_->same_as(*o.ring_)) throw RingMismatch("polynomials over different rings");
}

void Poly::add_term(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    check_same(o);
    if (terms_.empty()) return *this;
    if (o.terms_.empty()) {
        terms_.clear();
        return *this;
    }
    Poly r(ring_);
    Monomial m(ring_->params.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

Poly& Poly::operator*=(const Cyclotomic& c) {
    if (c.order() != ring_->order) throw RingMismatch("scalar order differs from ring order");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result(ring_, 1);
    Poly base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Poly Poly::substitute(const std::map<std::string, Cyclotomic>& assignment) const {
    std::vector<std::optional<Cyclotomic>> val(ring_->params.size());
    for (const auto& [name, v] : assignment) {
        auto idx = ring_->index_of(name);
        if (!idx) throw RingMismatch("substitution for unknown parameter '" + name + "'");
        val[*idx] = v.embed(ring_->order);
    }
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        Cyclotomic cc = c;
        for (std::size_t i = 0; i < mm.size(); ++i) {
            if (val[i] && mm[i]) {
                cc *= val[i]->pow(mm[i]);
                mm[i] = 0;
            }
        }
        r.add_term(mm, cc);
    }
    return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& assignment, const RingPtr& target) const {
    std::vector<std::optional<Poly>> val(ring_->params.size());
    for (const auto& [name, v] : assignment) {
        auto idx = ring_->index_of(name);
        if (!idx) throw RingMismatch("substitution for unknown parameter '" + name + "'");
        val[*idx] = v.recast(target);
    }
    for (std::size_t i = 0; i < val.size(); ++i) {
        if (val[i]) continue;
        if (target->index_of(ring_->params[i])) val[i] = var(target, ring_->params[i]);
    }
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Poly t(target, c.embed(target->order));
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!val[i])
                throw RingMismatch("parameter '" + ring_->params[i] + "' missing from target ring");
            t *= val[i]->pow(m[i]);
        }
        r += t;
    }
    return r;
}

Poly Poly::recast(const RingPtr& target) const {
    if (ring_ == target || ring_->same_as(*target)) {
        Poly r(*this);
        r.ring_ = target;
        return r;
    }
    if (target->order % ring_->order != 0)
        throw RingMismatch("cannot recast order " + std::to_string(ring_->order) + " into order " +
                           std::to_string(target->order));
    std::vector<std::optional<std::size_t>> map(ring_->params.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = target->index_of(ring_->params[i]);
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Monomial mm(target->params.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!map[i])
                throw RingMismatch("parameter '" + ring_->params[i] + "' missing from target ring");
            mm[*map[i]] = m[i];
        }
        r.add_term(mm, c.embed(target->order));
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->params[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (c.is_rational()) {
            const Rational& q = c.rational();
            Rational mag = abs(q);
            if (first)
                out += sgn(q) < 0 ? "-" : "";
            else
                out += sgn(q) < 0 ? " - " : " + ";
            if (mono.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + "*" + mono;
        } else {
            if (!first) out += " + ";
            out += "(" + c.to_string() + ")";
            if (!mono.empty()) out += "*" + mono;
        }
        first = false;
    }
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
    return a.terms_ == b.terms_;
}

Constraint::Constraint(Poly p, std::string l) : poly(std::move(p)), label(std::move(l)) {
    if (poly.is_zero()) throw Error("constraint '" + label + "' is the zero polynomial");
}

}  // namespace nilcomm
