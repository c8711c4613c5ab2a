#include "nilcomm/algebra.hpp"

#include "nilcomm/errors.hpp"

#include <optional>
#include <sstream>

namespace nilcomm {

std::size_t sym_dim(std::size_t n) { return n * (n + 1) / 2; }

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    if (i > j) std::swap(i, j);
    return i * (2 * n - i + 1) / 2 + (j - i);
}

AlgebraTable::AlgebraTable(RingPtr ring, std::size_t dim)
    : ring_(std::move(ring)), dim_(dim), prods_(sym_dim(dim), zero_polyvec(ring_, dim)) {}

const Element& AlgebraTable::product(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw DimensionMismatch("basis index out of range");
    return prods_[pair_index(i, j, dim_)];
}

void AlgebraTable::set_product(std::size_t i, std::size_t j, Element value) {
    if (i >= dim_ || j >= dim_) throw DimensionMismatch("basis index out of range");
    if (value.size() != dim_) throw DimensionMismatch("product vector has wrong length");
    for (auto& p : value) p = p.recast(ring_);
    prods_[pair_index(i, j, dim_)] = std::move(value);
}

void AlgebraTable::add_constraint(Constraint c) {
    c.poly = c.poly.recast(ring_);
    constraints_.push_back(std::move(c));
}

bool AlgebraTable::is_constant() const {
    for (const auto& v : prods_)
        for (const auto& p : v)
            if (!p.is_constant()) return false;
    return true;
}

std::vector<Vec> AlgebraTable::constant_products() const {
    std::vector<Vec> out;
    out.reserve(prods_.size());
    for (const auto& v : prods_) {
        for (const auto& p : v)
            if (!p.is_constant()) throw RequiresSpecialization("structure constants");
        out.push_back(to_constant(v));
    }
    return out;
}

AlgebraTable AlgebraTable::recast(const RingPtr& target) const {
    AlgebraTable r(target, dim_);
    for (std::size_t k = 0; k < prods_.size(); ++k)
        for (std::size_t l = 0; l < dim_; ++l) r.prods_[k][l] = prods_[k][l].recast(target);
    for (const auto& c : constraints_) r.constraints_.emplace_back(c.poly.recast(target), c.label);
    return r;
}

std::string AlgebraTable::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) {
            const Element& v = product(i, j);
            if (is_zero(v)) continue;
            if (!first) os << ", ";
            first = false;
            os << "e" << i + 1 << "e" << j + 1 << " = " << element_to_string(v);
        }
    return first ? "(zero product)" : os.str();
}

bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.dim_ == b.dim_ && a.prods_ == b.prods_;
}

Element basis_element(const AlgebraTable& a, std::size_t i) {
    Element e = zero_polyvec(a.ring(), a.dim());
    e.at(i) = Poly(a.ring(), 1);
    return e;
}

Element multiply(const AlgebraTable& a, const Element& x, const Element& y) {
    std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("element length differs from algebra dimension");
    Element out = zero_polyvec(a.ring(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Element& p = a.product(i, j);
            std::optional<Poly> xy;
            for (std::size_t k = 0; k < n; ++k) {
                if (p[k].is_zero()) continue;
                if (!xy) xy = x[i] * y[j];
                out[k] += *xy * p[k];
            }
        }
    }
    return out;
}

std::string element_to_string(const Element& x) {
    std::string out;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) continue;
        std::string c = x[k].to_string();
        std::string basis = "e" + std::to_string(k + 1);
        bool single = x[k].terms().size() == 1;
        bool neg = single && c[0] == '-';
        if (neg) c = c.substr(1);
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        if (c == "1")
            out += basis;
        else if (single)
            out += c + " " + basis;
        else
            out += "(" + c + ") " + basis;
    }
    return out.empty() ? "0" : out;
}

namespace {

Vec const_multiply(const std::vector<Vec>& prods, std::size_t n, unsigned order, const Vec& x, const Vec& y) {
    Vec out = zero_vec(n, order);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Vec& p = prods[pair_index(i, j, n)];
            Cyclotomic xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!p[k].is_zero()) out[k] += xy * p[k];
        }
    }
    return out;
}

}  // namespace

Subspace subspace_product(const AlgebraTable& a, const Subspace& u, const Subspace& w) {
    std::size_t n = a.dim();
    if (u.ambient() != n || w.ambient() != n) throw DimensionMismatch("subspace ambient differs from algebra dimension");
    auto prods = a.constant_products();
    unsigned order = a.ring()->order;
    Subspace s(n, order);
    for (const auto& x : u.basis())
        for (const auto& y : w.basis()) {
            if (s.dim() == n) return s;
            s.insert(const_multiply(prods, n, order, x, y));
        }
    return s;
}

PowerSeries powers(const AlgebraTable& a) {
    std::size_t n = a.dim();
    unsigned order = a.ring()->order;
    PowerSeries ps;
    ps.powers.push_back(Subspace::full(n, order));
    ps.dims.push_back(n);
    std::size_t cutoff = std::size_t{1} << std::min<std::size_t>(n, 30);
    while (ps.powers.back().dim() != 0) {
        std::size_t k = ps.powers.size() + 1;
        if (k > cutoff)
            throw NotNilpotent("power chain has not reached zero by exponent " + std::to_string(cutoff));
        Subspace next(n, order);
        for (std::size_t i = 1; i < k; ++i) {
            std::size_t j = k - i;
            if (j < i) break;
            next = next.sum(subspace_product(a, ps.powers[i - 1], ps.powers[j - 1]));
        }
        ps.powers.push_back(next);
        ps.dims.push_back(next.dim());
    }
    ps.nilindex = ps.powers.size();
    return ps;
}

namespace {

// Solves {x : reduce(x e_j) = 0 for all j} where reduction is modulo `mod`.
Subspace preimage_of(const AlgebraTable& a, const std::vector<Vec>& prods, const Subspace& mod) {
    std::size_t n = a.dim();
    unsigned order = a.ring()->order;
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Vec> red(n);
        for (std::size_t i = 0; i < n; ++i) red[i] = mod.reduce(prods[pair_index(i, j, n)]);
        for (std::size_t k = 0; k < n; ++k) {
            Vec row = zero_vec(n, order);
            for (std::size_t i = 0; i < n; ++i) row[i] = red[i][k];
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
    return kernel(rows, n, order);
}

}  // namespace

Subspace annihilator(const AlgebraTable& a) {
    return preimage_of(a, a.constant_products(), Subspace(a.dim(), a.ring()->order));
}

std::vector<Subspace> annihilator_series(const AlgebraTable& a) {
    auto prods = a.constant_products();
    std::vector<Subspace> out;
    Subspace cur(a.dim(), a.ring()->order);
    while (true) {
        Subspace next = preimage_of(a, prods, cur);
        if (next.dim() == cur.dim()) break;
        out.push_back(next);
        cur = std::move(next);
        if (cur.dim() == a.dim()) break;
    }
    return out;
}

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::associative: return "associative";
        case Identity::jordan: return "jordan";
        case Identity::cd: return "cd";
    }
    return "?";
}

std::string IdentityReport::describe() const {
    std::string s = identity_name(identity) + (holds ? " holds" : " fails");
    if (holds) return s;
    if (witness.empty()) {
        s += " for generic x, y";
    } else {
        s += " at (";
        for (std::size_t k = 0; k < witness.size(); ++k) {
            if (k) s += ",";
            s += "e" + std::to_string(witness[k] + 1);
        }
        s += ")";
    }
    s += ", defect " + element_to_string(defect);
    return s;
}

namespace {

IdentityReport check_associative(const AlgebraTable& a) {
    std::size_t n = a.dim();
    IdentityReport rep{Identity::associative, true, {}, {}};
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Element lhs = multiply(a, a.product(x, y), basis_element(a, z));
                Element rhs = multiply(a, basis_element(a, x), a.product(y, z));
                for (std::size_t k = 0; k < n; ++k) lhs[k] -= rhs[k];
                if (!is_zero(lhs)) {
                    rep.holds = false;
                    rep.witness = {x, y, z};
                    rep.defect = std::move(lhs);
                    return rep;
                }
            }
    return rep;
}

IdentityReport check_cd(const AlgebraTable& a) {
    std::size_t n = a.dim();
    IdentityReport rep{Identity::cd, true, {}, {}};
    // t[(p*n + q)*n + r] = (e_p e_q) e_r
    std::vector<Element> t(n * n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                t[(p * n + q) * n + r] = multiply(a, a.product(p, q), basis_element(a, r));
    // u[((p*n + q)*n + r)*n + s] = ((e_p e_q) e_r) e_s
    std::vector<Element> u(n * n * n * n);
    for (std::size_t pqr = 0; pqr < t.size(); ++pqr)
        for (std::size_t s = 0; s < n; ++s) {
            if (is_zero(t[pqr]))
                u[pqr * n + s] = zero_polyvec(a.ring(), n);
            else
                u[pqr * n + s] = multiply(a, t[pqr], basis_element(a, s));
        }
    auto U = [&](std::size_t p, std::size_t q, std::size_t r, std::size_t s) -> const Element& {
        return u[((p * n + q) * n + r) * n + s];
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t av = 0; av < n; ++av)
                for (std::size_t b = 0; b < n; ++b) {
                    Element d = zero_polyvec(a.ring(), n);
                    for (std::size_t k = 0; k < n; ++k) {
                        d[k] += U(x, y, av, b)[k];
                        d[k] += U(x, b, av, y)[k];
                        d[k] += U(y, b, av, x)[k];
                        d[k] -= U(x, y, b, av)[k];
                        d[k] -= U(x, av, b, y)[k];
                        d[k] -= U(y, av, b, x)[k];
                    }
                    if (!is_zero(d)) {
                        rep.holds = false;
                        rep.witness = {x, y, av, b};
                        rep.defect = std::move(d);
                        return rep;
                    }
                }
    return rep;
}

IdentityReport check_jordan(const AlgebraTable& a) {
    std::size_t n = a.dim();
    std::vector<std::string> extra;
    for (std::size_t i = 0; i < n; ++i) extra.push_back("__x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) extra.push_back("__y" + std::to_string(i + 1));
    RingPtr ring = extend_ring(a.ring(), extra);
    AlgebraTable g = a.recast(ring);
    std::size_t base = a.ring()->params.size();
    Element x = zero_polyvec(ring, n), y = zero_polyvec(ring, n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = Poly::var(ring, base + i);
        y[i] = Poly::var(ring, base + n + i);
    }
    Element xx = multiply(g, x, x);
    Element lhs = multiply(g, multiply(g, x, y), xx);
    Element rhs = multiply(g, x, multiply(g, y, xx));
    IdentityReport rep{Identity::jordan, true, {}, {}};
    for (std::size_t k = 0; k < n; ++k) lhs[k] -= rhs[k];
    if (!is_zero(lhs)) {
        rep.holds = false;
        rep.defect = std::move(lhs);
    }
    return rep;
}

}  // namespace

IdentityReport check_identity(const AlgebraTable& a, Identity which) {
    switch (which) {
        case Identity::associative: return check_associative(a);
        case Identity::jordan: return check_jordan(a);
        case Identity::cd: return check_cd(a);
    }
    throw Error("unknown identity");
}

std::vector<Assignment> admissible_samples(const std::vector<std::string>& vars,
                                           const std::vector<Constraint>& constraints, unsigned order,
                                           const Assignment& fixed, std::size_t count) {
    static const long start[3] = {2, 3, 5};
    if (vars.empty()) return {Assignment{}};
    std::vector<Assignment> out;
    for (std::size_t k = 0; k < count; ++k) {
        Assignment cur = fixed;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            long v = start[(k + i) % 3];
            for (int guard = 0;; ++guard) {
                if (guard > 1000) throw Error("no admissible value found for parameter '" + vars[i] + "'");
                cur[vars[i]] = Cyclotomic(order, v);
                bool ok = true;
                for (const auto& c : constraints) {
                    Assignment relevant;
                    for (const auto& name : c.poly.used_params()) {
                        auto it = cur.find(name);
                        if (it != cur.end()) relevant.emplace(it->first, it->second);
                    }
                    if (c.poly.substitute(relevant).is_zero()) {
                        ok = false;
                        break;
                    }
                }
                // the last variable also moves past values that would repeat an earlier sample
                if (ok && i + 1 == vars.size()) {
                    for (const auto& prev : out) {
                        bool same = true;
                        for (const auto& name : vars) same = same && prev.at(name) == cur.at(name);
                        if (same) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) break;
                ++v;
            }
        }
        Assignment sample;
        for (const auto& name : vars) sample.emplace(name, cur.at(name));
        out.push_back(std::move(sample));
    }
    return out;
}

AlgebraTable specialize(const AlgebraTable& a, const std::map<std::string, Cyclotomic>& assignment) {
    std::vector<std::string> remaining;
    for (const auto& p : a.ring()->params)
        if (!assignment.count(p)) remaining.push_back(p);
    for (const auto& [name, v] : assignment)
        if (!a.ring()->index_of(name)) throw RingMismatch("specialization of unknown parameter '" + name + "'");
    RingPtr target = make_ring(remaining, a.ring()->order);
    AlgebraTable r(target, a.dim());
    for (const auto& c : a.constraints()) {
        Poly p = c.poly.substitute(assignment);
        if (p.is_zero())
            throw InadmissibleSpecialization(c.label, "specialization violates constraint " + c.label);
        if (!p.is_constant()) r.add_constraint(Constraint(p.recast(target), c.label));
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j) {
            Element v = a.product(i, j);
            for (auto& p : v) p = p.substitute(assignment).recast(target);
            r.set_product(i, j, std::move(v));
        }
    return r;
}

AlgebraTable change_basis(const AlgebraTable& a, const CMatrix& p) {
    std::size_t n = a.dim();
    if (p.size() != n) throw DimensionMismatch("basis change matrix has wrong size");
    unsigned order = a.ring()->order;
    CMatrix pinv = inverse(p, order);
    std::vector<Element> f(n);
    for (std::size_t j = 0; j < n; ++j) {
        f[j] = zero_polyvec(a.ring(), n);
        for (std::size_t i = 0; i < n; ++i) f[j][i] = Poly(a.ring(), p[i][j]);
    }
    AlgebraTable r(a.ring(), n);
    for (const auto& c : a.constraints()) r.add_constraint(c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Element prod = multiply(a, f[i], f[j]);
            Element out = zero_polyvec(a.ring(), n);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (pinv[k][l].is_zero() || prod[l].is_zero()) continue;
                    Poly t = prod[l];
                    t *= pinv[k][l];
                    out[k] += t;
                }
            r.set_product(i, j, std::move(out));
        }
    return r;
}

}  // namespace nilcomm
