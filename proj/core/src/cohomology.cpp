#include "nilcomm/cohomology.hpp"

#include "nilcomm/errors.hpp"

namespace nilcomm {

std::vector<DeltaIndex> delta_basis(std::size_t n) {
    std::vector<DeltaIndex> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) out.push_back({i, j, out.size()});
    return out;
}

std::string delta_name(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return "D" + std::to_string(i + 1) + std::to_string(j + 1);
}

SymCocycle::SymCocycle(RingPtr ring, std::size_t n, std::size_t s)
    : ring_(std::move(ring)), n_(n), coords_(s, zero_polyvec(ring_, sym_dim(n))) {}

SymCocycle SymCocycle::delta(RingPtr ring, std::size_t n, std::size_t i, std::size_t j) {
    SymCocycle c(ring, n, 1);
    c.coords_[0].at(pair_index(i, j, n)) = Poly(ring, 1);
    return c;
}

SymCocycle SymCocycle::from_coords(RingPtr ring, std::size_t n, std::vector<PolyVec> coords) {
    SymCocycle c(ring, n, 0);
    for (auto& v : coords) {
        if (v.size() != sym_dim(n)) throw DimensionMismatch("cocycle coordinate vector has wrong length");
        for (auto& p : v) p = p.recast(ring);
    }
    c.coords_ = std::move(coords);
    return c;
}

SymCocycle SymCocycle::stack(const std::vector<SymCocycle>& thetas) {
    if (thetas.empty()) throw Error("cannot stack an empty cocycle list");
    SymCocycle c(thetas[0].ring_, thetas[0].n_, 0);
    for (const auto& t : thetas) {
        if (t.n_ != c.n_) throw DimensionMismatch("cocycles over different dimensions");
        for (const auto& v : t.coords_) {
            PolyVec w;
            for (const auto& p : v) w.push_back(p.recast(c.ring_));
            c.coords_.push_back(std::move(w));
        }
    }
    return c;
}

const Poly& SymCocycle::value(std::size_t t, std::size_t i, std::size_t j) const {
    return coords_.at(t).at(pair_index(i, j, n_));
}

SymCocycle SymCocycle::component(std::size_t t) const { return from_coords(ring_, n_, {coords_.at(t)}); }

bool SymCocycle::is_constant() const {
    for (const auto& v : coords_)
        for (const auto& p : v)
            if (!p.is_constant()) return false;
    return true;
}

std::vector<Vec> SymCocycle::constant_coords() const {
    std::vector<Vec> out;
    for (const auto& v : coords_) out.push_back(to_constant(v));
    return out;
}

SymCocycle SymCocycle::recast(const RingPtr& target) const {
    SymCocycle c(target, n_, 0);
    for (const auto& v : coords_) {
        PolyVec w;
        for (const auto& p : v) w.push_back(p.recast(target));
        c.coords_.push_back(std::move(w));
    }
    return c;
}

SymCocycle SymCocycle::substitute(const std::map<std::string, Cyclotomic>& assignment) const {
    SymCocycle c(*this);
    for (auto& v : c.coords_)
        for (auto& p : v) p = p.substitute(assignment);
    return c;
}

Matrix SymCocycle::gram(std::size_t t) const {
    Matrix g(ring_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) g(i, j) = value(t, i, j);
    return g;
}

SymCocycle& SymCocycle::operator+=(const SymCocycle& o) {
    if (o.n_ != n_ || o.s() != s()) throw DimensionMismatch("cocycle shapes differ");
    for (std::size_t t = 0; t < s(); ++t)
        for (std::size_t k = 0; k < coords_[t].size(); ++k) coords_[t][k] += o.coords_[t][k];
    return *this;
}

SymCocycle& SymCocycle::operator-=(const SymCocycle& o) {
    if (o.n_ != n_ || o.s() != s()) throw DimensionMismatch("cocycle shapes differ");
    for (std::size_t t = 0; t < s(); ++t)
        for (std::size_t k = 0; k < coords_[t].size(); ++k) coords_[t][k] -= o.coords_[t][k];
    return *this;
}

SymCocycle& SymCocycle::operator*=(const Poly& c) {
    for (auto& v : coords_)
        for (auto& p : v) p *= c;
    return *this;
}

std::string cocycle_to_string(const PolyVec& coords, std::size_t n) {
    std::string out;
    for (const auto& d : delta_basis(n)) {
        const Poly& p = coords.at(d.pos);
        if (p.is_zero()) continue;
        std::string c = p.to_string();
        std::string label = delta_name(d.i, d.j);
        bool single = p.terms().size() == 1;
        bool neg = single && c[0] == '-';
        if (neg) c = c.substr(1);
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        if (c == "1")
            out += label;
        else if (single)
            out += c + " " + label;
        else
            out += "(" + c + ") " + label;
    }
    return out.empty() ? "0" : out;
}

std::string SymCocycle::to_string() const {
    std::string out;
    for (std::size_t t = 0; t < coords_.size(); ++t) {
        if (t) out += "; ";
        out += cocycle_to_string(coords_[t], n_);
    }
    return out;
}

Subspace coboundary_space(const AlgebraTable& a) {
    std::size_t n = a.dim();
    auto prods = a.constant_products();
    unsigned order = a.ring()->order;
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < n; ++k) {
        Vec v = zero_vec(sym_dim(n), order);
        for (std::size_t p = 0; p < prods.size(); ++p) v[p] = prods[p][k];
        gens.push_back(std::move(v));
    }
    return Subspace::span(sym_dim(n), order, gens);
}

Subspace cd_cocycle_space(const AlgebraTable& a) {
    std::size_t n = a.dim();
    std::size_t N = sym_dim(n);
    unsigned order = a.ring()->order;
    auto prods = a.constant_products();
    // t[(p*n + q)*n + r] = (e_p e_q) e_r
    std::vector<Vec> t(n * n * n, zero_vec(n, order));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Vec& pq = prods[pair_index(p, q, n)];
            for (std::size_t r = 0; r < n; ++r) {
                Vec& out = t[(p * n + q) * n + r];
                for (std::size_t k = 0; k < n; ++k) {
                    if (pq[k].is_zero()) continue;
                    const Vec& kr = prods[pair_index(k, r, n)];
                    for (std::size_t l = 0; l < n; ++l)
                        if (!kr[l].is_zero()) out[l] += pq[k] * kr[l];
                }
            }
        }
    auto T = [&](std::size_t p, std::size_t q, std::size_t r) -> const Vec& { return t[(p * n + q) * n + r]; };
    // theta(v, e_s) = sum_k v_k c(k, s)
    auto add = [&](Vec& row, const Vec& v, std::size_t s, bool neg) {
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k].is_zero()) continue;
            if (neg)
                row[pair_index(k, s, n)] -= v[k];
            else
                row[pair_index(k, s, n)] += v[k];
        }
    };
    Subspace eqs(N, order);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t av = 0; av < n; ++av)
                for (std::size_t b = 0; b < n; ++b) {
                    if (eqs.dim() == N) break;
                    Vec row = zero_vec(N, order);
                    add(row, T(x, y, av), b, false);
                    add(row, T(x, b, av), y, false);
                    add(row, T(y, b, av), x, false);
                    add(row, T(x, y, b), av, true);
                    add(row, T(x, av, b), y, true);
                    add(row, T(y, av, b), x, true);
                    if (!is_zero(row)) eqs.insert(std::move(row));
                }
    return kernel(eqs.basis(), N, order);
}

CohomologySpaces cohomology(const AlgebraTable& a) {
    CohomologySpaces cs{sym_dim(a.dim()), coboundary_space(a), cd_cocycle_space(a), 0, std::nullopt};
    cs.h2c = cs.ambient - cs.b2.dim();
    if (cs.z2d.contains(cs.b2)) cs.h2d = cs.z2d.dim() - cs.b2.dim();
    return cs;
}

H2Dims h2_dims(const AlgebraTable& a) {
    auto cs = cohomology(a);
    return {cs.h2c, cs.h2d};
}

std::vector<Vec> class_coords(const Subspace& b2, const SymCocycle& theta) {
    std::vector<Vec> out;
    for (const auto& v : theta.constant_coords()) out.push_back(quotient_coords(b2, v));
    return out;
}

std::vector<Vec> class_coords(const AlgebraTable& a, const SymCocycle& theta) {
    return class_coords(coboundary_space(a), theta);
}

Subspace ann_of_cocycle(const AlgebraTable& a, const SymCocycle& theta) {
    std::size_t n = a.dim();
    if (theta.n() != n) throw DimensionMismatch("cocycle dimension differs from algebra dimension");
    unsigned order = a.ring()->order;
    std::vector<Vec> rows;
    for (std::size_t t = 0; t < theta.s(); ++t) {
        Vec c = to_constant(theta.coords(t));
        for (std::size_t j = 0; j < n; ++j) {
            Vec row = zero_vec(n, order);
            for (std::size_t i = 0; i < n; ++i) row[i] = c[pair_index(i, j, n)];
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
    return kernel(rows, n, order);
}

TsResult ts_check(const AlgebraTable& a, const std::vector<SymCocycle>& thetas, std::size_t s) {
    TsResult r;
    if (s == 0 || thetas.empty()) {
        r.reasons.push_back("empty cocycle list");
        return r;
    }
    if (thetas.size() != s) {
        r.reasons.push_back("expected " + std::to_string(s) + " cocycles, got " + std::to_string(thetas.size()));
        return r;
    }
    Subspace b2 = coboundary_space(a);
    Subspace span = b2;
    bool independent = true;
    for (const auto& th : thetas) {
        if (th.s() != 1) throw DimensionMismatch("ts_check expects one-coordinate cocycles");
        if (!span.insert(to_constant(th.coords(0)))) independent = false;
    }
    if (!independent) r.reasons.push_back("classes are linearly dependent modulo B2");
    Subspace inter = annihilator(a);
    for (const auto& th : thetas) inter = inter.intersect(ann_of_cocycle(a, th));
    if (inter.dim() != 0)
        r.reasons.push_back("cocycle annihilators meet Ann(A) in dimension " + std::to_string(inter.dim()));
    r.ok = r.reasons.empty();
    return r;
}

bool is_cd_class(const Subspace& z2d, const SymCocycle& theta) {
    for (const auto& v : theta.constant_coords())
        if (!z2d.contains(v)) return false;
    return true;
}

bool is_cd_class(const AlgebraTable& a, const SymCocycle& theta) { return is_cd_class(cd_cocycle_space(a), theta); }

}  // namespace nilcomm
