#include "nilcomm/autaction.hpp"

#include "nilcomm/errors.hpp"

namespace nilcomm {

std::string AutCheck::describe() const {
    if (ok) return "automorphism";
    if (singular) return "determinant is the zero polynomial";
    std::string s = "homomorphism identity fails";
    if (witness)
        s += " at (e" + std::to_string(witness->first + 1) + ",e" + std::to_string(witness->second + 1) + ")";
    return s + ", defect " + element_to_string(defect);
}

AutCheck is_automorphism(const AlgebraTable& a, const Matrix& phi) {
    std::size_t n = a.dim();
    if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("automorphism matrix has wrong size");
    RingPtr ring = unite_rings(phi.ring(), a.ring());
    AlgebraTable t = a.recast(ring);
    Matrix m = phi.recast(ring);
    std::vector<Element> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = m.column(j);
    AutCheck r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Element lhs = multiply(t, img[i], img[j]);
            const Element& c = t.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (c[k].is_zero()) continue;
                for (std::size_t l = 0; l < n; ++l)
                    if (!img[k][l].is_zero()) lhs[l] -= c[k] * img[k][l];
            }
            if (!is_zero(lhs)) {
                r.ok = false;
                r.witness = std::make_pair(i, j);
                r.defect = std::move(lhs);
                return r;
            }
        }
    if (determinant(m).is_zero()) {
        r.ok = false;
        r.singular = true;
    }
    return r;
}

AutMap AutMap::verify(const AlgebraTable& a, Matrix phi) {
    AutCheck c = is_automorphism(a, phi);
    if (!c.ok) throw UnverifiedAutomorphism("not an automorphism: " + c.describe());
    return AutMap(std::move(phi), true);
}

AutMap AutMap::unverified(Matrix phi) { return AutMap(std::move(phi), false); }

SymCocycle pullback(const Matrix& phi, const SymCocycle& theta) {
    std::size_t n = theta.n();
    if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("automorphism size differs from cocycle dimension");
    RingPtr ring = unite_rings(phi.ring(), theta.ring());
    Matrix m = phi.recast(ring);
    Matrix mt = m.transpose();
    SymCocycle th = theta.recast(ring);
    SymCocycle out(ring, n, th.s());
    for (std::size_t t = 0; t < th.s(); ++t) {
        Matrix g = mt * th.gram(t) * m;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) out.coords(t)[pair_index(i, j, n)] = g(i, j);
    }
    return out;
}

SymCocycle act_on_cocycle(const AlgebraTable& a, const AutMap& phi, const SymCocycle& theta) {
    if (!phi.verified()) throw UnverifiedAutomorphism("act_on_cocycle needs a verified automorphism");
    if (theta.n() != a.dim()) throw DimensionMismatch("cocycle dimension differs from algebra dimension");
    return pullback(phi.matrix(), theta);
}

namespace {

Subspace b2_in_order(const AlgebraTable& a, unsigned order) {
    if (a.ring()->order == order) return coboundary_space(a);
    return coboundary_space(a.recast(with_order(a.ring(), lcm_order(order, a.ring()->order))));
}

}  // namespace

bool classes_equal_under(const AlgebraTable& a, const AutMap& phi, const SymCocycle& theta1, const SymCocycle& theta2) {
    if (!a.is_constant()) throw RequiresSpecialization("classes_equal_under base algebra");
    SymCocycle img = act_on_cocycle(a, phi, theta1);
    RingPtr ring = unite_rings(img.ring(), theta2.ring());
    SymCocycle diff = img.recast(ring) - theta2.recast(ring);
    Subspace b2 = b2_in_order(a, ring->order);
    for (std::size_t t = 0; t < diff.s(); ++t)
        if (!is_zero(b2.reduce(diff.coords(t)))) return false;
    return true;
}

bool spans_equal_under(const AlgebraTable& a, const AutMap& phi, const std::vector<SymCocycle>& from,
                       const std::vector<SymCocycle>& to) {
    if (!phi.verified()) throw UnverifiedAutomorphism("spans_equal_under needs a verified automorphism");
    if (!a.is_constant() || !phi.matrix().is_constant()) throw RequiresSpecialization("spans_equal_under");
    unsigned order = lcm_order(a.ring()->order, phi.matrix().ring()->order);
    Subspace b2 = b2_in_order(a, order);
    Subspace lhs = b2, rhs = b2;
    RingPtr ring = make_ring({}, order);
    for (const auto& th : from)
        for (const auto& v : pullback(phi.matrix(), th).recast(unite_rings(ring, th.ring())).constant_coords())
            lhs.insert(v);
    for (const auto& th : to)
        for (const auto& v : th.recast(unite_rings(ring, th.ring())).constant_coords()) rhs.insert(v);
    return lhs == rhs;
}

Subspace act_on_subspace(const Matrix& phi, const Subspace& cocycles, std::size_t n) {
    RingPtr ring = make_ring({}, lcm_order(cocycles.order(), phi.ring()->order));
    Subspace out(cocycles.ambient(), ring->order);
    for (const auto& v : cocycles.basis()) {
        Vec w;
        for (const auto& c : v) w.push_back(c.embed(ring->order));
        SymCocycle th = SymCocycle::from_coords(ring, n, {to_polyvec(ring, w)});
        SymCocycle img = pullback(phi, th);
        out.insert(to_constant(img.coords(0)));
    }
    return out;
}

std::string status_name(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::verified: return "verified";
        case WitnessStatus::failed: return "failed";
        case WitnessStatus::unverifiable: return "unverifiable";
    }
    return "?";
}

namespace {

std::vector<SymCocycle> to_cocycles(const RingPtr& ring, std::size_t n, const std::vector<PolyVec>& list,
                                    const Assignment& at) {
    std::vector<SymCocycle> out;
    for (const auto& v : list) out.push_back(SymCocycle::from_coords(ring, n, {v}).substitute(at));
    return out;
}

std::string assignment_text(const Assignment& a) {
    std::string s;
    for (const auto& [k, v] : a) {
        if (!s.empty()) s += ", ";
        s += k + "=" + v.to_string();
    }
    return s;
}

// Base algebra already parameter-free.
WitnessReport check_on_constant_base(const AlgebraTable& a, const WitnessAnnotation& w, const Assignment& at) {
    std::size_t n = a.dim();
    Matrix m = w.matrix->substitute(at);
    AutCheck c = is_automorphism(a, m);
    if (!c.ok) return {WitnessStatus::failed, "matrix is not an automorphism: " + c.describe()};
    AutMap phi = AutMap::verify(a, m);
    auto from = to_cocycles(w.ring, n, w.from, at);
    auto to = to_cocycles(w.ring, n, w.to, at);
    if (!w.span) {
        for (std::size_t k = 0; k < from.size(); ++k)
            if (!classes_equal_under(a, phi, from[k], to[k]))
                return {WitnessStatus::failed, "class " + std::to_string(k + 1) + " is not mapped to its target"};
        return {WitnessStatus::verified, "classes match identically in the free variables"};
    }
    std::vector<std::string> vars;
    for (const auto& d : w.vars) vars.push_back(d.name);
    auto samples = admissible_samples(vars, decl_constraints(w.vars), w.ring->order, at);
    for (const auto& s : samples) {
        Matrix ms = m.substitute(s);
        AutMap ps = AutMap::verify(a, ms);
        std::vector<SymCocycle> fs, ts;
        for (const auto& th : from) fs.push_back(th.substitute(s));
        for (const auto& th : to) ts.push_back(th.substitute(s));
        if (!spans_equal_under(a, ps, fs, ts))
            return {WitnessStatus::failed, "spans differ at " + assignment_text(s)};
    }
    return {WitnessStatus::verified, vars.empty() ? "spans match" : "spans match at " + std::to_string(samples.size()) + " samples"};
}

}  // namespace

WitnessReport verify_witness(const Presentation& entry, const WitnessAnnotation& w) {
    if (w.unverifiable) return {WitnessStatus::unverifiable, *w.unverifiable};
    if (!w.matrix) return {WitnessStatus::failed, "witness has no matrix"};
    AlgebraTable a = entry.table();
    auto samples = admissible_samples(entry.param_names(), entry.constraints(), entry.ring->order);
    std::string detail;
    for (const auto& s : samples) {
        AlgebraTable as = specialize(a, s);
        WitnessReport r = check_on_constant_base(as, w, s);
        if (r.status != WitnessStatus::verified) {
            if (!s.empty()) r.detail += " (base at " + assignment_text(s) + ")";
            return r;
        }
        detail = r.detail;
    }
    if (!entry.params.empty()) detail += "; base checked at " + std::to_string(samples.size()) + " samples";
    return {WitnessStatus::verified, detail};
}

}  // namespace nilcomm
