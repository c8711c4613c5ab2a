#include "nilcomm/extension.hpp"

#include "nilcomm/errors.hpp"

namespace nilcomm {

AlgebraTable central_extend(const AlgebraTable& a, const SymCocycle& theta) {
    std::size_t n = a.dim();
    if (theta.n() != n) throw DimensionMismatch("cocycle dimension differs from algebra dimension");
    if (theta.s() == 0) throw DimensionMismatch("extension needs at least one cocycle coordinate");
    RingPtr ring = a.ring();
    SymCocycle th = theta.recast(ring);
    std::size_t s = th.s();
    AlgebraTable r(ring, n + s);
    for (const auto& c : a.constraints()) r.add_constraint(c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Element v = a.product(i, j);
            for (std::size_t t = 0; t < s; ++t) v.push_back(th.value(t, i, j));
            r.set_product(i, j, std::move(v));
        }
    return r;
}

AlgebraTable central_extend(const AlgebraTable& a, const std::vector<SymCocycle>& thetas) {
    return central_extend(a, SymCocycle::stack(thetas));
}

AnnihilatorSplit split_annihilator(const AlgebraTable& a) {
    std::size_t n = a.dim();
    unsigned order = a.ring()->order;
    Subspace ann = annihilator(a);
    std::size_t m = ann.dim();
    if (m == 0) throw NoAnnihilator("annihilator is zero; nothing to split");
    const auto& rows = ann.basis();
    const auto& piv = ann.pivots();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : piv) is_pivot[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t q = 0; q < n; ++q)
        if (!is_pivot[q]) comp.push_back(q);
    std::size_t d = comp.size();

    auto prods = a.constant_products();
    RingPtr ring = a.ring();
    AlgebraTable quot(ring, d);
    SymCocycle theta(ring, d, m);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = x; y < d; ++y) {
            const Vec& v = prods[pair_index(comp[x], comp[y], n)];
            Element w = zero_polyvec(ring, d);
            for (std::size_t t = 0; t < m; ++t) {
                const Cyclotomic& at = v[piv[t]];
                theta.coords(t)[pair_index(x, y, d)] = Poly(ring, at);
            }
            for (std::size_t q = 0; q < d; ++q) {
                Cyclotomic c = v[comp[q]];
                for (std::size_t t = 0; t < m; ++t) {
                    const Cyclotomic& at = v[piv[t]];
                    if (!at.is_zero() && !rows[t][comp[q]].is_zero()) c -= at * rows[t][comp[q]];
                }
                w[q] = Poly(ring, c);
            }
            quot.set_product(x, y, std::move(w));
        }

    CMatrix change(n, zero_vec(n, order));
    for (std::size_t q = 0; q < d; ++q) change[comp[q]][q] = Cyclotomic(order, 1);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < n; ++i) change[i][d + t] = rows[t][i];
    return {std::move(quot), std::move(theta), std::move(change)};
}

}  // namespace nilcomm
