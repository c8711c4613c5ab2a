#pragma once

#include "nilcomm/algebra.hpp"
#include "nilcomm/catalog.hpp"
#include "nilcomm/cohomology.hpp"
#include "nilcomm/errors.hpp"
#include "nilcomm/tabledsl.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace nilcomm::test {

inline const std::vector<std::string>& catalog_files() {
    static const std::vector<std::string> files = {
        std::string(NILCOMM_CATALOG_DIR) + "/dim3.nca",
        std::string(NILCOMM_CATALOG_DIR) + "/dim4.nca",
        std::string(NILCOMM_CATALOG_DIR) + "/dim5.nca",
    };
    return files;
}

inline std::string data_file(const std::string& name) { return std::string(NILCOMM_TEST_DATA_DIR) + "/" + name; }

// Every shipped entry, loaded once.
inline const std::vector<Presentation>& all_entries() {
    static const std::vector<Presentation> entries = [] {
        std::vector<Presentation> out;
        for (const auto& f : catalog_files()) {
            auto part = load_catalog(f);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }();
    return entries;
}

inline const Presentation& entry(const std::string& name) {
    for (const auto& p : all_entries())
        if (p.name == name) return p;
    throw Error("no catalog entry " + name);
}

inline std::vector<Assignment> samples_of(const Presentation& p) {
    return admissible_samples(p.param_names(), p.constraints(), p.ring->order);
}

struct Sampled {
    std::string label;
    AlgebraTable table;
};

// Parameter-free tables of an entry, one per admissible sample.
inline std::vector<Sampled> sampled_tables(const Presentation& p) {
    std::vector<Sampled> out;
    AlgebraTable t = p.table();
    for (const auto& s : samples_of(p)) {
        std::string label = p.name;
        if (!s.empty()) label += " at " + assignment_to_text(s);
        out.push_back({label, specialize(t, s)});
    }
    return out;
}

inline AlgebraTable table_of(const std::string& dsl) { return parse(dsl).table(); }

inline Vec vec(std::initializer_list<long> xs, unsigned order = 1) {
    Vec v;
    for (long x : xs) v.emplace_back(order, x);
    return v;
}

inline CMatrix cmat(std::initializer_list<std::initializer_list<long>> rows, unsigned order = 1) {
    CMatrix m;
    for (const auto& r : rows) m.push_back(vec(r, order));
    return m;
}

inline Rational small_rational(std::mt19937& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Vec random_vec(std::mt19937& rng, std::size_t n, unsigned order = 1, int range = 5) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(order, small_rational(rng, range));
    return v;
}

inline SymCocycle random_cocycle(std::mt19937& rng, const RingPtr& ring, std::size_t n, int range = 3) {
    PolyVec c;
    for (std::size_t k = 0; k < sym_dim(n); ++k) c.emplace_back(ring, small_rational(rng, range));
    return SymCocycle::from_coords(ring, n, {c});
}

inline SymCocycle cocycle_from(const RingPtr& ring, std::size_t n, const Vec& coords) {
    return SymCocycle::from_coords(ring, n, {to_polyvec(ring, coords)});
}

inline Element random_element(std::mt19937& rng, const AlgebraTable& a) {
    return to_polyvec(a.ring(), random_vec(rng, a.dim(), a.ring()->order));
}

}  // namespace nilcomm::test
