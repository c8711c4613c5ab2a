#pragma once

#include "nilcomm/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilcomm {

// Position of Delta_ij in the lexicographic enumeration of pairs i <= j.
struct DeltaIndex {
    std::size_t i;
    std::size_t j;
    std::size_t pos;
};

std::vector<DeltaIndex> delta_basis(std::size_t n);
// "D12" style label, 1-based.
std::string delta_name(std::size_t i, std::size_t j);

// Symmetric bilinear form A x A -> K^s, one Delta-coordinate vector per target coordinate.
class SymCocycle {
public:
    SymCocycle(RingPtr ring, std::size_t n, std::size_t s);
    static SymCocycle delta(RingPtr ring, std::size_t n, std::size_t i, std::size_t j);
    static SymCocycle from_coords(RingPtr ring, std::size_t n, std::vector<PolyVec> coords);
    // Stacks s = 1 cocycles into one with s = thetas.size().
    static SymCocycle stack(const std::vector<SymCocycle>& thetas);

    const RingPtr& ring() const { return ring_; }
    std::size_t n() const { return n_; }
    std::size_t s() const { return coords_.size(); }
    const PolyVec& coords(std::size_t t) const { return coords_.at(t); }
    PolyVec& coords(std::size_t t) { return coords_.at(t); }
    const Poly& value(std::size_t t, std::size_t i, std::size_t j) const;
    SymCocycle component(std::size_t t) const;

    bool is_constant() const;
    std::vector<Vec> constant_coords() const;
    SymCocycle recast(const RingPtr& target) const;
    SymCocycle substitute(const std::map<std::string, Cyclotomic>& assignment) const;
    // Gram matrix of coordinate t.
    Matrix gram(std::size_t t) const;

    SymCocycle& operator+=(const SymCocycle& o);
    SymCocycle& operator-=(const SymCocycle& o);
    SymCocycle& operator*=(const Poly& c);

    // "D13 + 3 D22" per coordinate, coordinates joined by "; ".
    std::string to_string() const;

    friend bool operator==(const SymCocycle& a, const SymCocycle& b) {
        return a.n_ == b.n_ && a.coords_ == b.coords_;
    }

private:
    RingPtr ring_;
    std::size_t n_;
    std::vector<PolyVec> coords_;
};

inline SymCocycle operator+(SymCocycle a, const SymCocycle& b) { return a += b; }
inline SymCocycle operator-(SymCocycle a, const SymCocycle& b) { return a -= b; }

// Cocycle-literal text for one Delta-coordinate vector, e.g. "D13 - alpha D22".
std::string cocycle_to_string(const PolyVec& coords, std::size_t n);

Subspace coboundary_space(const AlgebraTable& a);
Subspace cd_cocycle_space(const AlgebraTable& a);

struct CohomologySpaces {
    std::size_t ambient = 0;
    Subspace b2;
    Subspace z2d;
    std::size_t h2c = 0;
    // dim Z2_D - dim B2; only defined when B2 lies in Z2_D (a CD base algebra).
    std::optional<std::size_t> h2d;
};

CohomologySpaces cohomology(const AlgebraTable& a);

struct H2Dims {
    std::size_t h2c;
    std::optional<std::size_t> h2d;
};
H2Dims h2_dims(const AlgebraTable& a);

// Per-coordinate reduction modulo B2 (zero iff the coordinate is a coboundary).
std::vector<Vec> class_coords(const AlgebraTable& a, const SymCocycle& theta);
std::vector<Vec> class_coords(const Subspace& b2, const SymCocycle& theta);

Subspace ann_of_cocycle(const AlgebraTable& a, const SymCocycle& theta);

struct TsResult {
    bool ok = false;
    std::vector<std::string> reasons;
};

// thetas: s cocycles with one coordinate each.
TsResult ts_check(const AlgebraTable& a, const std::vector<SymCocycle>& thetas, std::size_t s);

bool is_cd_class(const AlgebraTable& a, const SymCocycle& theta);
bool is_cd_class(const Subspace& z2d, const SymCocycle& theta);

}  // namespace nilcomm
