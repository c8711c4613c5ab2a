#pragma once

#include "nilcomm/poly.hpp"

#include <cstddef>
#include <vector>

namespace nilcomm {

using Vec = std::vector<Cyclotomic>;
using CMatrix = std::vector<Vec>;
using PolyVec = std::vector<Poly>;

Vec zero_vec(std::size_t n, unsigned order);
bool is_zero(const Vec& v);
bool is_zero(const PolyVec& v);
PolyVec zero_polyvec(const RingPtr& ring, std::size_t n);
PolyVec to_polyvec(const RingPtr& ring, const Vec& v);
// Throws RequiresSpecialization if an entry is not constant.
Vec to_constant(const PolyVec& v);

// Dense matrix of polynomials.
class Matrix {
public:
    Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
    static Matrix identity(RingPtr ring, std::size_t n);
    static Matrix from_constant(RingPtr ring, const CMatrix& m);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    PolyVec column(std::size_t j) const;

    bool is_constant() const;
    // Throws RequiresSpecialization on parametric entries.
    CMatrix to_constant() const;
    Matrix transpose() const;
    Matrix substitute(const std::map<std::string, Cyclotomic>& assignment) const;
    Matrix recast(const RingPtr& target) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Poly> data_;
};

// Laplace expansion; intended for the small sizes used here.
Poly determinant(const Matrix& m);

// Canonical subspace of K^n stored as the nonzero rows of its RREF.
class Subspace {
public:
    Subspace(std::size_t ambient, unsigned order);
    static Subspace span(std::size_t ambient, unsigned order, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient, unsigned order);

    std::size_t ambient() const { return ambient_; }
    unsigned order() const { return order_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Adds v to the span; returns false if v was already contained.
    bool insert(Vec v);
    // Reduction of v by the basis; zero iff v lies in the subspace. Pivot coordinates vanish.
    Vec reduce(Vec v) const;
    // Same reduction for polynomial vectors against this constant basis.
    PolyVec reduce(PolyVec v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    // Annihilator in the dual: {w : <u,w> = 0 for all u}.
    Subspace orthogonal() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.order_ == b.order_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    void check_ambient(const Subspace& o) const;

    std::size_t ambient_;
    unsigned order_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

struct RrefResult {
    CMatrix matrix;
    std::size_t rank;
};

RrefResult rref(const CMatrix& m, std::size_t cols, unsigned order);
// Throws RequiresSpecialization on parametric entries.
RrefResult rref(const Matrix& m);
Subspace kernel(const CMatrix& m, std::size_t cols, unsigned order);
Subspace kernel(const Matrix& m);
// Reduction of v modulo `sub` in the canonical complement.
Vec quotient_coords(const Subspace& sub, const Vec& v);
// Throws Error if the matrix is singular.
CMatrix inverse(const CMatrix& m, unsigned order);
Vec mat_vec(const CMatrix& m, const Vec& v, unsigned order);

}  // namespace nilcomm
