#include "nilcomm/linalg.hpp"

#include "nilcomm/errors.hpp"

#include <algorithm>

namespace nilcomm {

Vec zero_vec(std::size_t n, unsigned order) { return Vec(n, Cyclotomic(order)); }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool is_zero(const PolyVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyVec zero_polyvec(const RingPtr& ring, std::size_t n) { return PolyVec(n, Poly(ring)); }

PolyVec to_polyvec(const RingPtr& ring, const Vec& v) {
    PolyVec out;
    out.reserve(v.size());
    for (const auto& c : v) out.emplace_back(ring, c);
    return out;
}

Vec to_constant(const PolyVec& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.constant());
    return out;
}

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring_)) {}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(ring, 1);
    return m;
}

Matrix Matrix::from_constant(RingPtr ring, const CMatrix& c) {
    std::size_t cols = c.empty() ? 0 : c[0].size();
    Matrix m(ring, c.size(), cols);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Poly(ring, c[i][j]);
    return m;
}

PolyVec Matrix::column(std::size_t j) const {
    PolyVec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

bool Matrix::is_constant() const {
    return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_constant(); });
}

CMatrix Matrix::to_constant() const {
    if (!is_constant()) throw RequiresSpecialization("matrix");
    CMatrix out(rows_, Vec(cols_, Cyclotomic(ring_->order)));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).constant();
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::substitute(const std::map<std::string, Cyclotomic>& assignment) const {
    Matrix r(*this);
    for (auto& p : r.data_) p = p.substitute(assignment);
    return r;
}

Matrix Matrix::recast(const RingPtr& target) const {
    Matrix r(target, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].recast(target);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix r(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

Poly det_rec(const Matrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    std::size_t n = m.rows();
    if (row == n) return Poly(m.ring(), 1);
    Poly acc(m.ring());
    long sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::size_t c = cols[k];
        const Poly& e = m(row, c);
        if (!e.is_zero()) {
            cols.erase(cols.begin() + static_cast<long>(k));
            Poly minor = det_rec(m, cols, row + 1);
            cols.insert(cols.begin() + static_cast<long>(k), c);
            if (sign > 0)
                acc += e * minor;
            else
                acc -= e * minor;
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace

Poly determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return det_rec(m, cols, 0);
}

Subspace::Subspace(std::size_t ambient, unsigned order) : ambient_(ambient), order_(order) {}

Subspace Subspace::span(std::size_t ambient, unsigned order, const std::vector<Vec>& vectors) {
    Subspace s(ambient, order);
    for (const auto& v : vectors) {
        if (s.dim() == ambient) break;
        s.insert(v);
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient, unsigned order) {
    Subspace s(ambient, order);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v = zero_vec(ambient, order);
        v[i] = Cyclotomic(order, 1);
        s.rows_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

bool Subspace::insert(Vec v) {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ambient_ && v[p].is_zero()) ++p;
    if (p == ambient_) return false;
    Cyclotomic inv = v[p].inverse();
    for (std::size_t j = p; j < ambient_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    for (auto& row : rows_) {
        if (row[p].is_zero()) continue;
        Cyclotomic f = row[p];
        for (std::size_t j = p; j < ambient_; ++j)
            if (!v[j].is_zero()) row[j] -= f * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = pivots_[r];
        if (v[p].is_zero()) continue;
        Cyclotomic f = v[p];
        const Vec& row = rows_[r];
        for (std::size_t j = p; j < ambient_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

PolyVec Subspace::reduce(PolyVec v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = pivots_[r];
        if (v[p].is_zero()) continue;
        Poly f = v[p];
        const Vec& row = rows_[r];
        for (std::size_t j = p; j < ambient_; ++j) {
            if (row[j].is_zero()) continue;
            Poly t = f;
            t *= row[j];
            v[j] -= t;
        }
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    check_ambient(o);
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec& v) { return contains(v); });
}

void Subspace::check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("subspaces of different ambient dimension");
    if (order_ != o.order_) throw RingMismatch("subspaces over different cyclotomic orders");
}

Subspace Subspace::sum(const Subspace& o) const {
    check_ambient(o);
    Subspace s(*this);
    for (const auto& v : o.rows_) s.insert(v);
    return s;
}

Subspace Subspace::orthogonal() const {
    return kernel(rows_, ambient_, order_);
}

Subspace Subspace::intersect(const Subspace& o) const {
    check_ambient(o);
    CMatrix eqs = orthogonal().basis();
    Subspace other = o.orthogonal();
    for (const auto& v : other.basis()) eqs.push_back(v);
    return kernel(eqs, ambient_, order_);
}

RrefResult rref(const CMatrix& m, std::size_t cols, unsigned order) {
    Subspace s = Subspace::span(cols, order, m);
    RrefResult r{s.basis(), s.dim()};
    while (r.matrix.size() < m.size()) r.matrix.push_back(zero_vec(cols, order));
    return r;
}

RrefResult rref(const Matrix& m) { return rref(m.to_constant(), m.cols(), m.ring()->order); }

Subspace kernel(const CMatrix& m, std::size_t cols, unsigned order) {
    Subspace rs = Subspace::span(cols, order, m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : rs.pivots()) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(cols, order);
        v[f] = Cyclotomic(order, 1);
        for (std::size_t r = 0; r < rs.dim(); ++r) v[rs.pivots()[r]] = -rs.basis()[r][f];
        gens.push_back(std::move(v));
    }
    return Subspace::span(cols, order, gens);
}

Subspace kernel(const Matrix& m) { return kernel(m.to_constant(), m.cols(), m.ring()->order); }

Vec quotient_coords(const Subspace& sub, const Vec& v) { return sub.reduce(v); }

CMatrix inverse(const CMatrix& m, unsigned order) {
    std::size_t n = m.size();
    CMatrix a = m;
    for (auto& row : a) {
        if (row.size() != n) throw DimensionMismatch("inverse of a non-square matrix");
        row.resize(2 * n, Cyclotomic(order));
    }
    for (std::size_t i = 0; i < n; ++i) a[i][n + i] = Cyclotomic(order, 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw Error("matrix is singular");
        std::swap(a[p], a[c]);
        Cyclotomic inv = a[c][c].inverse();
        for (auto& x : a[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Cyclotomic f = a[r][c];
            for (std::size_t j = c; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(a[i].begin() + static_cast<long>(n), a[i].end());
    return out;
}

Vec mat_vec(const CMatrix& m, const Vec& v, unsigned order) {
    Vec out = zero_vec(m.size(), order);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace nilcomm
