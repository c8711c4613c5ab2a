#pragma once

#include "nilcomm/cohomology.hpp"

namespace nilcomm {

// A_theta on A + K^s: e_i e_j = sum_k c_ij^k e_k + sum_t theta_t(e_i, e_j) e_{n+t}.
AlgebraTable central_extend(const AlgebraTable& a, const SymCocycle& theta);
AlgebraTable central_extend(const AlgebraTable& a, const std::vector<SymCocycle>& thetas);

struct AnnihilatorSplit {
    AlgebraTable quotient;  // dimension n - m
    SymCocycle theta;       // m coordinates, one per annihilator basis vector
    // Columns: the complement basis vectors followed by the annihilator basis.
    CMatrix basis_change;
};

// Throws NoAnnihilator when Ann(A) = 0. The complement is spanned by the standard
// vectors at non-pivot positions of Ann(A)'s canonical basis, so that
// central_extend(quotient, theta) == change_basis(A, basis_change).
AnnihilatorSplit split_annihilator(const AlgebraTable& a);

}  // namespace nilcomm
