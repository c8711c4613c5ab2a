#pragma once

#include "nilcomm/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilcomm {

using Element = PolyVec;

// Lexicographic position of the unordered pair {i, j} (0-based, i <= j) among n(n+1)/2 pairs.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
std::size_t sym_dim(std::size_t n);

// Commutative algebra given by structure constants c_ij^k for i <= j.
class AlgebraTable {
public:
    AlgebraTable(RingPtr ring, std::size_t dim);

    const RingPtr& ring() const { return ring_; }
    std::size_t dim() const { return dim_; }

    // e_i e_j (0-based, any order).
    const Element& product(std::size_t i, std::size_t j) const;
    void set_product(std::size_t i, std::size_t j, Element value);

    const std::vector<Constraint>& constraints() const { return constraints_; }
    void add_constraint(Constraint c);

    // All structure constants are parameter-free.
    bool is_constant() const;
    // Structure constants as scalars indexed by pair_index; throws RequiresSpecialization.
    std::vector<Vec> constant_products() const;

    AlgebraTable recast(const RingPtr& target) const;

    // Equations "e1*e1 = e2" style, one per nonzero product.
    std::string to_string() const;

    // Literal table equality (structure constants only).
    friend bool operator==(const AlgebraTable& a, const AlgebraTable& b);
    friend bool operator!=(const AlgebraTable& a, const AlgebraTable& b) { return !(a == b); }

private:
    RingPtr ring_;
    std::size_t dim_;
    std::vector<Element> prods_;
    std::vector<Constraint> constraints_;
};

Element basis_element(const AlgebraTable& a, std::size_t i);
Element multiply(const AlgebraTable& a, const Element& x, const Element& y);
std::string element_to_string(const Element& x);

Subspace subspace_product(const AlgebraTable& a, const Subspace& u, const Subspace& w);

struct PowerSeries {
    std::vector<Subspace> powers;  // A^1, A^2, ..., ending with the first zero power
    std::vector<std::size_t> dims;
    std::size_t nilindex = 0;
};

// Throws NotNilpotent if no zero power appears by exponent 2^n.
PowerSeries powers(const AlgebraTable& a);
Subspace annihilator(const AlgebraTable& a);
// Ann_1 = Ann(A), Ann_{i+1} = {x : x A in Ann_i}; stops when the chain stabilizes.
std::vector<Subspace> annihilator_series(const AlgebraTable& a);

enum class Identity { associative, jordan, cd };
std::string identity_name(Identity id);

struct IdentityReport {
    Identity identity;
    bool holds = true;
    // Basis indices (0-based) of the first failing tuple; empty for the generic Jordan check.
    std::vector<std::size_t> witness;
    Element defect;

    std::string describe() const;
};

IdentityReport check_identity(const AlgebraTable& a, Identity which);

using Assignment = std::map<std::string, Cyclotomic>;

// Sampling policy for parametric families: variable i of sample k starts at
// {2, 3, 5}[(k + i) mod 3] and is bumped by one while some constraint that no
// longer depends on unassigned variables vanishes, or, for the last variable,
// while the sample repeats an earlier one. `fixed` supplies values for
// other parameters the constraints may mention. An empty variable list yields
// one empty sample.
std::vector<Assignment> admissible_samples(const std::vector<std::string>& vars,
                                           const std::vector<Constraint>& constraints, unsigned order,
                                           const Assignment& fixed = {}, std::size_t count = 3);

// Substitutes the assigned parameters and drops them from the ring. Throws
// InadmissibleSpecialization if a constraint vanishes identically afterwards.
AlgebraTable specialize(const AlgebraTable& a, const std::map<std::string, Cyclotomic>& assignment);

// Table in the basis f_j = sum_i p[i][j] e_i (columns of p are the new basis vectors).
AlgebraTable change_basis(const AlgebraTable& a, const CMatrix& p);

}  // namespace nilcomm
