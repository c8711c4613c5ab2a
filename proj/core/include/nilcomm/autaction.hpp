#pragma once

#include "nilcomm/cohomology.hpp"
#include "nilcomm/tabledsl.hpp"

#include <optional>
#include <string>
#include <utility>

namespace nilcomm {

struct AutCheck {
    bool ok = true;
    bool singular = false;
    // First pair (i <= j, 0-based) with phi(e_i) phi(e_j) != phi(e_i e_j).
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    Element defect;

    std::string describe() const;
};

// phi(e_j) is column j of phi. Entries may be polynomials in extra variables;
// the homomorphism identity is checked as a polynomial identity and the
// determinant must not be the zero polynomial.
AutCheck is_automorphism(const AlgebraTable& a, const Matrix& phi);

class AutMap {
public:
    // Throws UnverifiedAutomorphism when the check fails.
    static AutMap verify(const AlgebraTable& a, Matrix phi);
    static AutMap unverified(Matrix phi);

    const Matrix& matrix() const { return m_; }
    bool verified() const { return verified_; }

private:
    AutMap(Matrix m, bool v) : m_(std::move(m)), verified_(v) {}
    Matrix m_;
    bool verified_;
};

// (phi theta)(x, y) = theta(phi x, phi y); throws UnverifiedAutomorphism for an unverified map.
SymCocycle act_on_cocycle(const AlgebraTable& a, const AutMap& phi, const SymCocycle& theta);
// Same pullback without the verification gate; used internally and by benchmarks.
SymCocycle pullback(const Matrix& phi, const SymCocycle& theta);

// [phi theta1] == [theta2]: the difference reduces to zero modulo B2. A must be
// parameter-free; the cocycles and phi may carry free variables, in which case
// the reduction must vanish as a polynomial.
bool classes_equal_under(const AlgebraTable& a, const AutMap& phi, const SymCocycle& theta1, const SymCocycle& theta2);

// <phi from_i> + B2 == <to_i> + B2; everything parameter-free.
bool spans_equal_under(const AlgebraTable& a, const AutMap& phi, const std::vector<SymCocycle>& from,
                       const std::vector<SymCocycle>& to);

// Image of a subspace of cocycle coordinates (Delta basis) under the pullback.
Subspace act_on_subspace(const Matrix& phi, const Subspace& cocycles, std::size_t n);

enum class WitnessStatus { verified, failed, unverifiable };
std::string status_name(WitnessStatus s);

struct WitnessReport {
    WitnessStatus status;
    std::string detail;
};

// Parametric base algebras are checked at the admissible samples; witnesses
// with free variables are checked symbolically (maps) or at samples (spans).
WitnessReport verify_witness(const Presentation& entry, const WitnessAnnotation& w);

}  // namespace nilcomm
