#include "support.hpp"

#include "nilcomm/autaction.hpp"
#include "nilcomm/errors.hpp"

#include <gtest/gtest.h>

using namespace nilcomm;
using namespace nilcomm::test;

namespace {

const char* kN3s02 = "algebra N3s_02 dim 3\ne1*e1 = e2\ne1*e2 = e3";

SymCocycle D(const AlgebraTable& a, std::size_t i, std::size_t j) {
    return SymCocycle::delta(a.ring(), a.dim(), i - 1, j - 1);
}

Matrix diag(const RingPtr& r, std::initializer_list<long> d) {
    Matrix m(r, d.size(), d.size());
    std::size_t k = 0;
    for (long x : d) {
        m(k, k) = Poly(r, x);
        ++k;
    }
    return m;
}

// The entry with its expectations replaced by a single witness line.
Presentation with_witness(const std::string& name, const std::string& witness) {
    Presentation p = entry(name);
    p.expect.reset();
    std::string text = serialize(p);
    if (text.back() != '\n') text += '\n';
    return parse(text + "expect\n  " + witness + "\n");
}

}  // namespace

TEST(IsAutomorphism, FamilyMemberOfN3s02) {
    AlgebraTable a = table_of(kN3s02);
    EXPECT_TRUE(is_automorphism(a, diag(a.ring(), {2, 4, 8})).ok);
}

TEST(IsAutomorphism, WrongScalingReportsPair) {
    AlgebraTable a = table_of(kN3s02);
    AutCheck c = is_automorphism(a, diag(a.ring(), {1, 2, 1}));
    EXPECT_FALSE(c.ok);
    ASSERT_TRUE(c.witness);
    EXPECT_EQ(*c.witness, (std::pair<std::size_t, std::size_t>{0, 0}));
    EXPECT_FALSE(c.describe().empty());
}

TEST(IsAutomorphism, IdentityAlways) {
    for (const char* name : {"N3s_02", "N4s_13", "N4_05"}) {
        AlgebraTable a = entry(name).table();
        EXPECT_TRUE(is_automorphism(a, Matrix::identity(a.ring(), a.dim())).ok) << name;
    }
}

TEST(IsAutomorphism, SingularRejected) {
    AlgebraTable a = table_of("algebra Z dim 2");
    AutCheck c = is_automorphism(a, diag(a.ring(), {1, 0}));
    EXPECT_FALSE(c.ok);
    EXPECT_TRUE(c.singular);
}

TEST(IsAutomorphism, SymbolicFamily) {
    AlgebraTable a = table_of(kN3s02);
    auto r = extend_ring(a.ring(), {"x", "y", "z"});
    Poly x = Poly::var(r, "x"), y = Poly::var(r, "y"), z = Poly::var(r, "z");
    Matrix phi(r, 3, 3);
    phi(0, 0) = x;
    phi(1, 0) = y;
    phi(1, 1) = x.pow(2);
    phi(2, 0) = z;
    phi(2, 1) = Poly(r, 2) * x * y;
    phi(2, 2) = x.pow(3);
    EXPECT_TRUE(is_automorphism(a.recast(r), phi).ok);
    phi(2, 1) = x * y;
    EXPECT_FALSE(is_automorphism(a.recast(r), phi).ok);
}

TEST(IsAutomorphism, SizeMismatch) {
    AlgebraTable a = table_of(kN3s02);
    EXPECT_THROW(is_automorphism(a, Matrix::identity(a.ring(), 2)), DimensionMismatch);
}

TEST(ActOnCocycle, Examples) {
    AlgebraTable a = table_of(kN3s02);
    AutMap id = AutMap::verify(a, Matrix::identity(a.ring(), 3));
    SymCocycle t = D(a, 2, 3) + D(a, 1, 1);
    EXPECT_EQ(act_on_cocycle(a, id, t), t);
    AutMap phi = AutMap::verify(a, diag(a.ring(), {-1, 1, -1}));
    SymCocycle minus23 = D(a, 2, 3);
    minus23 *= Poly(a.ring(), -1);
    EXPECT_EQ(act_on_cocycle(a, phi, D(a, 2, 3)), minus23);
    EXPECT_EQ(act_on_cocycle(a, phi, D(a, 1, 3)), D(a, 1, 3));
}

TEST(ActOnCocycle, UnverifiedRejected) {
    AlgebraTable a = table_of(kN3s02);
    EXPECT_THROW(AutMap::verify(a, diag(a.ring(), {1, 2, 1})), UnverifiedAutomorphism);
    AutMap u = AutMap::unverified(diag(a.ring(), {1, 2, 1}));
    EXPECT_THROW(act_on_cocycle(a, u, D(a, 1, 1)), UnverifiedAutomorphism);
}

TEST(ClassesEqualUnder, Examples) {
    AlgebraTable a = table_of(kN3s02);
    AutMap id = AutMap::verify(a, Matrix::identity(a.ring(), 3));
    EXPECT_TRUE(classes_equal_under(a, id, D(a, 3, 3), D(a, 3, 3)));
    AutMap phi = AutMap::verify(a, diag(a.ring(), {-1, 1, -1}));
    SymCocycle minus23 = D(a, 2, 3);
    minus23 *= Poly(a.ring(), -1);
    EXPECT_TRUE(classes_equal_under(a, phi, D(a, 2, 3), minus23));
    EXPECT_FALSE(classes_equal_under(a, id, D(a, 1, 3), D(a, 2, 2)));
}

TEST(ClassesEqualUnder, ModuloCoboundaries) {
    AlgebraTable a = table_of(kN3s02);
    AutMap id = AutMap::verify(a, Matrix::identity(a.ring(), 3));
    EXPECT_TRUE(classes_equal_under(a, id, D(a, 1, 3), D(a, 1, 3) + D(a, 1, 1) + D(a, 1, 2)));
}

TEST(ClassesEqualUnder, ParametricAlgebraRejected) {
    AlgebraTable a = entry("N4s_13").table();
    AutMap id = AutMap::unverified(Matrix::identity(a.ring(), 4));
    EXPECT_THROW(classes_equal_under(a, id, D(a, 1, 4), D(a, 1, 4)), Error);
}

TEST(SpansEqualUnder, SignFlip) {
    AlgebraTable a = table_of(kN3s02);
    AutMap phi = AutMap::verify(a, diag(a.ring(), {-1, 1, -1}));
    std::vector<SymCocycle> from = {D(a, 1, 3), D(a, 2, 3) + D(a, 3, 3)};
    std::vector<SymCocycle> to = {D(a, 1, 3), D(a, 3, 3) - D(a, 2, 3)};
    EXPECT_TRUE(spans_equal_under(a, phi, from, to));
    std::vector<SymCocycle> wrong = {D(a, 1, 3), D(a, 3, 3) + D(a, 2, 3)};
    EXPECT_FALSE(spans_equal_under(a, phi, from, wrong));
}

TEST(VerifyWitness, ShippedN3s02) {
    const Presentation& p = entry("N3s_02");
    ASSERT_TRUE(p.expect);
    for (const auto& w : p.expect->witnesses)
        EXPECT_EQ(verify_witness(p, w).status, w.unverifiable ? WitnessStatus::unverifiable : WitnessStatus::verified);
}

TEST(VerifyWitness, IdentitySelfPair) {
    Presentation p = with_witness("N4s_05", "witness [1, 0, 0, 0; 0, 1, 0, 0; 0, 0, 1, 0; 0, 0, 0, 1] maps D34 to D34");
    EXPECT_EQ(verify_witness(p, p.expect->witnesses[0]).status, WitnessStatus::verified);
}

TEST(VerifyWitness, BrokenFamilyRelationFails) {
    // u = 2 gives diag(4, 16, 8, 64); replacing 8 by 9 breaks r^2 = x^3.
    Presentation good = with_witness("N4s_10", "witness [4, 0, 0, 0; 0, 16, 0, 0; 0, 0, 8, 0; 0, 0, 0, 64] maps D44 to 4096 D44");
    EXPECT_EQ(verify_witness(good, good.expect->witnesses[0]).status, WitnessStatus::verified);
    Presentation bad = with_witness("N4s_10", "witness [4, 0, 0, 0; 0, 16, 0, 0; 0, 0, 9, 0; 0, 0, 0, 64] maps D44 to 4096 D44");
    WitnessReport r = verify_witness(bad, bad.expect->witnesses[0]);
    EXPECT_EQ(r.status, WitnessStatus::failed);
    EXPECT_FALSE(r.detail.empty());
}

TEST(VerifyWitness, WrongTargetFails) {
    Presentation p = with_witness("N3s_02", "witness [-1, 0, 0; 0, 1, 0; 0, 0, -1] maps D23 to D23");
    EXPECT_EQ(verify_witness(p, p.expect->witnesses[0]).status, WitnessStatus::failed);
}

TEST(VerifyWitness, UnverifiableIsNotFailure) {
    Presentation p = with_witness("N3s_04", "witness unverifiable \"needs a cube root of alpha\"");
    WitnessReport r = verify_witness(p, p.expect->witnesses[0]);
    EXPECT_EQ(r.status, WitnessStatus::unverifiable);
    EXPECT_EQ(status_name(r.status), "unverifiable");
}

TEST(VerifyWitness, SymbolicSignFlip) {
    Presentation p = with_witness("N3s_02", "witness alpha : [-1, 0, 0; 0, 1, 0; 0, 0, -1] maps alpha D23 + D33 to -alpha D23 + D33");
    EXPECT_EQ(verify_witness(p, p.expect->witnesses[0]).status, WitnessStatus::verified);
}

TEST(VerifyWitness, ShippedCatalogWitnesses) {
    std::size_t n = 0;
    for (const auto& p : all_entries()) {
        if (!p.expect) continue;
        for (const auto& w : p.expect->witnesses) {
            WitnessReport r = verify_witness(p, w);
            EXPECT_NE(r.status, WitnessStatus::failed) << p.name << ": " << r.detail;
            ++n;
        }
    }
    EXPECT_GE(n, 17u);
}

TEST(AutactionProperty, ShippedFamiliesPreserveSubspaces) {
    for (const auto& p : all_entries()) {
        if (!p.expect || p.expect->automorphisms.empty()) continue;
        for (const auto& smp : samples_of(p)) {
            AlgebraTable table = specialize(p.table(), smp);
            std::string label = p.name + " " + assignment_to_text(smp);
            CohomologySpaces c = cohomology(table);
            bool cd = c.z2d.contains(c.b2);
            for (const auto& fam : p.expect->automorphisms) {
                for (const auto& at : fam.samples) {
                    Assignment full = smp;
                    full.insert(at.begin(), at.end());
                    Matrix phi = fam.matrix.substitute(full).recast(table.ring());
                    ASSERT_TRUE(is_automorphism(table, phi).ok) << label;
                    EXPECT_EQ(act_on_subspace(phi, c.b2, table.dim()), c.b2) << label;
                    if (cd) {
                        EXPECT_EQ(act_on_subspace(phi, c.z2d, table.dim()), c.z2d) << label;
                    }
                }
            }
        }
    }
}

TEST(AutactionProperty, PullbackComposition) {
    std::mt19937 rng(71);
    AlgebraTable a = entry("N4s_14").table();
    auto fam = entry("N4s_14").expect->automorphisms.front();
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> v(-3, 3);
        auto pick = [&](bool nonzero) {
            int x = 0;
            while (x == 0) {
                x = v(rng);
                if (!nonzero) break;
            }
            return Cyclotomic(1, x);
        };
        Assignment s1{{"x", pick(true)}, {"q", pick(true)}, {"r", pick(false)}, {"s", pick(false)}, {"t", pick(false)}};
        Assignment s2{{"x", pick(true)}, {"q", pick(true)}, {"r", pick(false)}, {"s", pick(false)}, {"t", pick(false)}};
        Matrix phi = fam.matrix.substitute(s1).recast(a.ring());
        Matrix psi = fam.matrix.substitute(s2).recast(a.ring());
        AutMap f = AutMap::verify(a, phi), g = AutMap::verify(a, psi);
        AutMap fg = AutMap::verify(a, phi * psi);
        SymCocycle t = random_cocycle(rng, a.ring(), 4);
        EXPECT_EQ(act_on_cocycle(a, fg, t), act_on_cocycle(a, g, act_on_cocycle(a, f, t)));
    }
}

TEST(AutactionProperty, IdentityFixesEveryClass) {
    std::mt19937 rng(73);
    AlgebraTable a = entry("N4s_08").table();
    AutMap id = AutMap::verify(a, Matrix::identity(a.ring(), 4));
    for (int trial = 0; trial < 30; ++trial) {
        SymCocycle t = random_cocycle(rng, a.ring(), 4);
        EXPECT_TRUE(classes_equal_under(a, id, t, t));
    }
}
