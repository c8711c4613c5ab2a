#include "support.hpp"

#include "nilcomm/errors.hpp"
#include "nilcomm/extension.hpp"

#include <gtest/gtest.h>

using namespace nilcomm;
using namespace nilcomm::test;

namespace {

const char* kN3s02 = "algebra N3s_02 dim 3\ne1*e1 = e2\ne1*e2 = e3";
const char* kN4s08 = "algebra N4s_08 dim 4\ne1*e1 = e2\ne1*e2 = e3\ne2*e2 = e4";

SymCocycle D(const AlgebraTable& a, std::size_t i, std::size_t j) {
    return SymCocycle::delta(a.ring(), a.dim(), i - 1, j - 1);
}

// Ann(theta) ∩ Ann(A), embedded in A_theta, plus the new central vectors.
Subspace expected_annihilator(const AlgebraTable& a, const SymCocycle& theta) {
    std::size_t n = a.dim(), s = theta.s();
    Subspace inner = ann_of_cocycle(a, theta).intersect(annihilator(a));
    std::vector<Vec> gens;
    for (const auto& v : inner.basis()) {
        Vec w = v;
        w.resize(n + s, Cyclotomic(a.ring()->order));
        gens.push_back(w);
    }
    for (std::size_t t = 0; t < s; ++t) {
        Vec w = zero_vec(n + s, a.ring()->order);
        w[n + t] = Cyclotomic(a.ring()->order, 1);
        gens.push_back(w);
    }
    return Subspace::span(n + s, a.ring()->order, gens);
}

}  // namespace

TEST(CentralExtend, N3s02ByDelta22IsN4s08) {
    AlgebraTable a = table_of(kN3s02);
    EXPECT_EQ(central_extend(a, D(a, 2, 2)), table_of(kN4s08));
}

TEST(CentralExtend, N3s02ByDelta13IsN4s13AtZero) {
    AlgebraTable a = table_of(kN3s02);
    AlgebraTable target = specialize(entry("N4s_13").table(), {{"lambda", Cyclotomic(1, 0)}});
    EXPECT_EQ(central_extend(a, D(a, 1, 3)), target);
}

TEST(CentralExtend, ZeroCocycleSplits) {
    AlgebraTable a = table_of(kN3s02);
    AlgebraTable b = central_extend(a, SymCocycle(a.ring(), 3, 1));
    EXPECT_EQ(b.dim(), 4u);
    EXPECT_EQ(annihilator(b), Subspace::span(4, 1, {vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));
    EXPECT_EQ(b, table_of("algebra X dim 4\ne1*e1 = e2\ne1*e2 = e3"));
}

TEST(CentralExtend, SeveralCocycles) {
    AlgebraTable a = table_of("algebra Y dim 2\ne1*e1 = e2");
    AlgebraTable b = central_extend(a, std::vector<SymCocycle>{D(a, 1, 2), D(a, 2, 2)});
    EXPECT_EQ(b, table_of("algebra X dim 4\ne1*e1 = e2\ne1*e2 = e3\ne2*e2 = e4"));
}

TEST(CentralExtend, DimensionMismatch) {
    AlgebraTable a = table_of(kN3s02);
    EXPECT_THROW(central_extend(a, SymCocycle::delta(a.ring(), 2, 0, 0)), DimensionMismatch);
}

TEST(SplitAnnihilator, N3s02) {
    AlgebraTable a = table_of(kN3s02);
    AnnihilatorSplit s = split_annihilator(a);
    EXPECT_EQ(s.quotient, table_of("algebra Q dim 2\ne1*e1 = e2"));
    ASSERT_EQ(s.theta.s(), 1u);
    EXPECT_EQ(s.theta.component(0), SymCocycle::delta(s.quotient.ring(), 2, 0, 1));
    EXPECT_EQ(central_extend(s.quotient, s.theta), a);
}

TEST(SplitAnnihilator, N4s08) {
    AlgebraTable a = table_of(kN4s08);
    AnnihilatorSplit s = split_annihilator(a);
    EXPECT_EQ(s.quotient, table_of("algebra Q dim 2\ne1*e1 = e2"));
    ASSERT_EQ(s.theta.s(), 2u);
    EXPECT_EQ(s.theta.component(0), SymCocycle::delta(s.quotient.ring(), 2, 0, 1));
    EXPECT_EQ(s.theta.component(1), SymCocycle::delta(s.quotient.ring(), 2, 1, 1));
    EXPECT_EQ(central_extend(s.quotient, s.theta), a);
}

TEST(SplitAnnihilator, ZeroAlgebra) {
    AnnihilatorSplit s = split_annihilator(table_of("algebra Z dim 1"));
    EXPECT_EQ(s.quotient.dim(), 0u);
    ASSERT_EQ(s.theta.s(), 1u);
    EXPECT_TRUE(s.theta.coords(0).empty());
}

TEST(SplitAnnihilator, NoAnnihilatorThrows) {
    // A non-nilpotent algebra with zero annihilator.
    EXPECT_THROW(split_annihilator(table_of("algebra U dim 1\ne1*e1 = e1")), NoAnnihilator);
}

TEST(SplitAnnihilator, NonTrailingAnnihilator) {
    // Ann = span{e1} is not trailing; the round trip holds after the recorded basis change.
    AlgebraTable a = table_of("algebra W dim 3\ne2*e2 = e3");
    AnnihilatorSplit s = split_annihilator(a);
    EXPECT_EQ(central_extend(s.quotient, s.theta), change_basis(a, s.basis_change));
}

TEST(ExtensionProperty, AnnihilatorDecomposition) {
    std::mt19937 rng(53);
    for (const char* name : {"N3s_02", "N3s_04", "N4s_05", "N4s_09", "N4s_17"}) {
        AlgebraTable a = entry(name).table();
        for (int trial = 0; trial < 40; ++trial) {
            SymCocycle t = random_cocycle(rng, a.ring(), a.dim(), 1);
            EXPECT_EQ(annihilator(central_extend(a, t)), expected_annihilator(a, t)) << name << " " << t.to_string();
        }
    }
}

TEST(ExtensionProperty, CdCriterion) {
    std::mt19937 rng(59);
    for (const char* name : {"N3s_02", "N3s_04", "N4s_08", "N4s_10", "N4s_14"}) {
        AlgebraTable a = entry(name).table();
        Subspace z = cd_cocycle_space(a);
        for (int trial = 0; trial < 20; ++trial) {
            // Alternate generic cocycles with random members of Z2_D.
            SymCocycle t = random_cocycle(rng, a.ring(), a.dim(), 2);
            if (trial % 2 == 0) {
                unsigned ord = a.ring()->order;
                Vec v = zero_vec(sym_dim(a.dim()), ord);
                for (const auto& b : z.basis()) {
                    Cyclotomic c(ord, small_rational(rng));
                    for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
                }
                t = cocycle_from(a.ring(), a.dim(), v);
            }
            bool extended_cd = check_identity(central_extend(a, t), Identity::cd).holds;
            EXPECT_EQ(extended_cd, is_cd_class(a, t)) << name << " " << t.to_string();
        }
    }
}

TEST(ExtensionProperty, RoundTripOnCatalog) {
    for (const auto& p : all_entries()) {
        for (const auto& s : sampled_tables(p)) {
            if (annihilator(s.table).dim() == 0) continue;
            AnnihilatorSplit sp = split_annihilator(s.table);
            EXPECT_EQ(central_extend(sp.quotient, sp.theta), change_basis(s.table, sp.basis_change)) << s.label;
        }
    }
}

TEST(ExtensionProperty, ExtensionsAreCommutative) {
    std::mt19937 rng(61);
    AlgebraTable a = table_of(kN3s02);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraTable b = central_extend(a, random_cocycle(rng, a.ring(), 3));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(b.product(i, j), b.product(j, i));
    }
}
