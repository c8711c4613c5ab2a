#include "support.hpp"

#include "nilcomm/errors.hpp"

#include <gtest/gtest.h>

using namespace nilcomm;
using namespace nilcomm::test;

namespace {

const char* kN3s01 = "algebra N3s_01 dim 3\ne1*e1 = e2";
const char* kN3s02 = "algebra N3s_02 dim 3\ne1*e1 = e2\ne1*e2 = e3";
const char* kN4_01 = "algebra N4_01 dim 4\ne1*e1 = e2\ne1*e2 = e3\ne2*e3 = e4";
const char* kN4s08 = "algebra N4s_08 dim 4\ne1*e1 = e2\ne1*e2 = e3\ne2*e2 = e4";
const char* kN4s13 =
    "algebra N4s_13 dim 4\nparams lambda (lambda != 1, lambda != 2, lambda != 4)\n"
    "e1*e1 = e2\ne1*e2 = e3\ne1*e3 = e4\ne2*e2 = lambda e4";

Element e(const AlgebraTable& a, std::size_t i) { return basis_element(a, i); }

Element scaled_sum(const AlgebraTable& a, const std::vector<std::pair<long, std::size_t>>& terms) {
    Element x = zero_polyvec(a.ring(), a.dim());
    for (auto [c, i] : terms) x[i] += Poly(a.ring(), c);
    return x;
}

Element add(Element x, const Element& y, long sign = 1) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += Poly(x[k].ring(), sign) * y[k];
    return x;
}

Element cd_defect(const AlgebraTable& A, const Element& x, const Element& y, const Element& a, const Element& b) {
    auto m = [&](const Element& u, const Element& v) { return multiply(A, u, v); };
    Element lhs = add(add(m(m(m(x, y), a), b), m(m(m(x, b), a), y)), m(x, m(m(y, b), a)));
    Element rhs = add(add(m(m(m(x, y), b), a), m(m(m(x, a), b), y)), m(x, m(m(y, a), b)));
    return add(lhs, rhs, -1);
}

Element assoc_defect(const AlgebraTable& A, const Element& x, const Element& y, const Element& z) {
    return add(multiply(A, multiply(A, x, y), z), multiply(A, x, multiply(A, y, z)), -1);
}

}  // namespace

TEST(PairIndex, Lexicographic) {
    EXPECT_EQ(pair_index(0, 0, 3), 0u);
    EXPECT_EQ(pair_index(0, 2, 3), 2u);
    EXPECT_EQ(pair_index(1, 1, 3), 3u);
    EXPECT_EQ(pair_index(2, 2, 3), 5u);
    EXPECT_EQ(pair_index(2, 1, 3), pair_index(1, 2, 3));
    EXPECT_EQ(sym_dim(5), 15u);
}

TEST(Multiply, BasisProducts) {
    AlgebraTable a = table_of(kN3s02);
    EXPECT_EQ(multiply(a, e(a, 0), e(a, 1)), e(a, 2));
    AlgebraTable b = table_of(kN4_01);
    EXPECT_EQ(multiply(b, e(b, 1), e(b, 2)), e(b, 3));
    EXPECT_EQ(multiply(b, e(b, 2), e(b, 1)), e(b, 3));
}

TEST(Multiply, ZeroAbsorbs) {
    AlgebraTable a = table_of(kN4_01);
    Element x = scaled_sum(a, {{2, 0}, {-3, 1}, {1, 3}});
    EXPECT_TRUE(is_zero(multiply(a, x, zero_polyvec(a.ring(), 4))));
}

TEST(Multiply, DimensionMismatch) {
    AlgebraTable a = table_of(kN3s02);
    EXPECT_THROW(multiply(a, zero_polyvec(a.ring(), 2), e(a, 0)), DimensionMismatch);
}

TEST(SubspaceProduct, Examples) {
    AlgebraTable a = table_of(kN3s02);
    Subspace full = Subspace::full(3, 1);
    EXPECT_EQ(subspace_product(a, full, Subspace(3, 1)).dim(), 0u);
    EXPECT_EQ(subspace_product(a, full, full), Subspace::span(3, 1, {vec({0, 1, 0}), vec({0, 0, 1})}));
    AlgebraTable b = table_of(kN4_01);
    Subspace a2 = subspace_product(b, Subspace::full(4, 1), Subspace::full(4, 1));
    EXPECT_EQ(subspace_product(b, a2, a2), Subspace::span(4, 1, {vec({0, 0, 0, 1})}));
}

TEST(Powers, N3s02) {
    auto p = powers(table_of(kN3s02));
    EXPECT_EQ(p.dims, (std::vector<std::size_t>{3, 2, 1, 0}));
    EXPECT_EQ(p.nilindex, 4u);
}

TEST(Powers, N4_01StagnatesBeforeDying) {
    auto p = powers(table_of(kN4_01));
    EXPECT_EQ(p.dims, (std::vector<std::size_t>{4, 3, 2, 1, 1, 0}));
    EXPECT_EQ(p.nilindex, 6u);
}

TEST(Powers, ZeroAlgebra) {
    auto p = powers(table_of("algebra Z dim 1"));
    EXPECT_EQ(p.dims, (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(p.nilindex, 2u);
}

TEST(Powers, NotNilpotent) {
    EXPECT_THROW(powers(table_of("algebra U dim 1\ne1*e1 = e1")), NotNilpotent);
}

TEST(Annihilator, Examples) {
    EXPECT_EQ(annihilator(table_of(kN3s02)), Subspace::span(3, 1, {vec({0, 0, 1})}));
    EXPECT_EQ(annihilator(table_of(kN4s08)), Subspace::span(4, 1, {vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));
    EXPECT_EQ(annihilator(table_of("algebra Z dim 3")), Subspace::full(3, 1));
}

TEST(Annihilator, Series) {
    auto s = annihilator_series(table_of(kN3s02));
    ASSERT_FALSE(s.empty());
    EXPECT_EQ(s.front().dim(), 1u);
    EXPECT_EQ(s.back().dim(), 3u);
}

TEST(CheckIdentity, N4_01FailsCd) {
    AlgebraTable a = table_of(kN4_01);
    auto r = check_identity(a, Identity::cd);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.witness, (std::vector<std::size_t>{0, 0, 0, 1}));
    EXPECT_EQ(r.defect, e(a, 3));
}

TEST(CheckIdentity, N3s01) {
    AlgebraTable a = table_of(kN3s01);
    EXPECT_TRUE(check_identity(a, Identity::cd).holds);
    EXPECT_TRUE(check_identity(a, Identity::associative).holds);
    EXPECT_TRUE(check_identity(a, Identity::jordan).holds);
}

TEST(CheckIdentity, N4_01IsNotAssociative) {
    AlgebraTable a = table_of(kN4_01);
    EXPECT_FALSE(check_identity(a, Identity::associative).holds);
}

TEST(CheckIdentity, ParametricDefectIsPolynomial) {
    AlgebraTable a = table_of("algebra P dim 4\nparams a\ne1*e1 = e2\ne1*e2 = e3\ne2*e3 = a e4");
    auto r = check_identity(a, Identity::cd);
    EXPECT_FALSE(r.holds);
    ASSERT_FALSE(r.defect.empty());
    EXPECT_FALSE(r.defect[3].is_constant());
    EXPECT_FALSE(r.describe().empty());
}

TEST(Specialize, DropsTermAtZero) {
    AlgebraTable a = table_of(kN4s13);
    AlgebraTable s = specialize(a, {{"lambda", Cyclotomic(1, 0)}});
    EXPECT_TRUE(s.is_constant());
    EXPECT_TRUE(is_zero(s.product(1, 1)));
    EXPECT_EQ(s, table_of("algebra X dim 4\ne1*e1 = e2\ne1*e2 = e3\ne1*e3 = e4"));
}

TEST(Specialize, ConstraintViolation) {
    AlgebraTable a = table_of(kN4s13);
    try {
        specialize(a, {{"lambda", Cyclotomic(1, 1)}});
        FAIL() << "expected InadmissibleSpecialization";
    } catch (const InadmissibleSpecialization& err) {
        EXPECT_NE(err.constraint().find("lambda"), std::string::npos);
    }
}

TEST(Specialize, N4_11AtTwo) {
    const Presentation& p = entry("N4_11");
    AlgebraTable s = specialize(p.table(), {{"lambda", Cyclotomic(1, 2)}});
    EXPECT_TRUE(s.is_constant());
    EXPECT_NO_THROW(powers(s));
}

TEST(Samples, PolicyAvoidsConstraintZeros) {
    const Presentation& p = parse(kN4s13);
    auto s = admissible_samples(p.param_names(), p.constraints(), 1);
    ASSERT_EQ(s.size(), 3u);
    for (const auto& a : s) {
        Rational v = a.at("lambda").rational();
        EXPECT_NE(v, 1);
        EXPECT_NE(v, 2);
        EXPECT_NE(v, 4);
    }
    EXPECT_NE(s[0], s[1]);
    EXPECT_NE(s[1], s[2]);
    EXPECT_NE(s[0], s[2]);
    EXPECT_EQ(s, admissible_samples(p.param_names(), p.constraints(), 1));
}

TEST(Samples, ParameterFreeYieldsOneEmptySample) {
    auto s = admissible_samples({}, {}, 1);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_TRUE(s[0].empty());
}

TEST(ChangeBasis, PermutationRelabels) {
    AlgebraTable a = table_of(kN3s02);
    // f1 = e1, f2 = e3, f3 = e2: f1 f1 = f3, f1 f3 = f2.
    AlgebraTable b = change_basis(a, cmat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    EXPECT_EQ(b, table_of("algebra X dim 3\ne1*e1 = e3\ne1*e3 = e2"));
}

TEST(AlgebraProperty, SymmetricProductOnCatalog) {
    std::mt19937 rng(31);
    for (const auto& p : all_entries()) {
        for (const auto& s : sampled_tables(p)) {
            Element x = random_element(rng, s.table), y = random_element(rng, s.table);
            EXPECT_EQ(multiply(s.table, x, y), multiply(s.table, y, x)) << s.label;
        }
    }
}

TEST(AlgebraProperty, PowerChainAndAnnihilatorOnCatalog) {
    for (const auto& p : all_entries()) {
        for (const auto& s : sampled_tables(p)) {
            const AlgebraTable& a = s.table;
            PowerSeries ps = powers(a);
            ASSERT_GT(ps.nilindex, 0u) << s.label;
            for (std::size_t k = 1; k < ps.powers.size(); ++k)
                EXPECT_TRUE(ps.powers[k - 1].contains(ps.powers[k])) << s.label << " k=" << k;
            Subspace ann = annihilator(a);
            for (const auto& v : ann.basis()) {
                Element x = to_polyvec(a.ring(), v);
                for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_TRUE(is_zero(multiply(a, x, e(a, i)))) << s.label;
            }
        }
    }
}

TEST(AlgebraProperty, MultilinearitySpotCheck) {
    std::mt19937 rng(37);
    const Presentation& cd_entry = entry("N4s_13");
    AlgebraTable cd_alg = specialize(cd_entry.table(), samples_of(cd_entry).front());
    ASSERT_TRUE(check_identity(cd_alg, Identity::cd).holds);
    AlgebraTable assoc = table_of(kN3s02);
    ASSERT_TRUE(check_identity(assoc, Identity::associative).holds);
    for (int trial = 0; trial < 50; ++trial) {
        Element x = random_element(rng, cd_alg), y = random_element(rng, cd_alg);
        Element a = random_element(rng, cd_alg), b = random_element(rng, cd_alg);
        EXPECT_TRUE(is_zero(cd_defect(cd_alg, x, y, a, b)));
        Element u = random_element(rng, assoc), v = random_element(rng, assoc), w = random_element(rng, assoc);
        EXPECT_TRUE(is_zero(assoc_defect(assoc, u, v, w)));
    }
}

TEST(AlgebraProperty, DefectWitnessReproduces) {
    // The reported tuple reproduces the reported defect when recomputed by hand.
    for (const std::string name : {"N4_01", "N4_05", "N4_09"}) {
        AlgebraTable a = entry(name).table();
        auto r = check_identity(a, Identity::cd);
        ASSERT_FALSE(r.holds) << name;
        ASSERT_EQ(r.witness.size(), 4u);
        auto w = r.witness;
        EXPECT_EQ(cd_defect(a, e(a, w[0]), e(a, w[1]), e(a, w[2]), e(a, w[3])), r.defect) << name;
    }
}
