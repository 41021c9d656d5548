#include <gtest/gtest.h>

#include "dlogdist/indep.hpp"

using namespace dlogdist;

TEST(Dlog, SmallPrimeFieldValues) {
    const Field F({7, 1});
    EXPECT_EQ(discrete_log(F, F.from_int(6)).value, 3u);
    EXPECT_EQ(discrete_log(F, F.from_int(2)).value, 2u);
    EXPECT_EQ(discrete_log(F, F.from_int(4)).value, 4u);
    EXPECT_EQ(discrete_log_mod(F, F.from_int(6), 2), 1u);
    EXPECT_THROW(discrete_log(F, F.zero()), std::domain_error);
    EXPECT_THROW(discrete_log_mod(F, F.one(), 4), std::invalid_argument);
    EXPECT_THROW(discrete_log_mod(F, F.one(), 1), std::invalid_argument);
}

TEST(Dlog, LogIsAHomomorphism) {
    for (auto s : {FieldSpec{11, 1}, FieldSpec{2, 4}, FieldSpec{5, 2}}) {
        const Field F(s);
        const auto m = F.group_order();
        for (Elem a : F.elements())
            for (Elem b : F.elements()) {
                if (a.index == 0 || b.index == 0) continue;
                EXPECT_EQ(discrete_log(F, F.mul(a, b)).value, (discrete_log(F, a).value + discrete_log(F, b).value) % m);
            }
    }
}

TEST(Residues, MixedRadixRoundTrip) {
    const std::vector<std::uint64_t> d{3, 2, 4};
    for (std::uint64_t i = 0; i < 24; ++i) EXPECT_EQ(cell_index(d, residue_vector(d, i)), i);
    EXPECT_EQ(residue_vector(d, 1), (std::vector<std::uint32_t>{0, 0, 1}));
    EXPECT_EQ(residue_vector(d, 4), (std::vector<std::uint32_t>{0, 1, 0}));
    EXPECT_THROW(cell_index(d, {3, 0, 0}), std::invalid_argument);
}

TEST(Independence, SingletonX) {
    const Field F({7, 1});
    EXPECT_TRUE(check_independence(F, TupleSpec{{poly_x(F)}, {2}}).independent());
    EXPECT_TRUE(check_independence(F, TupleSpec{{poly_x(F), poly_from_ints(F, {1, 1})}, {2, 2}}).independent());
}

TEST(Independence, SquareIsDependentWithWitness) {
    const Field F({7, 1});
    const TupleSpec spec{{poly_from_ints(F, {0, 0, 1})}, {2}};
    const auto v = check_independence(F, spec);
    ASSERT_FALSE(v.independent());
    EXPECT_EQ(v.witness->a, (std::vector<std::uint32_t>{1}));
    EXPECT_EQ(v.witness->u, F.one());
    EXPECT_EQ(v.witness->G, poly_x(F));
    const auto rep = dependence_identity(F, spec, *v.witness);
    EXPECT_TRUE(rep.all_hold);
    EXPECT_EQ(rep.checked, 6u);
}

TEST(Independence, RepeatedPolynomialAndScaledSquare) {
    const Field F({11, 1});
    const TupleSpec same{{poly_x(F), poly_x(F)}, {2, 2}};
    const auto v = check_independence(F, same);
    ASSERT_FALSE(v.independent());
    EXPECT_EQ(v.witness->a, (std::vector<std::uint32_t>{1, 1}));  // first nonzero vector in enumeration order
    EXPECT_TRUE(dependence_identity(F, same, *v.witness).all_hold);

    // 2 x^2 over F_11: a nonsquare unit times a square; the identity carries log u.
    const TupleSpec scaled{{poly_from_ints(F, {0, 0, 2})}, {2}};
    const auto w = check_independence(F, scaled);
    ASSERT_FALSE(w.independent());
    EXPECT_EQ(w.witness->u, F.from_int(2));
    const auto rep = dependence_identity(F, scaled, *w.witness);
    EXPECT_TRUE(rep.all_hold);
    EXPECT_EQ(rep.v % 2, 1u);
}

TEST(Independence, WitnessVerifiesAcrossMixedDivisors) {
    const Field F({13, 1});
    // (x^2 (x+1))^{...}: with d = (4, 6), a = (a1, a2) with 3 a1 * 2 + ... checked by brute enumeration below.
    const TupleSpec spec{{poly_from_ints(F, {0, 0, 1}), poly_from_ints(F, {0, 0, 0, 1})}, {4, 6}};
    const auto v = check_independence(F, spec);
    ASSERT_FALSE(v.independent());
    EXPECT_TRUE(witness_holds(F, spec, *v.witness));
    EXPECT_TRUE(dependence_identity(F, spec, *v.witness).all_hold);

    // Brute force: the witness is the first a whose exponent product is u G^L.
    for (std::uint64_t idx = 1; idx < cell_index(spec.divisors, v.witness->a); ++idx) {
        const auto a = residue_vector(spec.divisors, idx);
        const Poly prod = exponent_product(F, spec, a);
        EXPECT_FALSE(is_power_form(F, prod, spec.lcm()).has_value()) << idx;
    }
}

TEST(Independence, RejectsInvalidWitnessesAndSpecs) {
    const Field F({7, 1});
    const TupleSpec spec{{poly_from_ints(F, {0, 0, 1})}, {2}};
    EXPECT_THROW(dependence_identity(F, spec, Witness{{0}, F.one(), poly_x(F)}), std::invalid_argument);
    EXPECT_THROW(dependence_identity(F, spec, Witness{{1}, F.from_int(3), poly_x(F)}), std::invalid_argument);
    EXPECT_THROW(check_independence(F, TupleSpec{{Poly()}, {2}}), std::invalid_argument);
    EXPECT_THROW(check_independence(F, TupleSpec{{poly_x(F)}, {4}}), std::invalid_argument);
    EXPECT_THROW(check_independence(F, TupleSpec{{poly_x(F)}, {2}}, 1), std::invalid_argument);
}

TEST(Independence, AgreesWithPowerFormBruteForce) {
    // Independent iff no nonzero a makes the exponent product a unit times an L-th power.
    const Field F({3, 2});
    const std::vector<Poly> pool{poly_x(F), poly_from_ints(F, {1, 1}), poly_from_ints(F, {0, 0, 1}),
                                 poly_from_ints(F, {1, 0, 1}), poly_from_ints(F, {1, 2, 1}),
                                 poly_from_ints(F, {0, 0, 0, 0, 1})};
    for (const auto& P1 : pool)
        for (const auto& P2 : pool)
            for (std::uint64_t d1 : {2, 4, 8})
                for (std::uint64_t d2 : {2, 4}) {
                    const TupleSpec spec{{P1, P2}, {d1, d2}};
                    bool brute_dependent = false;
                    for (std::uint64_t idx = 1; idx < spec.cell_count() && !brute_dependent; ++idx)
                        brute_dependent =
                            is_power_form(F, exponent_product(F, spec, residue_vector(spec.divisors, idx)), spec.lcm())
                                .has_value();
                    EXPECT_EQ(check_independence(F, spec).independent(), !brute_dependent);
                }
}
