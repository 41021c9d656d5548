#include <gtest/gtest.h>

#include "dlogdist/int_poly.hpp"

using namespace dlogdist;

TEST(ZPoly, ReductionModP) {
    const Field F({7, 1});
    const auto r = reduce_mod_p(F, ZPoly{-6, 8, 0, 14});
    EXPECT_EQ(r.poly, poly_from_ints(F, {1, 1}));
    EXPECT_TRUE(r.degree_dropped);
    EXPECT_FALSE(r.vanished);
    EXPECT_TRUE(reduce_mod_p(F, ZPoly{7, -14}).vanished);
    EXPECT_THROW(reduce_mod_p(Field({3, 2}), ZPoly{1}), std::invalid_argument);
}

TEST(ZPoly, PowerFormModP) {
    const Field F({5, 1});
    EXPECT_TRUE(power_form_mod_p(F, ZPoly{1, 2, 1}, 2));        // (x + 1)^2
    EXPECT_TRUE(power_form_mod_p(F, ZPoly{6, 12, 6}, 2));       // 6 = 1 mod 5
    EXPECT_FALSE(power_form_mod_p(F, ZPoly{1, 1, 0, 1}, 2));
    EXPECT_TRUE(power_form_mod_p(F, ZPoly{4, 10, 0, 5}, 2));    // reduces to the constant 4
    EXPECT_THROW(power_form_mod_p(F, ZPoly{5, 10}, 2), std::domain_error);
}

TEST(ZPoly, DerivativeAndProduct) {
    EXPECT_EQ(zpoly_derivative(ZPoly{1, 1, 0, 1}), (ZPoly{1, 0, 3}));
    EXPECT_EQ(zpoly_mul(ZPoly{1, 1}, ZPoly{-1, 1}), (ZPoly{-1, 0, 1}));
}

TEST(ZPoly, ResultantsAndDiscriminants) {
    // Res(x^3 + x + 1, 3x^2 + 1) = 31 = -disc.
    EXPECT_EQ(resultant_z(ZPoly{1, 1, 0, 1}, ZPoly{1, 0, 3}), BigInt(31));
    EXPECT_EQ(bad_prime_bound_squarefree(ZPoly{1, 1, 0, 1}), BigInt(31));
    // Res(x^2 - 1, x - 1) = 0 (common root).
    EXPECT_EQ(resultant_z(ZPoly{-1, 0, 1}, ZPoly{-1, 1}), BigInt(0));
    // Res(x^2 + 1, x - 2) = 5.
    EXPECT_EQ(resultant_z(ZPoly{1, 0, 1}, ZPoly{-2, 1}), BigInt(5));
    EXPECT_THROW(bad_prime_bound_squarefree(ZPoly{1, 2, 1}), std::invalid_argument);
    EXPECT_THROW(bad_prime_bound_squarefree(ZPoly{3}), std::invalid_argument);
    EXPECT_THROW(resultant_z(ZPoly{}, ZPoly{1, 1}), std::invalid_argument);
}

TEST(ZPoly, ResultantVanishesExactlyAtBadPrimes) {
    // Res(f, f') mod p = 0 iff f mod p has a repeated factor (leading coefficient 1 keeps the degree).
    const ZPoly f{3, -2, 5, 1};
    const BigInt r = resultant_z(f, zpoly_derivative(f));
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u}) {
        const Field F({p, 1});
        const Poly g = reduce_mod_p(F, f).poly;
        const bool repeated = poly_gcd(F, g, derivative(F, g)).degree() > 0;
        EXPECT_EQ(r % p == 0, repeated) << p;
    }
}

TEST(ZPoly, BareissMatchesCofactorExpansion) {
    std::vector<std::vector<BigInt>> m{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    EXPECT_EQ(bareiss_determinant(m), BigInt(4));
    std::vector<std::vector<BigInt>> z{{0, 1}, {1, 0}};
    EXPECT_EQ(bareiss_determinant(z), BigInt(-1));
    std::vector<std::vector<BigInt>> big{{BigInt("123456789012345678901"), 1}, {1, 1}};
    EXPECT_EQ(bareiss_determinant(big), BigInt("123456789012345678900"));
}
