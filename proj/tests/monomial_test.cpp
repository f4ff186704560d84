#include "frieze_mod/monomial.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace frieze_mod;

namespace {

MonomialSize size_of(std::int64_t n, std::int64_t k) {
    return minimal_monomial_size(Residue{k, Modulus{n}});
}

}  // namespace

TEST(MinimalSize, SmallModuli) {
    EXPECT_EQ(size_of(5, 2), (MonomialSize{5, SolutionSign::plus}));
    EXPECT_EQ(size_of(5, 1).size, 3);
    EXPECT_EQ(size_of(5, 4).size, 3);
    EXPECT_EQ(size_of(5, 0), (MonomialSize{2, SolutionSign::minus}));
    EXPECT_EQ(size_of(2, 1).size, 3);
    EXPECT_EQ(size_of(2, 0).size, 2);
}

TEST(MinimalSize, PaperValues) {
    EXPECT_EQ(size_of(35, 23).size, 70);
    EXPECT_EQ(size_of(12, 4).size, 12);
    EXPECT_EQ(size_of(90, 83).size, 90);
    EXPECT_EQ(size_of(1100, 152).size, 1100);
}

TEST(MinimalSize, OnlyZeroHasSizeTwo) {
    for (std::int64_t n = 2; n <= 60; ++n)
        for (std::int64_t k = 0; k < n; ++k) EXPECT_EQ(size_of(n, k).size == 2, k == 0);
}

TEST(MinimalSize, TwoGivesSizeN) {
    for (std::int64_t n = 3; n <= 100; ++n) EXPECT_EQ(size_of(n, 2).size, n);
}

TEST(SizeViaCrt, DerivedExample) {
    const SizeLaw law = size_via_crt(Residue{83, Modulus{90}});
    EXPECT_EQ(law.size(), 90);
}

TEST(SizeViaCrt, MultiplierTwo) {
    // 35 = 5 * 7, k = 23: the component signs disagree at lcm = 35.
    const SizeLaw law = size_via_crt(Residue{23, Modulus{35}});
    EXPECT_EQ(law.lcm_value, 35);
    EXPECT_EQ(law.multiplier, 2);
}

TEST(SizeViaCrt, AgreesWithDirectUpTo120) {
    for (std::int64_t n = 2; n <= 120; ++n)
        for (std::int64_t k = 0; k < n; ++k) {
            const MonomialSize direct = size_of(n, k);
            const SizeLaw law = size_via_crt(Residue{k, Modulus{n}});
            ASSERT_EQ(law.size(), direct.size) << "N=" << n << " k=" << k;
            ASSERT_EQ(law.sign, direct.sign) << "N=" << n << " k=" << k;
        }
}

TEST(ComponentProfile, OnePerPrimePower) {
    const auto comps = component_profile(Residue{83, Modulus{90}});
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0].prime_power, 2);
    EXPECT_EQ(comps[1].prime_power, 9);
    EXPECT_EQ(comps[2].prime_power, 5);
}

TEST(PrimePowerLadder, StepsByOneOrP) {
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t k = 0; k < 20; ++k) EXPECT_NO_THROW((void)prime_power_ladder(p, 4, k));
    EXPECT_THROW((void)prime_power_ladder(4, 2, 1), std::domain_error);
}

TEST(PrimeSizeLaw, AllOddPrimesBelow200) {
    for (std::int64_t p = 3; p < 200; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t k = 0; k < p; ++k) EXPECT_TRUE(check_prime_size_law(p, k).holds) << p << " " << k;
    }
}

TEST(HalfNLaw, EvenN) {
    for (std::int64_t n = 4; n <= 200; n += 2) EXPECT_TRUE(check_half_n_law(n).holds) << n;
    EXPECT_THROW((void)check_half_n_law(7), std::domain_error);
}

TEST(SharedFactorSize, Examples) {
    EXPECT_EQ(shared_factor_size(Residue{6, Modulus{12}}), 4);
    EXPECT_EQ(shared_factor_size(Residue{0, Modulus{12}}), 2);
    EXPECT_EQ(shared_factor_size(Residue{5, Modulus{25}}), 10);
    EXPECT_THROW((void)shared_factor_size(Residue{2, Modulus{12}}), std::domain_error);
}

TEST(SharedFactorSize, ExhaustiveUpTo200) {
    for (std::int64_t n = 2; n <= 200; ++n) {
        std::int64_t rad = 1;
        for (const PrimePower& pp : factorize(n)) rad *= pp.prime;
        for (std::int64_t k = 0; k < n; k += rad) EXPECT_NO_THROW((void)shared_factor_size(Residue{k, Modulus{n}}));
    }
}
