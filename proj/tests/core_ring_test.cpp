#include "frieze_mod/core_ring.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

using namespace frieze_mod;

TEST(Modulus, RejectsBelowTwo) {
    EXPECT_THROW(Modulus{1}, std::domain_error);
    EXPECT_THROW(Modulus{0}, std::domain_error);
    EXPECT_NO_THROW(Modulus{2});
}

TEST(Residue, NormalizesNegatives) {
    EXPECT_EQ((Residue{-7, Modulus{90}}.value()), 83);
    EXPECT_EQ((Residue{-1, Modulus{7}}.value()), 6);
    EXPECT_EQ((Residue{23, Modulus{5}}.value()), 3);
}

TEST(Residue, ArithmeticMatchesIntegers) {
    const Modulus m{13};
    for (int a = -20; a <= 20; ++a)
        for (int b = -20; b <= 20; ++b) {
            const Residue x{a, m}, y{b, m};
            EXPECT_EQ((x + y).value(), ((a + b) % 13 + 13) % 13);
            EXPECT_EQ((x - y).value(), ((a - b) % 13 + 13) % 13);
            EXPECT_EQ((x * y).value(), ((a * b) % 13 + 13) % 13);
        }
    EXPECT_EQ((-Residue{3, m}).value(), 10);
}

TEST(Residue, MismatchedModuliThrow) {
    EXPECT_THROW(Residue(1, Modulus{5}) + Residue(1, Modulus{7}), std::domain_error);
}

TEST(Modulus, MulDoesNotOverflow) {
    const Modulus m{(std::int64_t{1} << 61) - 1};
    const std::int64_t a = m.value() - 1;
    EXPECT_EQ(m.mul(a, a), 1);  // (-1)^2
}

TEST(Factorize, SmallValues) {
    const Factorization f = factorize(1100);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], (PrimePower{2, 2}));
    EXPECT_EQ(f[1], (PrimePower{5, 2}));
    EXPECT_EQ(f[2], (PrimePower{11, 1}));
    EXPECT_THROW(factorize(1), std::domain_error);
}

TEST(Factorize, ProductRestoresN) {
    for (std::int64_t n = 2; n <= 2000; ++n) {
        std::int64_t prod = 1;
        for (const PrimePower& pp : factorize(n)) {
            EXPECT_TRUE(is_prime(pp.prime));
            prod *= pp.value();
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(IsPrimePower, Examples) {
    EXPECT_TRUE(is_prime_power(256));
    EXPECT_TRUE(is_prime_power(243));
    EXPECT_TRUE(is_prime_power(7));
    EXPECT_FALSE(is_prime_power(12));
    EXPECT_FALSE(is_prime_power(1));
}

TEST(Project, ReducesToDivisor) {
    EXPECT_EQ(project(Residue{83, Modulus{90}}, 9).value(), 2);
    EXPECT_THROW((void)project(Residue{1, Modulus{90}}, 7), std::domain_error);
}

TEST(CrtCombine, MatchesBruteForce) {
    // 83 mod 90 from its components: 83 = 1 mod 2, 2 mod 9, 3 mod 5.
    const std::vector<Residue> parts{Residue{1, Modulus{2}}, Residue{2, Modulus{9}},
                                     Residue{3, Modulus{5}}};
    const std::int64_t got = crt_combine(parts, Modulus{90}).value();
    int matches = 0;
    std::int64_t brute = -1;
    for (std::int64_t x = 0; x < 90; ++x)
        if (x % 2 == 1 && x % 9 == 2 && x % 5 == 3) {
            ++matches;
            brute = x;
        }
    EXPECT_EQ(matches, 1);
    EXPECT_EQ(got, brute);
}

TEST(CrtCombine, RoundTripsProjection) {
    for (std::int64_t n : {12, 60, 90, 210, 1100}) {
        const Modulus m{n};
        for (std::int64_t k = 0; k < n; ++k) {
            std::vector<Residue> parts;
            for (const PrimePower& pp : factorize(n)) parts.push_back(project(Residue{k, m}, pp.value()));
            EXPECT_EQ(crt_combine(parts, m).value(), k);
        }
    }
}

TEST(CrtCombine, RejectsWrongParts) {
    const std::vector<Residue> parts{Residue{1, Modulus{2}}, Residue{1, Modulus{3}}};
    EXPECT_THROW((void)crt_combine(parts, Modulus{12}), std::domain_error);
}
