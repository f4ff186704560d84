#include "frieze_mod/hypotheses.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace frieze_mod;
using namespace frieze_mod::hyp;

TEST(TwiceOdd, Examples) {
    EXPECT_TRUE(is_twice_odd(2));
    EXPECT_TRUE(is_twice_odd(6));
    EXPECT_TRUE(is_twice_odd(90));
    EXPECT_FALSE(is_twice_odd(4));
    EXPECT_FALSE(is_twice_odd(9));
}

TEST(ThreeTimesCoprimeToSix, Examples) {
    EXPECT_TRUE(is_three_times_coprime_to_six(3));
    EXPECT_TRUE(is_three_times_coprime_to_six(15));
    EXPECT_TRUE(is_three_times_coprime_to_six(21));
    EXPECT_FALSE(is_three_times_coprime_to_six(9));
    EXPECT_FALSE(is_three_times_coprime_to_six(6));
    EXPECT_FALSE(is_three_times_coprime_to_six(35));
}

TEST(ThreeTimesCoprimeToSix, MatchesDefinition) {
    for (std::int64_t n = 2; n <= 1000; ++n) {
        bool expected = false;
        for (std::int64_t m = 1; 3 * m <= n; ++m)
            if (3 * m == n && std::gcd(m, std::int64_t{6}) == 1) expected = true;
        EXPECT_EQ(is_three_times_coprime_to_six(n), expected) << n;
    }
}

TEST(SizeBoundApplies, Examples) {
    EXPECT_FALSE(size_bound_applies(2));
    EXPECT_FALSE(size_bound_applies(15));
    EXPECT_TRUE(size_bound_applies(70));
    EXPECT_TRUE(size_bound_applies(9));
}

TEST(TwoThreeForm, Examples) {
    const auto f90 = two_three_form(90);
    ASSERT_TRUE(f90.has_value());
    EXPECT_EQ(f90->a, 2);
    EXPECT_EQ(f90->b, 5);
    EXPECT_FALSE(two_three_form(70).has_value());    // no factor 3
    EXPECT_FALSE(two_three_form(18).has_value());    // b = 1
    EXPECT_FALSE(two_three_form(60).has_value());    // N/2 even
    EXPECT_FALSE(two_three_form(245).has_value());   // odd
    EXPECT_TRUE(two_three_form(30).has_value());
}

TEST(TwoThreeForm, MatchesDefinition) {
    for (std::int64_t n = 2; n <= 2000; ++n) {
        bool expected = false;
        for (int a = 1; power(3, a) * 2 <= n; ++a)
            for (std::int64_t b = 3; 2 * power(3, a) * b <= n; b += 2)
                if (b % 3 != 0 && 2 * power(3, a) * b == n) expected = true;
        EXPECT_EQ(two_three_form(n).has_value(), expected) << n;
    }
}

TEST(TwoPowers, Examples) {
    EXPECT_EQ(two_exponent_if_power(1), 0);
    EXPECT_EQ(two_exponent_if_power(16), 4);
    EXPECT_FALSE(two_exponent_if_power(12).has_value());
    EXPECT_EQ(two_adic(80), 4);
    EXPECT_EQ(two_adic(7), 0);
}

TEST(OddPrimePower, Examples) {
    EXPECT_EQ(odd_prime_power(9), (PrimePower{3, 2}));
    EXPECT_EQ(odd_prime_power(11), (PrimePower{11, 1}));
    EXPECT_FALSE(odd_prime_power(8).has_value());
    EXPECT_FALSE(odd_prime_power(15).has_value());
    EXPECT_FALSE(odd_prime_power(1).has_value());
}
