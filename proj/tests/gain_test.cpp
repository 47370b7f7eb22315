#include <gtest/gtest.h>

#include <complex>
#include <random>
#include <ratio>

#include "gaingraph/gain.hpp"

using namespace gaingraph;

namespace {

template <class R>
UnitGain from_ratio() {
  return UnitGain(R::num, R::den);
}

UnitGain random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> den(1, 360);
  const std::int64_t q = den(rng);
  return UnitGain(std::uniform_int_distribution<std::int64_t>(-3 * q, 3 * q)(rng), q);
}

}  // namespace

TEST(UnitGain, NormalizesToLowestTermsInUnitInterval) {
  EXPECT_EQ(UnitGain(2, 4), UnitGain(1, 2));
  EXPECT_EQ(UnitGain(5, 4), UnitGain(1, 4));
  EXPECT_EQ(UnitGain(-1, 4), UnitGain(3, 4));
  EXPECT_EQ(UnitGain(3, -4), UnitGain(1, 4));
  EXPECT_EQ(UnitGain(7, 7), UnitGain::identity());
  const UnitGain g(-6, 9);
  EXPECT_EQ(g.num(), 1);
  EXPECT_EQ(g.den(), 3);
  EXPECT_THROW(UnitGain(1, 0), std::invalid_argument);
}

TEST(UnitGain, MulExamples) {
  EXPECT_EQ(mul(UnitGain(1, 4), UnitGain(1, 4)), UnitGain(1, 2));
  const UnitGain x(5, 7);
  EXPECT_EQ(mul(x, UnitGain::identity()), x);
  // 3/8 + 3/4 = 9/8, which is 1/8 mod 1.
  using Sum = std::ratio_subtract<std::ratio_add<std::ratio<3, 8>, std::ratio<3, 4>>, std::ratio<1>>;
  EXPECT_EQ(mul(UnitGain(3, 8), UnitGain(3, 4)), from_ratio<Sum>());
  EXPECT_EQ(from_ratio<Sum>(), UnitGain(1, 8));
}

TEST(UnitGain, InvExamples) {
  EXPECT_EQ(inv(UnitGain::identity()), UnitGain::identity());
  EXPECT_EQ(inv(UnitGain(1, 2)), UnitGain(1, 2));
  using Inverse = std::ratio_subtract<std::ratio<1>, std::ratio<1, 3>>;
  EXPECT_EQ(inv(UnitGain(1, 3)), from_ratio<Inverse>());
}

TEST(UnitGain, ToComplexExactAtQuarterTurns) {
  EXPECT_EQ(to_complex(UnitGain(0, 1)), std::complex<double>(1, 0));
  EXPECT_EQ(to_complex(UnitGain(1, 2)), std::complex<double>(-1, 0));
  EXPECT_EQ(to_complex(UnitGain(1, 4)), std::complex<double>(0, 1));
  EXPECT_EQ(to_complex(UnitGain(3, 4)), std::complex<double>(0, -1));
  const auto z = to_complex(UnitGain(1, 3));
  EXPECT_NEAR(z.real(), -0.5, 1e-15);
  EXPECT_NEAR(z.imag(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(UnitGain, GroupAxiomsOnRandomRationals) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const UnitGain a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    ASSERT_EQ(mul(a, b), mul(b, a));
    ASSERT_EQ(mul(a, UnitGain::identity()), a);
    ASSERT_TRUE(mul(a, inv(a)).is_identity());
    ASSERT_EQ(inv(inv(a)), a);
    ASSERT_GE(a.num(), 0);
    ASSERT_LT(a.num(), a.den());
  }
}

TEST(UnitGain, ToComplexIsAHomomorphism) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const UnitGain a = random_rational(rng), b = random_rational(rng);
    const auto za = to_complex(a), zb = to_complex(b);
    ASSERT_NEAR(std::abs(za), 1.0, 1e-15);
    ASSERT_LE(std::abs(to_complex(mul(a, b)) - za * zb), 1e-14);
  }
}

TEST(UnitGain, LargeDenominatorsStayExact) {
  const UnitGain a(1, 1'000'000'007), b(1, 998'244'353);
  const UnitGain s = mul(a, b);
  EXPECT_EQ(mul(s, inv(b)), a);
  EXPECT_THROW(mul(UnitGain(1, INT64_MAX), UnitGain(1, INT64_MAX - 1)), std::overflow_error);
}

TEST(UnitGain, TextRoundTrip) {
  EXPECT_EQ(to_string(UnitGain::identity()), "0");
  EXPECT_EQ(to_string(UnitGain(3, 4)), "3/4");
  EXPECT_EQ(parse_gain("3/4"), UnitGain(3, 4));
  EXPECT_EQ(parse_gain("6/8"), UnitGain(3, 4));
  EXPECT_EQ(parse_gain("3"), UnitGain::identity());
  EXPECT_EQ(parse_gain("-1/4"), UnitGain(3, 4));
  EXPECT_EQ(parse_gain("0"), UnitGain::identity());
  EXPECT_FALSE(parse_gain(""));
  EXPECT_FALSE(parse_gain("1/0"));
  EXPECT_FALSE(parse_gain("1/-2"));
  EXPECT_FALSE(parse_gain("a/b"));
  EXPECT_FALSE(parse_gain("1/2/3"));
  EXPECT_FALSE(parse_gain("0.5"));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const UnitGain a = random_rational(rng);
    ASSERT_EQ(parse_gain(to_string(a)), a);
  }
}

TEST(GroupSpec, ValidateExamples) {
  EXPECT_FALSE(validate_spec(GroupSpec::circle(UnitGain(1, 2))));
  EXPECT_FALSE(validate_spec(GroupSpec::roots_of_unity(4, UnitGain::identity())));
  const auto bad = validate_spec(GroupSpec::roots_of_unity(4, UnitGain(1, 3)));
  ASSERT_TRUE(bad);
  EXPECT_NE(bad->find("square"), std::string::npos);
}

TEST(GroupSpec, ValidateMembershipAndOrder) {
  const auto odd = validate_spec(GroupSpec::roots_of_unity(3, UnitGain(1, 2)));
  ASSERT_TRUE(odd);
  EXPECT_NE(odd->find("not in group"), std::string::npos);
  EXPECT_TRUE(validate_spec(GroupSpec::roots_of_unity(0, UnitGain::identity())));
  EXPECT_FALSE(validate_spec(GroupSpec::sign(UnitGain::identity())));
  EXPECT_FALSE(validate_spec(GroupSpec::sign(UnitGain(1, 2))));
  EXPECT_TRUE(validate_spec(GroupSpec::circle(UnitGain(1, 4))));
}

TEST(GroupSpec, Membership) {
  const auto mu6 = GroupSpec::roots_of_unity(6);
  EXPECT_TRUE(mu6.contains(UnitGain(1, 3)));
  EXPECT_TRUE(mu6.contains(UnitGain(1, 2)));
  EXPECT_FALSE(mu6.contains(UnitGain(1, 4)));
  EXPECT_TRUE(GroupSpec::sign().contains(UnitGain(1, 2)));
  EXPECT_FALSE(GroupSpec::sign().contains(UnitGain(1, 4)));
  EXPECT_TRUE(GroupSpec::circle().contains(UnitGain(17, 360)));
}
