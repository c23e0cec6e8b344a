#include "combi/exactnum.hpp"

#include <gtest/gtest.h>

#include <random>

#include "combi/errors.hpp"

namespace combi {
namespace {

TEST(Factorial, Values) {
  EXPECT_EQ(factorial(0), 1_n);
  EXPECT_EQ(factorial(5), 120_n);  // 1·2·3·4·5
  EXPECT_EQ(factorial(10), 3'628'800_n);
  EXPECT_EQ(factorial(20), 2'432'902'008'176'640'000_n);
  // First value past 64 bits.
  EXPECT_EQ(factorial(21), 51'090'942'171'709'440'000_n);
}

TEST(Factorial, Recursion) {
  Nat prev = factorial(0);
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const Nat next = factorial(n + 1);
    EXPECT_EQ(next, Nat(n + 1) * prev) << n;
    prev = next;
  }
}

TEST(Power, AgreesWithNaiveLoop) {
  EXPECT_EQ(power(2_n, 10), 1024_n);
  EXPECT_EQ(power(0_n, 0), 1_n);
  EXPECT_EQ(power(7_n, 1), 7_n);
  EXPECT_EQ(power(0_n, 3), 0_n);
  for (std::uint64_t b = 0; b <= 12; ++b) {
    Nat naive(1u);
    for (std::uint64_t e = 0; e <= 70; ++e) {
      EXPECT_EQ(power(Nat(b), e), naive) << b << "^" << e;
      naive *= Nat(b);
    }
  }
}

TEST(FallingFactorial, EdgeCases) {
  EXPECT_EQ(falling_factorial(5, 2), 20_n);
  EXPECT_EQ(falling_factorial(3, 4), 0_n);
  for (std::uint64_t n = 0; n < 10; ++n) EXPECT_EQ(falling_factorial(n, 0), 1_n);
  EXPECT_EQ(falling_factorial(0, 0), 1_n);
  EXPECT_EQ(falling_factorial(0, 1), 0_n);
}

TEST(FallingFactorial, ClosedForm) {
  for (std::uint64_t n = 0; n <= 100; ++n)
    for (std::uint64_t m = 0; m <= n; ++m)
      ASSERT_EQ(falling_factorial(n, m) * factorial(n - m), factorial(n)) << n << "," << m;
}

TEST(Nat, DecimalRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Nat x(1u);
    const int limbs = static_cast<int>(rng() % 6);
    for (int j = 0; j < limbs; ++j) x = x * Nat(rng()) + Nat(rng() % 1000);
    EXPECT_EQ(Nat::parse(x.str()), x);
  }
  EXPECT_EQ(Nat::parse("0").str(), "0");
}

TEST(Nat, RejectsMalformedText) {
  for (const char* bad : {"", "-1", "+1", " 1", "1 ", "1e3", "0x10", "12a"})
    EXPECT_THROW(Nat::parse(bad), InputError) << bad;
}

TEST(Nat, SubtractionStaysNatural) {
  EXPECT_EQ(10_n - 3_n, 7_n);
  EXPECT_THROW(3_n - 10_n, InputError);
  EXPECT_THROW(Nat::from_integer(mpz_class(-1)), InputError);
}

TEST(Nat, ExactDivision) {
  EXPECT_EQ(divide_exact(3'628'800_n, 720_n), 5040_n);
  EXPECT_THROW(divide_exact(10_n, 3_n), ConsistencyError);
  EXPECT_THROW(divide_exact(10_n, 0_n), InputError);
}

TEST(Rat, CanonicalForm) {
  const Rat r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rat(mpz_class(8), mpz_class(4)).str(), "2");
  EXPECT_TRUE(Rat(mpz_class(8), mpz_class(4)).is_integer());
  EXPECT_EQ(Rat::parse("2/4"), Rat::parse("1/2"));
  EXPECT_THROW(Rat(mpz_class(1), mpz_class(0)), InputError);
}

TEST(Rat, Parse) {
  EXPECT_EQ(Rat::parse("7").str(), "7");
  EXPECT_EQ(Rat::parse("-7/21").str(), "-1/3");
  EXPECT_EQ(Rat::parse("0/5").str(), "0");
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1//2", "1/2/3", "--1", "1/-2", "a/b", " 1/2", "1.5"})
    EXPECT_THROW(Rat::parse(bad), InputError) << bad;
}

TEST(Rat, AddThenSubtractIsIdentity) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long> den(1, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    const Rat x(mpz_class(num(rng)), mpz_class(den(rng)));
    const Rat y(mpz_class(num(rng)), mpz_class(den(rng)));
    const Rat back = (x + y) - y;
    ASSERT_EQ(back, x);
    ASSERT_EQ(back.str(), x.str());
    ASSERT_EQ(Rat::parse(x.str()), x);
  }
}

TEST(Rat, Arithmetic) {
  EXPECT_EQ(Rat::parse("1/2") * Rat::parse("2/3"), Rat::parse("1/3"));
  EXPECT_EQ(Rat::parse("1/2") / Rat::parse("1/4"), Rat(2));
  EXPECT_THROW(Rat(1) / Rat(0), InputError);
  EXPECT_EQ(-Rat::parse("1/2"), Rat::parse("-1/2"));
  EXPECT_LT(Rat::parse("1/3"), Rat::parse("1/2"));
}

}  // namespace
}  // namespace combi
