#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace combi {

/// Arbitrary-precision nonnegative integer. Every exact count is a Nat.
///
/// Backed by a GMP integer; the wrapper exists to keep the nonnegativity
/// invariant, so operations that could leave the naturals (subtraction,
/// division) are checked and throw InputError instead of wrapping.
class Nat {
 public:
  Nat() = default;
  template <std::unsigned_integral T>
  Nat(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT

  /// Throws InputError if `value` is negative.
  static Nat from_integer(mpz_class value);
  /// Plain decimal digits only: no sign, no whitespace, at least one digit.
  static Nat parse(std::string_view text);

  std::string str() const { return value_.get_str(); }
  const mpz_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool fits_u64() const { return value_.fits_ulong_p(); }
  std::uint64_t to_u64() const;  // throws InputError if too large
  double to_double() const { return value_.get_d(); }

  Nat& operator+=(const Nat& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Nat& operator*=(const Nat& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws InputError if rhs > *this.
  Nat& operator-=(const Nat& rhs);

  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }
  friend Nat operator-(Nat lhs, const Nat& rhs) { return lhs -= rhs; }

  friend bool operator==(const Nat& a, const Nat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// Quotient of an exact division; throws ConsistencyError if `divisor`
  /// does not divide `dividend`, InputError on a zero divisor.
  friend Nat divide_exact(const Nat& dividend, const Nat& divisor);

 private:
  explicit Nat(mpz_class value) : value_(std::move(value)) {}
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

/// Exact rational in canonical form (den > 0, gcd(|num|, den) = 1).
class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rat(const Nat& value) : value_(value.value()) {}  // NOLINT
  /// Throws InputError on a zero denominator.
  Rat(const mpz_class& num, const mpz_class& den);

  /// Accepts "p", "-p", "p/q" and "-p/q" with decimal digits only, q ≠ 0.
  static Rat parse(std::string_view text);

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  Rat& operator+=(const Rat& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rat& operator-=(const Rat& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rat& operator*=(const Rat& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws InputError on division by zero.
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  friend Rat operator-(Rat r) {
    r.value_ = -r.value_;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// n! by the recursion (n+1)! = (n+1)·n!, run iteratively.
Nat factorial(std::uint64_t n);

/// base^exp, with 0^0 = 1.
Nat power(const Nat& base, std::uint64_t exp);

/// n(n-1)...(n-m+1): m descending factors; 1 for m = 0, 0 for m > n.
Nat falling_factorial(std::uint64_t n, std::uint64_t m);

inline namespace literals {
/// 3'628'800_n. Raw form, so literals wider than 64 bits are fine.
Nat operator""_n(const char* digits);
}  // namespace literals

}  // namespace combi
