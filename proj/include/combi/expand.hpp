#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "combi/exactnum.hpp"

namespace combi {

/// Exponent vector a_1^{e_1} ... a_m^{e_m}.
using Monomial = std::vector<std::uint64_t>;

/// Sparse polynomial in m commuting variables with natural coefficients.
/// No stored coefficient is zero and every monomial has length m. Terms are
/// kept in lexicographically descending exponent order.
class Poly {
 public:
  using Terms = std::map<Monomial, Nat, std::greater<>>;

  /// Throws InputError for zero variables, a monomial of the wrong length, or
  /// a zero coefficient.
  Poly(std::size_t variable_count, Terms terms);
  /// The constant polynomial c in m variables (the zero polynomial if c = 0).
  static Poly constant(std::size_t variable_count, const Nat& c);

  std::size_t variable_count() const { return variable_count_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  /// Coefficient of `monomial`, 0 if absent.
  Nat coefficient(const Monomial& monomial) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::size_t variable_count_;
  Terms terms_;
};

/// (a + b)^n = sum_k C(n,k) a^{n-k} b^k; variables a1 = a, a2 = b.
Poly binomial_expand(std::uint64_t n);

/// (a_1 + ... + a_m)^n, one term per composition of n into m parts.
/// Throws InputError for m = 0.
Poly multinomial_expand(std::uint64_t m, std::uint64_t n);

/// Exact value at `point`; throws InputError if its length differs from the
/// variable count.
Nat evaluate(const Poly& poly, std::span<const Nat> point);

/// "a1^2 + 2*a1*a2 + a2^2": terms joined by " + ", unit coefficients and zero
/// exponents elided, exponent 1 written bare. The zero polynomial renders as
/// "0" and a constant as its decimal value.
std::string render(const Poly& poly);

namespace detail {
/// poly * (a_1 + ... + a_m), re-collected. Only used to check the inductive
/// step of the multinomial formula.
Poly times_variable_sum(const Poly& poly);
}  // namespace detail

}  // namespace combi
