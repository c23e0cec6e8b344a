#include "combi/mapscount.hpp"

#include <string>

#include "combi/binomials.hpp"
#include "combi/errors.hpp"

namespace combi {

Nat count_permutations(std::uint64_t n) { return factorial(n); }

Nat count_functions(std::uint64_t m, std::uint64_t n) { return power(Nat(n), m); }

Nat count_injections(std::uint64_t m, std::uint64_t n) { return falling_factorial(n, m); }

Nat count_surjections(std::uint64_t n, std::uint64_t p) {
  if (p == 0) return Nat(n == 0 ? 1u : 0u);
  if (p > n) return Nat(0u);
  mpz_class sum = 0;
  for (std::uint64_t k = 0; k < p; ++k) {
    mpz_class term = binomial(p, static_cast<std::int64_t>(k)).value() * power(Nat(p - k), n).value();
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return Nat::from_integer(std::move(sum));
}

Nat stirling2(std::uint64_t n, std::uint64_t p) {
  const Nat surjections = count_surjections(n, p);
  try {
    return divide_exact(surjections, factorial(p));
  } catch (const ConsistencyError&) {
    throw ConsistencyError("S(" + std::to_string(n) + ", " + std::to_string(p) + ") = " +
                           surjections.str() + " is not divisible by " + std::to_string(p) + "!");
  }
}

Nat count_derangements(std::uint64_t n) {
  // n! - C(n,1)(n-1)! + C(n,2)(n-2)! - ... + (-1)^n
  mpz_class alternating = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    mpz_class term = binomial(n, static_cast<std::int64_t>(k)).value() * factorial(n - k).value();
    if (k % 2 == 0)
      alternating += term;
    else
      alternating -= term;
  }

  // n! * (1 - 1/1! + 1/2! - ... + (-1)^n/n!)
  Rat partial;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const Rat term = Rat(1) / Rat(factorial(k));
    if (k % 2 == 0)
      partial += term;
    else
      partial -= term;
  }
  const Rat scaled = Rat(factorial(n)) * partial;

  if (!scaled.is_integer() || scaled.numerator() != alternating)
    throw ConsistencyError("derangement formulas disagree at n = " + std::to_string(n));
  return Nat::from_integer(std::move(alternating));
}

}  // namespace combi
