#include "combi/expand.hpp"

#include <string>

#include "combi/binomials.hpp"
#include "combi/errors.hpp"

namespace combi {

Poly::Poly(std::size_t variable_count, Terms terms)
    : variable_count_(variable_count), terms_(std::move(terms)) {
  if (variable_count_ == 0) throw InputError("a polynomial needs at least one variable");
  for (const auto& [monomial, coeff] : terms_) {
    if (monomial.size() != variable_count_)
      throw InputError("monomial has " + std::to_string(monomial.size()) + " exponents, expected " +
                       std::to_string(variable_count_));
    if (coeff.is_zero()) throw InputError("zero coefficients are not stored");
  }
}

Poly Poly::constant(std::size_t variable_count, const Nat& c) {
  Terms terms;
  if (!c.is_zero()) terms.emplace(Monomial(variable_count, 0), c);
  return Poly(variable_count, std::move(terms));
}

Nat Poly::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Nat(0u) : it->second;
}

Poly binomial_expand(std::uint64_t n) {
  Poly::Terms terms;
  for (std::uint64_t k = 0; k <= n; ++k)
    terms.emplace(Monomial{n - k, k}, binomial(n, static_cast<std::int64_t>(k)));
  return Poly(2, std::move(terms));
}

Poly multinomial_expand(std::uint64_t m, std::uint64_t n) {
  Poly::Terms terms;
  std::vector<std::int64_t> ks(m);
  CompositionStream stream(m, n);
  while (auto c = stream.next()) {
    for (std::size_t i = 0; i < m; ++i) ks[i] = static_cast<std::int64_t>(c->parts[i]);
    terms.emplace(std::move(c->parts), multinomial(n, ks));
  }
  return Poly(m, std::move(terms));
}

Nat evaluate(const Poly& poly, std::span<const Nat> point) {
  if (point.size() != poly.variable_count())
    throw InputError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(poly.variable_count()));
  Nat sum(0u);
  for (const auto& [monomial, coeff] : poly.terms()) {
    Nat term = coeff;
    for (std::size_t i = 0; i < monomial.size(); ++i)
      if (monomial[i] != 0) term *= power(point[i], monomial[i]);
    sum += term;
  }
  return sum;
}

std::string render(const Poly& poly) {
  if (poly.terms().empty()) return "0";
  std::string out;
  for (const auto& [monomial, coeff] : poly.terms()) {
    if (!out.empty()) out += " + ";
    std::string term;
    const bool unit = coeff == Nat(1u);
    if (!unit) term = coeff.str();
    for (std::size_t i = 0; i < monomial.size(); ++i) {
      if (monomial[i] == 0) continue;
      if (!term.empty()) term += '*';
      term += 'a' + std::to_string(i + 1);
      if (monomial[i] != 1) term += '^' + std::to_string(monomial[i]);
    }
    out += term.empty() ? std::string("1") : term;
  }
  return out;
}

namespace detail {

Poly times_variable_sum(const Poly& poly) {
  Poly::Terms product;
  for (const auto& [monomial, coeff] : poly.terms()) {
    for (std::size_t i = 0; i < poly.variable_count(); ++i) {
      Monomial shifted = monomial;
      ++shifted[i];
      product[shifted] += coeff;
    }
  }
  return Poly(poly.variable_count(), std::move(product));
}

}  // namespace detail
}  // namespace combi
