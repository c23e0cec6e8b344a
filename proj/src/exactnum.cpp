#include "combi/exactnum.hpp"

#include <algorithm>
#include <ostream>

#include "combi/errors.hpp"

namespace combi {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_digits(std::string_view s) { return mpz_class(std::string(s), 10); }

}  // namespace

Nat Nat::from_integer(mpz_class value) {
  if (sgn(value) < 0) throw InputError("negative value is not a natural number: " + value.get_str());
  return Nat(std::move(value));
}

Nat Nat::parse(std::string_view text) {
  if (!all_digits(text)) throw InputError("not a decimal natural number: '" + std::string(text) + "'");
  return Nat(parse_digits(text));
}

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw InputError("value does not fit in 64 bits: " + str());
  return value_.get_ui();
}

Nat& Nat::operator-=(const Nat& rhs) {
  if (cmp(value_, rhs.value_) < 0) throw InputError("natural subtraction would go negative");
  value_ -= rhs.value_;
  return *this;
}

Nat divide_exact(const Nat& dividend, const Nat& divisor) {
  if (divisor.is_zero()) throw InputError("division by zero");
  if (!mpz_divisible_p(dividend.value_.get_mpz_t(), divisor.value_.get_mpz_t()))
    throw ConsistencyError(divisor.str() + " does not divide " + dividend.str());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), dividend.value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return Nat(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.str(); }

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw InputError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  if (!all_digits(num_part)) throw InputError("malformed rational: '" + original + "'");
  mpz_class num = parse_digits(num_part);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_part = text.substr(slash + 1);
    if (!all_digits(den_part)) throw InputError("malformed rational: '" + original + "'");
    den = parse_digits(den_part);
    if (sgn(den) == 0) throw InputError("zero denominator: '" + original + "'");
  }
  if (negative) num = -num;
  return Rat(num, den);
}

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.sign() == 0) throw InputError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Nat factorial(std::uint64_t n) {
  Nat result(1u);
  for (std::uint64_t k = 1; k <= n; ++k) result *= Nat(k);
  return result;
}

Nat power(const Nat& base, std::uint64_t exp) {
  mpz_class result;
  mpz_pow_ui(result.get_mpz_t(), base.value().get_mpz_t(), exp);
  return Nat::from_integer(std::move(result));
}

Nat falling_factorial(std::uint64_t n, std::uint64_t m) {
  if (m > n) return Nat(0u);
  Nat result(1u);
  for (std::uint64_t i = 0; i < m; ++i) result *= Nat(n - i);
  return result;
}

inline namespace literals {
Nat operator""_n(const char* digits) {
  std::string s(digits);
  std::erase(s, '\'');
  return Nat::parse(s);
}
}  // namespace literals

}  // namespace combi
