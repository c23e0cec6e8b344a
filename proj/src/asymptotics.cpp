#include "combi/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "combi/errors.hpp"
#include "combi/exactnum.hpp"
#include "combi/mapscount.hpp"

namespace combi {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// ½ln(2π) − 11/12, correctly rounded. Evaluating it in double would lose
// about 400 ulps to cancellation.
constexpr double kUpperMarginAtOne = 2.2718665380060751136630697389509731947e-3;

// u_k − u_{k+1}; see BinetReport.
double margin_step(std::uint64_t k) {
  const double x = 1.0 / (2.0 * static_cast<double>(k) + 1.0);
  const double y = x * x;
  double power = y * y;
  double sum = 0;
  for (int j = 2;; ++j) {
    const double term = power * (2.0 * j - 2.0) / (3.0 * (2.0 * j + 1.0));
    sum += term;
    if (term <= kEps * sum) break;
    power *= y;
  }
  return sum;
}

Rat alternating_exp_partial(std::uint64_t n) {
  Rat sum;
  Nat fact(1u);
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k > 0) fact *= Nat(k);
    const Rat term = Rat(1) / Rat(fact);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Rat abs(Rat r) { return r.sign() < 0 ? -r : r; }

}  // namespace

double log_factorial(std::uint64_t n) {
  double sum = 0;
  double compensation = 0;
  for (std::uint64_t k = 2; k <= n; ++k) {
    const double v = std::log(static_cast<double>(k));
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      compensation += (sum - t) + v;
    else
      compensation += (v - t) + sum;
    sum = t;
  }
  return sum + compensation;
}

double stirling_approx_log(std::uint64_t n) {
  if (n == 0) throw InputError("Stirling's approximation needs n >= 1");
  const double x = static_cast<double>(n);
  return 0.5 * std::log(2.0 * std::numbers::pi * x) + x * std::log(x) - x;
}

BinetReport binet_report(std::uint64_t n) {
  if (n < 1 || n > 1'000'000) throw InputError("Binet report needs 1 <= n <= 10^6, got " + std::to_string(n));
  const double x = static_cast<double>(n);

  BinetReport r;
  r.n = n;
  r.log_factorial = log_factorial(n);
  r.lambda_n = r.log_factorial - stirling_approx_log(n);
  r.lower = 1.0 / (12.0 * x + 1.0);
  r.upper = 1.0 / (12.0 * x);

  double upper_margin = kUpperMarginAtOne;
  for (std::uint64_t k = 1; k < n; ++k) upper_margin -= margin_step(k);
  r.upper_margin = upper_margin;
  // 1/(12n) − 1/(12n+1) = 1/(12n(12n+1)), so λ_n − lower = that − u_n.
  r.lower_margin = 1.0 / (12.0 * x * (12.0 * x + 1.0)) - upper_margin;
  r.lambda_refined = r.upper - upper_margin;

  r.margin_budget = (x + 5.0) * kEps * kUpperMarginAtOne + 2.0 * kEps / (12.0 * x * (12.0 * x + 1.0));
  r.direct_budget = 4.0 * kEps * (1.0 + x * std::log(x));
  r.strict = r.lower < r.upper && r.upper_margin > r.margin_budget && r.lower_margin > r.margin_budget;
  r.direct_consistent = std::abs(r.lambda_n - r.lambda_refined) <= r.direct_budget;
  return r;
}

double derangement_ratio(std::uint64_t n) {
  if (n < 1 || n > 170) throw InputError("derangement ratio needs 1 <= n <= 170, got " + std::to_string(n));
  return (Rat(count_derangements(n)) / Rat(factorial(n))).to_double();
}

bool derangement_ratio_within_bound(std::uint64_t n) {
  if (n < 1) throw InputError("derangement ratio needs n >= 1");
  const Rat ratio = Rat(count_derangements(n)) / Rat(factorial(n));
  const Rat bound = Rat(1) / Rat(factorial(n + 1));
  // Partial sums of an alternating series with decreasing terms bracket its limit.
  const Rat a = alternating_exp_partial(n + 2);
  const Rat b = alternating_exp_partial(n + 3);
  return abs(ratio - a) <= bound && abs(ratio - b) <= bound;
}

}  // namespace combi
