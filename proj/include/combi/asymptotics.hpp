#pragma once

#include <cstdint>

namespace combi {

/// ln n! as sum_{k=2}^{n} ln k, accumulated in increasing k with Neumaier
/// compensated summation. log_factorial(0) = log_factorial(1) = 0.
double log_factorial(std::uint64_t n);

/// ln of Stirling's approximation sqrt(2πn)(n/e)^n: ½ln(2πn) + n ln n − n.
/// Throws InputError for n = 0.
double stirling_approx_log(std::uint64_t n);

/// Binet's correction λ_n in n! = sqrt(2πn)(n/e)^n e^{λ_n}, checked against
/// 1/(12n+1) < λ_n < 1/(12n).
///
/// λ_n is reported two ways. `lambda_n` is the direct difference
/// log_factorial(n) − stirling_approx_log(n); it carries an absolute error of
/// order n·ε·ln n (`direct_budget`), which exceeds the distance from λ_n to
/// the upper bound (about 1/(360n³)) once n passes a few hundred.
///
/// The margins are therefore taken from a cancellation-free route. With
/// u_n = 1/(12n) − λ_n, one has u_1 = ½ln(2π) − 11/12 and
///   u_n − u_{n+1} = sum_{j>=2} x^{2j} (2j−2) / (3(2j+1)),  x = 1/(2n+1),
/// every term positive. Summing these increments keeps the absolute error
/// near (n+5)·ε·u_1 (`margin_budget`), far below u_n for n <= 10^6.
struct BinetReport {
  std::uint64_t n = 0;
  double lambda_n = 0;        // direct route
  double lambda_refined = 0;  // 1/(12n) − upper_margin
  double lower = 0;           // 1/(12n+1)
  double upper = 0;           // 1/(12n)
  double log_factorial = 0;
  double upper_margin = 0;    // 1/(12n) − λ_n, increment route
  double lower_margin = 0;    // λ_n − 1/(12n+1), increment route
  double margin_budget = 0;   // error bound on either margin
  double direct_budget = 0;   // error bound on lambda_n
  bool strict = false;        // both margins exceed margin_budget
  bool direct_consistent = false;  // |lambda_n − lambda_refined| <= direct_budget
};

/// Throws InputError unless 1 <= n <= 10^6.
BinetReport binet_report(std::uint64_t n);

/// p_n / n! evaluated exactly, then rounded to double. Throws InputError
/// unless 1 <= n <= 170.
double derangement_ratio(std::uint64_t n);

/// Exact check of |p_n/n! − e^{−1}| <= 1/(n+1)!. e^{−1} is bracketed by two
/// consecutive partial sums of sum_k (−1)^k/k! beyond index n, and the bound
/// is verified against both ends of the bracket in rational arithmetic.
bool derangement_ratio_within_bound(std::uint64_t n);

}  // namespace combi
