// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "combi/asymptotics.hpp"
#include "combi/binomials.hpp"
#include "combi/expand.hpp"
#include "combi/inclexcl.hpp"
#include "combi/mapscount.hpp"
#include "combi/oracle.hpp"
#include "random_family.hpp"

namespace {

using namespace combi;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

int g_failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(cat("exception: ", e.what()));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (time_limit_s > 0 && secs >= time_limit_s) out.fail(cat("took ", secs, " s, limit ", time_limit_s, " s"));
  if (!out.ok) ++g_failures;
  std::printf("[%s] %2d %-44s %8.3f s  %s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.c_str());
  std::fflush(stdout);
}

Outcome pascal_fidelity() {
  const std::vector<std::vector<unsigned>> printed = {
      {1},
      {1, 1},
      {1, 2, 1},
      {1, 3, 3, 1},
      {1, 4, 6, 4, 1},
      {1, 5, 10, 10, 5, 1},
      {1, 6, 15, 20, 15, 6, 1},
      {1, 7, 21, 35, 35, 21, 7, 1},
  };
  Outcome out;
  const auto rows = pascal_triangle(7);
  if (rows.size() != printed.size()) out.fail("wrong row count");
  int checked = 0;
  for (std::size_t n = 0; n < printed.size() && out.ok; ++n) {
    if (rows[n].size() != printed[n].size()) out.fail(cat("row ", n, " has wrong length"));
    for (std::size_t k = 0; k < printed[n].size() && out.ok; ++k, ++checked)
      if (rows[n][k] != Nat(printed[n][k])) out.fail(cat("entry (", n, ",", k, ") = ", rows[n][k]));
  }
  if (out.ok) out.detail = cat(checked, " entries match");
  return out;
}

Outcome ten_factorial() {
  Outcome out;
  const Nat v = factorial(10);
  if (v != Nat(3'628'800u)) out.fail(cat("10! = ", v));
  else out.detail = "10! = 3628800";
  return out;
}

Outcome binomial_routes() {
  Outcome out;
  std::size_t checked = 0;
  for (std::uint64_t n = 0; n <= 200 && out.ok; ++n) {
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n) && out.ok; ++k, ++checked) {
      const Nat closed = binomial_closed_form(n, k);
      if (closed != binomial_recurrence(n, k)) out.fail(cat("closed form != recurrence at (", n, ",", k, ")"));
      if (n <= 15 && closed != oracle::enum_subsets_k(n, k))
        out.fail(cat("closed form != enumeration at (", n, ",", k, ")"));
    }
  }
  if (out.ok) out.detail = cat(checked, " coefficients, three routes up to n=15");
  return out;
}

Outcome surjections() {
  Outcome out;
  for (std::uint64_t n = 0; n <= 7 && out.ok; ++n)
    for (std::uint64_t p = 0; p <= n && out.ok; ++p)
      if (count_surjections(n, p) != oracle::enum_maps(n, p, oracle::MapKind::kSurjective))
        out.fail(cat("S(", n, ",", p, ") != enumeration"));
  for (std::uint64_t n = 1; n <= 60 && out.ok; ++n)
    for (std::uint64_t p = 1; p <= n && out.ok; ++p)
      if (count_surjections(n, p) != Nat(p) * (count_surjections(n - 1, p) + count_surjections(n - 1, p - 1)))
        out.fail(cat("recurrence fails at (", n, ",", p, ")"));
  if (out.ok) out.detail = "enumeration n<=7, recurrence n<=60";
  return out;
}

Outcome stirling_numbers() {
  Outcome out;
  for (std::uint64_t n = 0; n <= 60 && out.ok; ++n)
    for (std::uint64_t p = 0; p <= n && out.ok; ++p)
      if (count_surjections(n, p) != factorial(p) * stirling2(n, p)) out.fail(cat("factorization fails at (", n, ",", p, ")"));
  for (std::uint64_t n = 0; n <= 9 && out.ok; ++n)
    for (std::uint64_t p = 0; p <= n && out.ok; ++p)
      if (stirling2(n, p) != oracle::enum_partitions(n, p)) out.fail(cat("{", n, " ", p, "} != enumeration"));
  if (out.ok) out.detail = "factorization n<=60, partitions n<=9";
  return out;
}

Outcome derangements() {
  Outcome out;
  // count_derangements evaluates both formulas and throws if they differ.
  for (std::uint64_t n = 0; n <= 8 && out.ok; ++n)
    if (count_derangements(n) != oracle::enum_maps(n, n, oracle::MapKind::kDerangement))
      out.fail(cat("p_", n, " != enumeration"));
  for (std::uint64_t n = 1; n <= 170 && out.ok; ++n)
    if (!derangement_ratio_within_bound(n)) out.fail(cat("|p_n/n! - 1/e| > 1/(n+1)! at n=", n));
  if (out.ok) out.detail = "enumeration n<=8, exact remainder bound n<=170";
  return out;
}

Outcome inclusion_exclusion() {
  Outcome out;
  std::mt19937_64 rng(20240611);
  std::size_t sieve_checks = 0;
  for (int i = 0; i < 200 && out.ok; ++i) {
    const auto wf = combi::testing::random_weighted_family(rng, 12, 6);
    const auto& f = wf.family;
    const auto& m = wf.measure;
    if (ie_union(f, m) != oracle::direct_union_measure(f, m)) out.fail(cat("union, instance ", i));
    const Rat none = sylvester(f, m);
    if (none != sylvester_grouped(f, m)) out.fail(cat("sylvester forms differ, instance ", i));
    if (none != oracle::direct_none_measure(f, m)) out.fail(cat("sylvester != direct, instance ", i));
    Rat total;
    for (std::uint64_t p = 0; p <= f.size(); ++p, ++sieve_checks) {
      const Rat exactly = sieve(f, m, p);
      if (exactly != oracle::direct_exactly_p_measure(f, m, p)) out.fail(cat("sieve p=", p, ", instance ", i));
      total += exactly;
    }
    if (total != m.total()) out.fail(cat("multiplicities do not partition m(X), instance ", i));
  }
  if (out.ok) out.detail = cat("200 families, ", sieve_checks, " sieve values");
  return out;
}

Outcome surjections_via_ie() {
  Outcome out;
  for (std::uint64_t n = 0; n <= 5 && out.ok; ++n) {
    for (std::uint64_t p = 0; p <= 4 && out.ok; ++p) {
      // Function f: [n] -> [p] is the base-p number with digits f(0..n-1).
      std::size_t functions = 1;
      for (std::uint64_t i = 0; i < n; ++i) functions *= p;
      std::vector<Bitset> missing(p, Bitset(functions));
      for (std::size_t f = 0; f < functions; ++f) {
        std::vector<bool> hit(p, false);
        for (std::size_t rest = f, i = 0; i < n; ++i, rest /= p) hit[rest % p] = true;
        for (std::size_t b = 0; b < p; ++b)
          if (!hit[b]) missing[b].set(f);
      }
      const SetFamily family(functions, std::move(missing));
      const Rat not_onto = ie_union(family, Measure::counting(functions));
      const Rat onto = Rat(static_cast<long>(functions)) - not_onto;
      if (onto != Rat(count_surjections(n, p))) out.fail(cat("n=", n, " p=", p, ": ", onto.str()));
    }
  }
  if (out.ok) out.detail = "n<=5, p<=4";
  return out;
}

Outcome expansions() {
  Outcome out;
  const std::vector<Nat> two_three{Nat(2u), Nat(3u)};
  for (std::uint64_t n = 0; n <= 20 && out.ok; ++n)
    if (evaluate(binomial_expand(n), two_three) != power(Nat(5u), n)) out.fail(cat("(2+3)^", n));
  for (std::uint64_t m = 1; m <= 5 && out.ok; ++m) {
    for (std::uint64_t n = 0; n <= 10 && out.ok; ++n) {
      const Poly p = multinomial_expand(m, n);
      if (Nat(p.term_count()) != binomial_closed_form(m + n - 1, static_cast<std::int64_t>(n)))
        out.fail(cat("term count m=", m, " n=", n));
      if (evaluate(p, std::vector<Nat>(m, Nat(1u))) != power(Nat(m), n)) out.fail(cat("all-ones m=", m, " n=", n));
    }
  }
  if (out.ok) out.detail = "binomial n<=20; multinomial m<=5, n<=10";
  return out;
}

Outcome binet_bounds() {
  Outcome out;
  double worst = std::numeric_limits<double>::infinity();
  std::uint64_t worst_n = 0;
  for (std::uint64_t n = 1; n <= 5000 && out.ok; ++n) {
    const auto r = binet_report(n);
    if (!(r.lower < r.upper)) out.fail(cat("bounds out of order at n=", n));
    if (!r.strict) out.fail(cat("margin not above budget at n=", n));
    if (!r.direct_consistent) out.fail(cat("direct and refined lambda disagree at n=", n));
    const double ratio = std::min(r.upper_margin, r.lower_margin) / r.margin_budget;
    if (ratio < worst) {
      worst = ratio;
      worst_n = n;
    }
  }
  if (out.ok) out.detail = cat("n<=5000, smallest margin/budget ", worst, " at n=", worst_n);
  return out;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  criterion(1, "Pascal fidelity, rows 0-7", 0, pascal_fidelity);
  criterion(2, "10! exact", 0, ten_factorial);
  criterion(3, "binomial closed form/recurrence/oracle", 5.0, binomial_routes);
  criterion(4, "surjections: oracle and recurrence", 0, surjections);
  criterion(5, "Stirling factorization and partitions", 0, stirling_numbers);
  criterion(6, "derangements: oracle and 1/e remainder", 0, derangements);
  criterion(7, "inclusion-exclusion on random families", 10.0, inclusion_exclusion);
  criterion(8, "surjections via inclusion-exclusion", 0, surjections_via_ie);
  criterion(9, "binomial and multinomial expansions", 0, expansions);
  criterion(10, "Binet bounds on lambda_n", 1.0, binet_bounds);
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = total < 60.0;
  std::printf("%s: %d failed, total %.3f s (limit 60 s)\n", g_failures == 0 && in_time ? "ACCEPTED" : "REJECTED",
              g_failures, total);
  return g_failures == 0 && in_time ? 0 : 1;
}
