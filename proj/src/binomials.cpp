#include "combi/binomials.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "combi/errors.hpp"

namespace combi {
namespace {

bool in_range(std::uint64_t n, std::int64_t k) {
  return k >= 0 && static_cast<std::uint64_t>(k) <= n;
}

std::atomic<std::uint64_t> g_crosscheck_bound{1024};

// Rows of Pascal's triangle, grown on demand. Rows live in a deque so a row
// stays put while later rows are appended.
class PascalMemo {
 public:
  Nat get(std::uint64_t n, std::uint64_t k) {
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) append_row();
    return rows_[n][k];
  }

 private:
  void append_row() {
    if (rows_.empty()) {
      rows_.push_back({Nat(1u)});
      return;
    }
    const auto& prev = rows_.back();
    std::vector<Nat> row(prev.size() + 1);
    row.front() = Nat(1u);
    row.back() = Nat(1u);
    for (std::size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::deque<std::vector<Nat>> rows_;
};

PascalMemo& memo() {
  static PascalMemo instance;
  return instance;
}

}  // namespace

Nat binomial_closed_form(std::uint64_t n, std::int64_t k) {
  if (!in_range(n, k)) return Nat(0u);
  auto j = static_cast<std::uint64_t>(k);
  if (j > n - j) j = n - j;
  // After step i the accumulator holds C(n-j+i, i), so each division is exact.
  mpz_class acc = 1;
  for (std::uint64_t i = 1; i <= j; ++i) {
    acc *= static_cast<unsigned long>(n - j + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return Nat::from_integer(std::move(acc));
}

Nat binomial_recurrence(std::uint64_t n, std::int64_t k) {
  if (!in_range(n, k)) return Nat(0u);
  return memo().get(n, static_cast<std::uint64_t>(k));
}

std::uint64_t pascal_crosscheck_bound() { return g_crosscheck_bound.load(); }
void set_pascal_crosscheck_bound(std::uint64_t n_max) { g_crosscheck_bound.store(n_max); }

Nat binomial(std::uint64_t n, std::int64_t k) {
  Nat value = binomial_closed_form(n, k);
  if (n <= pascal_crosscheck_bound() && in_range(n, k)) {
    if (binomial_recurrence(n, k) != value)
      throw ConsistencyError("closed form and Pascal recurrence disagree at C(" + std::to_string(n) +
                             ", " + std::to_string(k) + ")");
  }
  return value;
}

std::vector<std::vector<Nat>> pascal_triangle(std::uint64_t n_max) {
  std::vector<std::vector<Nat>> rows;
  rows.reserve(n_max + 1);
  rows.push_back({Nat(1u)});
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto& prev = rows.back();
    std::vector<Nat> row(n + 1);
    // C(n,k) = C(n-1,k) + C(n-1,k-1), with C(n-1,-1) = C(n-1,n) = 0.
    for (std::uint64_t k = 0; k <= n; ++k) {
      if (k < n) row[k] += prev[k];
      if (k > 0) row[k] += prev[k - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Nat multinomial(std::uint64_t n, std::span<const std::int64_t> ks) {
  if (ks.empty()) throw InputError("multinomial needs at least one part");
  mpz_class sum = 0;
  for (auto k : ks) {
    if (!in_range(n, k)) return Nat(0u);
    sum += static_cast<unsigned long>(k);
  }
  if (sum != static_cast<unsigned long>(n)) return Nat(0u);
  Nat denominator(1u);
  for (auto k : ks) denominator *= factorial(static_cast<std::uint64_t>(k));
  return divide_exact(factorial(n), denominator);
}

Nat multiset_count(std::uint64_t m, std::uint64_t n) {
  if (m == 0) throw InputError("multisets need a nonempty symbol set (m >= 1)");
  return binomial(m + n - 1, static_cast<std::int64_t>(n));
}

CompositionStream::CompositionStream(std::uint64_t m, std::uint64_t n) : parts_(m, 0), total_(n) {
  if (m == 0) throw InputError("compositions need at least one part (m >= 1)");
  parts_.front() = n;
}

std::optional<Composition> CompositionStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    // Move one unit out of the rightmost nonzero part that is not the last,
    // and gather everything to its right into the slot just after it.
    std::size_t i = parts_.size() - 1;
    while (i > 0 && parts_[i - 1] == 0) --i;
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    --i;
    const std::uint64_t tail = std::accumulate(parts_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                               parts_.end(), std::uint64_t{0});
    --parts_[i];
    std::fill(parts_.begin() + static_cast<std::ptrdiff_t>(i) + 1, parts_.end(), 0);
    parts_[i + 1] = tail + 1;
  }
  started_ = true;
  return Composition{parts_, total_};
}

std::vector<Composition> compositions(std::uint64_t m, std::uint64_t n) {
  std::vector<Composition> out;
  CompositionStream stream(m, n);
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace combi
