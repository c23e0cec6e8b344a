#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "combi/exactnum.hpp"

namespace combi {

/// C(n, k) for any signed k; 0 whenever k is outside [0, n].
///
/// The multiplicative closed form is authoritative. For n up to the Pascal
/// cross-check bound the value is also looked up in a memoized table built
/// only from Pascal's recurrence, and a disagreement throws ConsistencyError.
Nat binomial(std::uint64_t n, std::int64_t k);

/// The two routes behind binomial(), exposed separately for verification.
Nat binomial_closed_form(std::uint64_t n, std::int64_t k);
Nat binomial_recurrence(std::uint64_t n, std::int64_t k);

/// Largest n for which binomial() consults the Pascal memo (default 1024).
/// The memo is shared and internally synchronized; shrinking the bound
/// does not release rows already built.
std::uint64_t pascal_crosscheck_bound();
void set_pascal_crosscheck_bound(std::uint64_t n_max);

/// Rows 0..n_max of Pascal's triangle, built from the recurrence alone.
std::vector<std::vector<Nat>> pascal_triangle(std::uint64_t n_max);

/// n! / (k_1! ... k_m!); 0 if the k_i do not sum to n or any k_i is outside
/// [0, n]. Throws InputError on an empty `ks`.
Nat multinomial(std::uint64_t n, std::span<const std::int64_t> ks);

/// Number of multisets of size n over m symbols: C(m+n-1, n).
/// Throws InputError for m = 0.
Nat multiset_count(std::uint64_t m, std::uint64_t n);

/// An ordered m-tuple of nonnegative integers with a fixed sum.
struct Composition {
  std::vector<std::uint64_t> parts;
  std::uint64_t total = 0;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Streams every composition of n into m parts exactly once, in
/// lexicographically descending order: (n,0,..,0) first, (0,..,0,n) last.
///
///   CompositionStream s(3, 4);
///   while (auto c = s.next()) use(*c);
class CompositionStream {
 public:
  /// Throws InputError for m = 0.
  CompositionStream(std::uint64_t m, std::uint64_t n);

  std::optional<Composition> next();

 private:
  std::vector<std::uint64_t> parts_;
  std::uint64_t total_;
  bool started_ = false;
  bool done_ = false;
};

/// All compositions from a CompositionStream, collected.
std::vector<Composition> compositions(std::uint64_t m, std::uint64_t n);

}  // namespace combi
