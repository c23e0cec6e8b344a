#pragma once

#include <cstdint>

#include "combi/exactnum.hpp"

namespace combi {

/// Bijections of an n-set onto itself: n!.
Nat count_permutations(std::uint64_t n);

/// Functions from an m-set to an n-set: n^m (0^0 = 1).
Nat count_functions(std::uint64_t m, std::uint64_t n);

/// Injections from an m-set into an n-set: n!/(n-m)!, or 0 when m > n.
Nat count_injections(std::uint64_t m, std::uint64_t n);

/// Surjections from an n-set onto a p-set:
///   S(n,p) = sum_{k=0}^{p-1} (-1)^k C(p,k) (p-k)^n,
/// summed with signed big integers. S(0,0) = 1, S(n,0) = 0 for n >= 1, and
/// S(n,p) = 0 for p > n.
Nat count_surjections(std::uint64_t n, std::uint64_t p);

/// Stirling number of the second kind {n p} = S(n,p) / p!.
/// Throws ConsistencyError if the division is not exact.
Nat stirling2(std::uint64_t n, std::uint64_t p);

/// Fixed-point-free permutations of an n-set (p_0 = 1). Evaluated both as the
/// alternating sum of C(n,k)(n-k)! and as n! * sum_k (-1)^k/k! in exact
/// rationals; throws ConsistencyError if the two differ.
Nat count_derangements(std::uint64_t n);

}  // namespace combi
