#pragma once

#include <cstddef>
#include <cstdint>

#include "combi/exactnum.hpp"
#include "combi/family.hpp"

namespace combi {

/// Every formula here walks all 2^n index subsets, so n is capped.
struct IeLimits {
  std::size_t max_sets = 20;
};

// All four functions throw InputError when the family and the measure
// disagree on the universe size, and CapacityError when the family has more
// than limits.max_sets subsets. Index subsets I are visited as bitmasks in
// increasing numeric order; the empty intersection is taken to be X.

/// m(A_1 ∪ ... ∪ A_n) = sum over nonempty I of (-1)^{|I|-1} m(∩_{i∈I} A_i).
/// 0 for an empty family.
Rat ie_union(const SetFamily& family, const Measure& measure, IeLimits limits = {});

/// Measure of the elements in none of the A_i:
/// m(X) + sum over nonempty I of (-1)^{|I|} m(∩_{i∈I} A_i).
Rat sylvester(const SetFamily& family, const Measure& measure, IeLimits limits = {});

/// The same quantity with terms grouped by |I| = k:
/// sum_{k=0}^{n} (-1)^k sum_{|I|=k} m(∩_{i∈I} A_i).
Rat sylvester_grouped(const SetFamily& family, const Measure& measure, IeLimits limits = {});

/// Measure of the elements in exactly p of the A_i:
/// sum_{k=p}^{n} (-1)^{k-p} C(k,p) sum_{|I|=k} m(∩_{i∈I} A_i).
/// Throws InputError for p > n.
Rat sieve(const SetFamily& family, const Measure& measure, std::uint64_t p, IeLimits limits = {});

}  // namespace combi
