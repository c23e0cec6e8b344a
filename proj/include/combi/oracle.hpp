#pragma once

// Exhaustive enumerators used as independent witnesses for the closed forms.
// Nothing here may depend on binomials, mapscount or inclexcl; the build
// enforces this by linking combi_oracle against combi_core only.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "combi/exactnum.hpp"
#include "combi/family.hpp"

namespace combi::oracle {

inline constexpr std::uint64_t kMaxSubsetUniverse = 20;
inline constexpr std::uint64_t kMaxMapSide = 8;
inline constexpr std::uint64_t kMaxPartitionSize = 10;

/// Number of size-k subsets of {0..n-1}, by scanning all 2^n bitmasks.
/// Throws CapacityError for n > 20.
Nat enum_subsets_k(std::uint64_t n, std::int64_t k);

enum class MapKind { kAll, kInjective, kSurjective, kBijective, kDerangement };

/// Parses "all", "injective", "surjective", "bijective", "derangement".
MapKind parse_map_kind(std::string_view name);
std::string_view to_string(MapKind kind);

/// Generates every map [m] -> [n] as an image array and counts those of the
/// given kind. Throws CapacityError if m or n exceeds 8, InputError for a
/// derangement request with m != n.
Nat enum_maps(std::uint64_t m, std::uint64_t n, MapKind kind);

/// Set partitions of [n] into exactly p nonempty blocks, enumerated as
/// restricted growth strings. Throws CapacityError for n > 10.
Nat enum_partitions(std::uint64_t n, std::uint64_t p);

/// m(A_1 ∪ ... ∪ A_n) from the literal union.
Rat direct_union_measure(const SetFamily& family, const Measure& measure);

/// Measure of the elements lying in exactly p of the subsets, by counting
/// each element's membership multiplicity. Throws InputError for p > n.
Rat direct_exactly_p_measure(const SetFamily& family, const Measure& measure, std::uint64_t p);

/// Elements in none of the subsets (p = 0).
inline Rat direct_none_measure(const SetFamily& family, const Measure& measure) {
  return direct_exactly_p_measure(family, measure, 0);
}

}  // namespace combi::oracle
