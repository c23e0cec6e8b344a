#include "combi/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "combi/errors.hpp"

namespace combi::oracle {
namespace {

void check_shared_universe(const SetFamily& family, const Measure& measure) {
  if (family.universe_size() != measure.universe_size())
    throw InputError("family universe has " + std::to_string(family.universe_size()) +
                     " elements but measure has " + std::to_string(measure.universe_size()));
}

bool matches(const std::vector<std::uint64_t>& image, std::uint64_t n, MapKind kind) {
  if (kind == MapKind::kAll) return true;
  std::vector<unsigned> hits(n, 0);
  for (auto b : image) ++hits[b];
  const bool injective = std::all_of(hits.begin(), hits.end(), [](unsigned h) { return h <= 1; });
  const bool surjective = std::all_of(hits.begin(), hits.end(), [](unsigned h) { return h >= 1; });
  switch (kind) {
    case MapKind::kInjective:
      return injective;
    case MapKind::kSurjective:
      return surjective;
    case MapKind::kBijective:
      return injective && surjective;
    case MapKind::kDerangement:
      if (!(injective && surjective)) return false;
      for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] == i) return false;
      return true;
    case MapKind::kAll:
      break;
  }
  return true;
}

// Extends the restricted growth string a[0..pos) one position at a time.
// `blocks` is max(a[0..pos)) + 1.
void count_rgs(std::uint64_t pos, std::uint64_t n, std::uint64_t blocks, std::uint64_t p,
               std::uint64_t& count) {
  if (blocks > p) return;
  if (pos == n) {
    if (blocks == p) ++count;
    return;
  }
  for (std::uint64_t label = 0; label <= blocks; ++label)
    count_rgs(pos + 1, n, label == blocks ? blocks + 1 : blocks, p, count);
}

}  // namespace

Nat enum_subsets_k(std::uint64_t n, std::int64_t k) {
  if (n > kMaxSubsetUniverse)
    throw CapacityError("subset enumeration is capped at n = " + std::to_string(kMaxSubsetUniverse));
  std::uint64_t count = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask)
    if (static_cast<std::int64_t>(std::popcount(mask)) == k) ++count;
  return Nat(count);
}

MapKind parse_map_kind(std::string_view name) {
  if (name == "all") return MapKind::kAll;
  if (name == "injective") return MapKind::kInjective;
  if (name == "surjective") return MapKind::kSurjective;
  if (name == "bijective") return MapKind::kBijective;
  if (name == "derangement") return MapKind::kDerangement;
  throw InputError("unknown map kind '" + std::string(name) + "'");
}

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::kAll:
      return "all";
    case MapKind::kInjective:
      return "injective";
    case MapKind::kSurjective:
      return "surjective";
    case MapKind::kBijective:
      return "bijective";
    case MapKind::kDerangement:
      return "derangement";
  }
  return "?";
}

Nat enum_maps(std::uint64_t m, std::uint64_t n, MapKind kind) {
  if (m > kMaxMapSide || n > kMaxMapSide)
    throw CapacityError("map enumeration is capped at m, n <= " + std::to_string(kMaxMapSide));
  if (kind == MapKind::kDerangement && m != n)
    throw InputError("derangements need equal domain and codomain sizes");
  if (m > 0 && n == 0) return Nat(0u);

  // Odometer over image arrays in [n]^m; the m = 0 case yields the empty map once.
  std::vector<std::uint64_t> image(m, 0);
  std::uint64_t count = 0;
  while (true) {
    if (matches(image, n, kind)) ++count;
    std::size_t i = 0;
    while (i < m && ++image[i] == n) image[i++] = 0;
    if (i == m) break;
  }
  return Nat(count);
}

Nat enum_partitions(std::uint64_t n, std::uint64_t p) {
  if (n > kMaxPartitionSize)
    throw CapacityError("partition enumeration is capped at n = " + std::to_string(kMaxPartitionSize));
  if (n == 0) return Nat(p == 0 ? 1u : 0u);
  std::uint64_t count = 0;
  count_rgs(1, n, 1, p, count);  // a[0] = 0 opens the first block
  return Nat(count);
}

Rat direct_union_measure(const SetFamily& family, const Measure& measure) {
  check_shared_universe(family, measure);
  Bitset all(family.universe_size());
  for (const auto& s : family.subsets()) all |= s;
  return measure.of(all);
}

Rat direct_exactly_p_measure(const SetFamily& family, const Measure& measure, std::uint64_t p) {
  check_shared_universe(family, measure);
  if (p > family.size())
    throw InputError("p = " + std::to_string(p) + " exceeds the number of sets " +
                     std::to_string(family.size()));
  Rat sum;
  for (std::size_t x = 0; x < family.universe_size(); ++x) {
    std::uint64_t multiplicity = 0;
    for (const auto& s : family.subsets())
      if (s.test(x)) ++multiplicity;
    if (multiplicity == p) sum += measure.weight(x);
  }
  return sum;
}

}  // namespace combi::oracle
