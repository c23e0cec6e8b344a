#include "combi/inclexcl.hpp"

#include <bit>
#include <string>
#include <vector>

#include "combi/binomials.hpp"
#include "combi/errors.hpp"

namespace combi {
namespace {

// The measure rescaled to integers: weight_i = scaled[i] / denominator.
// Sums over intersections then stay in plain big integers.
struct ScaledMeasure {
  std::vector<mpz_class> scaled;
  mpz_class denominator = 1;

  explicit ScaledMeasure(const Measure& m) {
    for (const auto& w : m.weights()) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(),
                                              w.value().get_den_mpz_t());
    scaled.reserve(m.universe_size());
    for (const auto& w : m.weights()) scaled.push_back(w.numerator() * (denominator / w.denominator()));
  }

  mpz_class of(const Bitset& set) const {
    mpz_class sum = 0;
    set.for_each([&](std::size_t i) { sum += scaled[i]; });
    return sum;
  }

  Rat unscale(const mpz_class& value) const { return Rat(value, denominator); }
};

void check_inputs(const SetFamily& family, const Measure& measure, IeLimits limits) {
  if (family.universe_size() != measure.universe_size())
    throw InputError("family universe has " + std::to_string(family.universe_size()) +
                     " elements but measure has " + std::to_string(measure.universe_size()));
  if (family.size() > limits.max_sets)
    throw CapacityError("family has " + std::to_string(family.size()) + " sets; the limit is " +
                        std::to_string(limits.max_sets));
}

// Calls fn(|I|, scaled m(∩_{i∈I} A_i)) for every nonempty I, masks ascending.
template <typename Fn>
void for_each_intersection(const SetFamily& family, const ScaledMeasure& measure, Fn&& fn) {
  const std::size_t n = family.size();
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    auto rest = mask;
    Bitset meet = family[static_cast<std::size_t>(std::countr_zero(rest))];
    rest &= rest - 1;
    for (; rest != 0 && !meet.none(); rest &= rest - 1) meet &= family[static_cast<std::size_t>(std::countr_zero(rest))];
    fn(static_cast<std::size_t>(std::popcount(mask)), measure.of(meet));
  }
}

// level[k] = sum_{|I|=k} m(∩_{i∈I} A_i), level[0] = m(X); scaled.
std::vector<mpz_class> level_sums(const SetFamily& family, const ScaledMeasure& measure) {
  std::vector<mpz_class> level(family.size() + 1, mpz_class(0));
  level[0] = measure.of(Bitset::full(family.universe_size()));
  for_each_intersection(family, measure, [&](std::size_t k, const mpz_class& m) { level[k] += m; });
  return level;
}

}  // namespace

Rat ie_union(const SetFamily& family, const Measure& measure, IeLimits limits) {
  check_inputs(family, measure, limits);
  const ScaledMeasure scaled(measure);
  mpz_class sum = 0;
  for_each_intersection(family, scaled, [&](std::size_t k, const mpz_class& m) {
    if (k % 2 == 1)
      sum += m;
    else
      sum -= m;
  });
  return scaled.unscale(sum);
}

Rat sylvester(const SetFamily& family, const Measure& measure, IeLimits limits) {
  check_inputs(family, measure, limits);
  const ScaledMeasure scaled(measure);
  mpz_class sum = scaled.of(Bitset::full(family.universe_size()));
  for_each_intersection(family, scaled, [&](std::size_t k, const mpz_class& m) {
    if (k % 2 == 0)
      sum += m;
    else
      sum -= m;
  });
  return scaled.unscale(sum);
}

Rat sylvester_grouped(const SetFamily& family, const Measure& measure, IeLimits limits) {
  check_inputs(family, measure, limits);
  const ScaledMeasure scaled(measure);
  const auto level = level_sums(family, scaled);
  mpz_class sum = 0;
  for (std::size_t k = 0; k < level.size(); ++k) {
    if (k % 2 == 0)
      sum += level[k];
    else
      sum -= level[k];
  }
  return scaled.unscale(sum);
}

Rat sieve(const SetFamily& family, const Measure& measure, std::uint64_t p, IeLimits limits) {
  check_inputs(family, measure, limits);
  if (p > family.size())
    throw InputError("p = " + std::to_string(p) + " exceeds the number of sets " +
                     std::to_string(family.size()));
  const ScaledMeasure scaled(measure);
  const auto level = level_sums(family, scaled);
  mpz_class sum = 0;
  for (std::uint64_t k = p; k < level.size(); ++k) {
    const mpz_class term = binomial(k, static_cast<std::int64_t>(p)).value() * level[k];
    if ((k - p) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return scaled.unscale(sum);
}

}  // namespace combi
