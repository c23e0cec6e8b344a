#include "combi/family.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "combi/errors.hpp"

namespace combi {

Bitset::Bitset(std::size_t width, std::span<const std::size_t> members) : Bitset(width) {
  for (auto i : members) set(i);
}

Bitset Bitset::full(std::size_t width) {
  Bitset b(width);
  for (std::size_t i = 0; i < width; ++i) b.set(i);
  return b;
}

void Bitset::set(std::size_t i) {
  if (i >= width_)
    throw InputError("element index " + std::to_string(i) + " outside universe of size " +
                     std::to_string(width_));
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Bitset& Bitset::operator&=(const Bitset& rhs) {
  if (rhs.width_ != width_) throw InputError("bitset width mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= rhs.words_[w];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& rhs) {
  if (rhs.width_ != width_) throw InputError("bitset width mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= rhs.words_[w];
  return *this;
}

SetFamily::SetFamily(std::size_t universe_size, std::vector<Bitset> subsets)
    : universe_size_(universe_size), subsets_(std::move(subsets)) {
  for (const auto& s : subsets_) {
    if (s.width() != universe_size_)
      throw InputError("subset width " + std::to_string(s.width()) + " does not match universe size " +
                       std::to_string(universe_size_));
  }
}

SetFamily SetFamily::from_indices(std::size_t universe_size,
                                  const std::vector<std::vector<std::size_t>>& subsets) {
  std::vector<Bitset> bits;
  bits.reserve(subsets.size());
  for (const auto& members : subsets) bits.emplace_back(universe_size, members);
  return SetFamily(universe_size, std::move(bits));
}

Measure::Measure(std::vector<Rat> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].sign() < 0)
      throw InputError("negative weight " + weights_[i].str() + " at element " + std::to_string(i));
  }
}

Measure Measure::counting(std::size_t universe_size) {
  return Measure(std::vector<Rat>(universe_size, Rat(1)));
}

Rat Measure::of(const Bitset& set) const {
  if (set.width() != weights_.size()) throw InputError("measure and set disagree on universe size");
  Rat sum;
  set.for_each([&](std::size_t i) { sum += weights_[i]; });
  return sum;
}

Rat Measure::total() const {
  Rat sum;
  for (const auto& w : weights_) sum += w;
  return sum;
}

}  // namespace combi
