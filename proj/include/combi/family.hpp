#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "combi/exactnum.hpp"

namespace combi {

/// Fixed-width bitset over a universe {0, ..., width-1}.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}
  /// Throws InputError if any index is >= width.
  Bitset(std::size_t width, std::span<const std::size_t> members);
  Bitset(std::size_t width, std::initializer_list<std::size_t> members)
      : Bitset(width, std::span<const std::size_t>(members.begin(), members.size())) {}

  static Bitset full(std::size_t width);

  std::size_t width() const { return width_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i);
  std::size_t count() const;
  bool none() const;

  Bitset& operator&=(const Bitset& rhs);
  Bitset& operator|=(const Bitset& rhs);
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  /// Calls fn(index) for every member, in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1)
        fn(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
    }
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A finite universe X = {0, ..., u-1} and an ordered list A_1..A_n of subsets.
/// Subsets may be empty, repeated, or equal to X.
class SetFamily {
 public:
  SetFamily() = default;
  /// Throws InputError if a subset's width differs from `universe_size`.
  SetFamily(std::size_t universe_size, std::vector<Bitset> subsets);
  /// Throws InputError on an index >= `universe_size`.
  static SetFamily from_indices(std::size_t universe_size,
                                const std::vector<std::vector<std::size_t>>& subsets);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return subsets_.size(); }
  const Bitset& operator[](std::size_t i) const { return subsets_[i]; }
  const std::vector<Bitset>& subsets() const { return subsets_; }

 private:
  std::size_t universe_size_ = 0;
  std::vector<Bitset> subsets_;
};

/// Additive measure on X given by one nonnegative rational weight per element.
class Measure {
 public:
  Measure() = default;
  /// Throws InputError on a negative weight.
  explicit Measure(std::vector<Rat> weights);
  /// All weights 1: m(A) = |A|.
  static Measure counting(std::size_t universe_size);

  std::size_t universe_size() const { return weights_.size(); }
  const Rat& weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Rat>& weights() const { return weights_; }

  /// Sum of the weights of the members of `set`; 0 for the empty set.
  Rat of(const Bitset& set) const;
  /// m(X).
  Rat total() const;

 private:
  std::vector<Rat> weights_;
};

}  // namespace combi
