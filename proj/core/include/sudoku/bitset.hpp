#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace sudoku {

/// Fixed-width bit set over [0, Bits) with set-bit iteration.
template <std::size_t Bits>
class BitSet {
  static constexpr std::size_t kWords = (Bits + 63) / 64;
  using Word = std::uint64_t;

 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = unsigned;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = unsigned;

    iterator() = default;
    iterator(const BitSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    unsigned operator*() const { return static_cast<unsigned>(pos_); }
    iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    const BitSet* set_ = nullptr;
    std::size_t pos_ = Bits;
  };

  constexpr BitSet() = default;

  static constexpr std::size_t size() noexcept { return Bits; }

  constexpr bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  constexpr BitSet& set(std::size_t i) noexcept {
    words_[i / 64] |= Word{1} << (i % 64);
    return *this;
  }
  constexpr BitSet& reset(std::size_t i) noexcept {
    words_[i / 64] &= ~(Word{1} << (i % 64));
    return *this;
  }

  constexpr std::size_t count() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  constexpr bool any() const noexcept {
    for (Word w : words_)
      if (w) return true;
    return false;
  }
  constexpr bool none() const noexcept { return !any(); }

  /// Smallest member >= from, or size() if there is none.
  constexpr std::size_t next(std::size_t from) const noexcept {
    if (from >= Bits) return Bits;
    std::size_t word = from / 64;
    Word bits = words_[word] & (~Word{0} << (from % 64));
    while (true) {
      if (bits) return word * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      if (++word == kWords) return Bits;
      bits = words_[word];
    }
  }
  constexpr std::size_t first() const noexcept { return next(0); }

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, Bits); }

  constexpr BitSet& operator&=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr BitSet& operator|=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr BitSet operator~() const noexcept {
    BitSet out;
    for (std::size_t i = 0; i < kWords; ++i) out.words_[i] = ~words_[i];
    if constexpr (Bits % 64 != 0) out.words_[kWords - 1] &= (Word{1} << (Bits % 64)) - 1;
    return out;
  }
  friend constexpr BitSet operator&(BitSet a, const BitSet& b) noexcept { return a &= b; }
  friend constexpr BitSet operator|(BitSet a, const BitSet& b) noexcept { return a |= b; }
  friend constexpr bool operator==(const BitSet&, const BitSet&) = default;

 private:
  std::array<Word, kWords> words_{};
};

}  // namespace sudoku
