#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace commdom {

/// Fixed-width bit vector over a universe [0, size). Used for subsets of group
/// elements (centers, centralizers, subgroups) and for graph vertex sets and
/// adjacency rows.
class SubsetMask {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  SubsetMask() = default;
  explicit SubsetMask(std::size_t universe_size, bool filled = false)
      : size_(universe_size), words_((universe_size + kWordBits - 1) / kWordBits, 0) {
    if (filled) fill();
  }

  static SubsetMask full(std::size_t universe_size) { return SubsetMask(universe_size, true); }

  std::size_t universe_size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  void fill() {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or universe_size() if empty.
  std::size_t first() const { return next(0); }

  /// Index of the lowest set bit >= from, or universe_size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  SubsetMask& operator|=(const SubsetMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  SubsetMask& operator&=(const SubsetMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  SubsetMask& operator-=(const SubsetMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  SubsetMask complement() const {
    SubsetMask out(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }

  bool intersects(const SubsetMask& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const SubsetMask& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool is_subset_of(const SubsetMask& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  std::size_t hash() const {
    // FNV-1a over the words; stable across runs.
    std::uint64_t h = 1469598103934665603ULL ^ size_;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

private:
  void trim() {
    if (size_ % kWordBits && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const { return m.hash(); }
};

}  // namespace commdom
